#pragma once

#include <algorithm>
#include <iomanip>
#include <limits>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "avcs/error.hpp"
#include "avcs/topology.hpp"

namespace avcs {

/// Ordered anchor (beacon) nodes; one virtual dimension per anchor.
struct AnchorSet {
  std::vector<NodeId> ids;

  int dims() const { return static_cast<int>(ids.size()); }
};

inline void validate_anchors(const AnchorSet& a, int node_count) {
  if (a.dims() < 3) throw ConfigError("a virtual coordinate system needs at least 3 anchors");
  for (std::size_t i = 0; i < a.ids.size(); ++i) {
    if (a.ids[i] < 0 || a.ids[i] >= node_count) throw ConfigError("anchor id " + std::to_string(a.ids[i]) + " does not exist");
    for (std::size_t j = 0; j < i; ++j)
      if (a.ids[i] == a.ids[j]) throw ConfigError("duplicate anchor id " + std::to_string(a.ids[i]));
  }
}

/// Nodes nearest to the deployment corners, taken in the order bottom-left,
/// bottom-right, top-right, top-left. Ties go to the lowest id.
inline AnchorSet corner_anchors(const Deployment& d, int dims) {
  if (dims < 3 || dims > 4) throw ConfigError("corner anchors support 3 or 4 dimensions");
  const Point corners[4] = {{0.0, 0.0}, {d.width, 0.0}, {d.width, d.height}, {0.0, d.height}};
  AnchorSet a;
  for (int k = 0; k < dims; ++k) {
    NodeId best = 0;
    double best_d2 = std::numeric_limits<double>::infinity();
    for (NodeId u = 0; u < d.size(); ++u) {
      const double d2 = squared_distance(d.positions[u], corners[k]);
      if (d2 < best_d2) {
        best_d2 = d2;
        best = u;
      }
    }
    a.ids.push_back(best);
  }
  return a;
}

/// Row-major per-node coordinate table.
template <class T>
class CoordTable {
 public:
  CoordTable() = default;
  CoordTable(int nodes, int dims) : nodes_(nodes), dims_(dims), values_(static_cast<std::size_t>(nodes) * dims) {}

  int nodes() const { return nodes_; }
  int dims() const { return dims_; }
  std::span<const T> operator[](NodeId u) const { return {values_.data() + static_cast<std::size_t>(u) * dims_, static_cast<std::size_t>(dims_)}; }
  std::span<T> operator[](NodeId u) { return {values_.data() + static_cast<std::size_t>(u) * dims_, static_cast<std::size_t>(dims_)}; }
  std::span<const T> values() const { return values_; }

  friend bool operator==(const CoordTable&, const CoordTable&) = default;

 private:
  int nodes_ = 0;
  int dims_ = 0;
  std::vector<T> values_;
};

/// Integer hop-count coordinates V(u), one dimension per anchor.
using VirtualCoords = CoordTable<int>;

enum class AlignRule {
  self_weighted,    // (neighbour mean + own) / 2
  uniform_average,  // (neighbour sum + own) / (n + 1)
};

inline std::string_view to_string(AlignRule r) {
  return r == AlignRule::self_weighted ? "self-weighted" : "uniform-average";
}

/// Real-valued coordinates after `depth` alignment rounds.
struct AlignedCoords {
  CoordTable<double> values;
  int depth = 0;
  AlignRule rule = AlignRule::uniform_average;

  std::span<const double> operator[](NodeId u) const { return values[u]; }
};

/// Planar coordinates used for geographic routing.
struct GeoCoords {
  std::vector<Point> positions;

  Point operator[](NodeId u) const { return positions[u]; }
};

inline std::vector<int> hop_counts(const Topology& t, NodeId anchor) {
  if (anchor < 0 || anchor >= t.size()) throw ConfigError("anchor " + std::to_string(anchor) + " does not exist");
  return bfs_hops(t, anchor);
}

/// Throws ScenarioError when some node cannot reach some anchor.
inline VirtualCoords build_vcs(const Topology& t, const AnchorSet& anchors) {
  validate_anchors(anchors, t.size());
  VirtualCoords vc(t.size(), anchors.dims());
  for (int k = 0; k < anchors.dims(); ++k) {
    const auto hops = hop_counts(t, anchors.ids[k]);
    for (NodeId u = 0; u < t.size(); ++u) {
      if (hops[u] == kUnreachable)
        throw ScenarioError("node " + std::to_string(u) + " is unreachable from anchor " + std::to_string(anchors.ids[k]));
      vc[u][k] = hops[u];
    }
  }
  return vc;
}

/// First violation of the hop-count Lipschitz rule (|V(u)_i - V(v)_i| <= 1 on
/// every edge) and anchor self-distance 0, or nullopt when the table is valid.
inline std::optional<std::string> check_vcs(const Topology& t, const AnchorSet& anchors, const VirtualCoords& vc) {
  for (int k = 0; k < anchors.dims(); ++k)
    if (vc[anchors.ids[k]][k] != 0) return "anchor " + std::to_string(anchors.ids[k]) + " is not at 0 in its own dimension";
  for (NodeId u = 0; u < t.size(); ++u) {
    for (int k = 0; k < vc.dims(); ++k)
      if (vc[u][k] < 0) return "negative coordinate at node " + std::to_string(u);
    for (NodeId v : t.neighbors(u))
      for (int k = 0; k < vc.dims(); ++k)
        if (std::abs(vc[u][k] - vc[v][k]) > 1) return "edge " + std::to_string(u) + "-" + std::to_string(v) + " breaks the hop rule";
  }
  return std::nullopt;
}

/// Synchronous neighbourhood averaging: every round reads only the previous
/// round's values. Isolated nodes keep their value under both rules.
inline AlignedCoords align(const VirtualCoords& vc, const Topology& t, int depth, AlignRule rule) {
  if (depth < 0) throw ConfigError("align_depth must be non-negative");
  if (vc.nodes() != t.size()) throw ConfigError("coordinate table does not match the topology");
  const int n = vc.nodes();
  const int k = vc.dims();
  CoordTable<double> cur(n, k);
  for (NodeId u = 0; u < n; ++u)
    for (int i = 0; i < k; ++i) cur[u][i] = vc[u][i];
  CoordTable<double> next(n, k);
  for (int round = 0; round < depth; ++round) {
    for (NodeId u = 0; u < n; ++u) {
      const auto nbrs = t.neighbors(u);
      const auto own = cur[u];
      auto out = next[u];
      if (nbrs.empty()) {
        std::copy(own.begin(), own.end(), out.begin());
        continue;
      }
      const double count = static_cast<double>(nbrs.size());
      for (int i = 0; i < k; ++i) {
        double sum = 0.0;
        for (NodeId v : nbrs) sum += cur[v][i];
        out[i] = rule == AlignRule::self_weighted ? (sum / count + own[i]) / 2.0 : (sum + own[i]) / (count + 1.0);
      }
    }
    std::swap(cur, next);
  }
  return {std::move(cur), depth, rule};
}

inline GeoCoords geo_view(const Topology& t, const PerceivedPositions* perceived = nullptr) {
  if (perceived) return {perceived->positions};
  return {{t.positions().begin(), t.positions().end()}};
}

// Header `# depth <d> rule <rule> anchors <ids...>`, then `<id> <c_1> ... <c_k>`.
inline void write_coords(std::ostream& out, const AlignedCoords& ac, const AnchorSet& anchors) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(6);
  s << "# depth " << ac.depth << " rule " << to_string(ac.rule) << " anchors";
  for (NodeId a : anchors.ids) s << ' ' << a;
  s << '\n';
  for (NodeId u = 0; u < ac.values.nodes(); ++u) {
    s << u;
    for (double c : ac[u]) s << ' ' << c;
    s << '\n';
  }
  out << s.str();
}

}  // namespace avcs
