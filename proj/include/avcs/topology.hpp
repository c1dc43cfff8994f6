#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <iomanip>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "avcs/error.hpp"
#include "avcs/geometry.hpp"
#include "avcs/rng.hpp"

namespace avcs {

using NodeId = int;
inline constexpr int kUnreachable = -1;

/// A set of nodes with true planar positions. Node ids are the dense indices
/// [0, size()) into `positions`.
struct Deployment {
  std::vector<Point> positions;
  double width = 0.0;
  double height = 0.0;

  int size() const { return static_cast<int>(positions.size()); }
  bool contains(Point p) const { return p.x >= 0.0 && p.x <= width && p.y >= 0.0 && p.y <= height; }
};

/// Region whose nodes are removed to create a physical void.
struct VoidSpec {
  enum class Kind { disc, rectangle };

  Kind kind = Kind::disc;
  Point center;
  double radius = 0.0;       // disc
  double half_width = 0.0;   // rectangle
  double half_height = 0.0;  // rectangle

  static VoidSpec disc(Point c, double r) { return {Kind::disc, c, r, 0.0, 0.0}; }
  static VoidSpec rectangle(Point c, double hw, double hh) { return {Kind::rectangle, c, 0.0, hw, hh}; }

  // Boundary points count as inside.
  bool contains(Point p) const {
    if (kind == Kind::disc) return squared_distance(p, center) <= radius * radius;
    return std::abs(p.x - center.x) <= half_width && std::abs(p.y - center.y) <= half_height;
  }
};

/// rows x cols nodes at cell centres, ids assigned row-major from the bottom row.
inline Deployment generate_grid(int rows, int cols, double spacing) {
  if (rows < 1 || cols < 1 || !(spacing > 0.0)) throw ConfigError("grid needs rows, cols >= 1 and spacing > 0");
  Deployment d;
  d.width = cols * spacing;
  d.height = rows * spacing;
  d.positions.reserve(static_cast<std::size_t>(rows) * cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) d.positions.push_back({(c + 0.5) * spacing, (r + 0.5) * spacing});
  return d;
}

// Id of the grid node in column x, row y of a generate_grid deployment.
inline NodeId grid_node(int cols, int x, int y) { return y * cols + x; }

inline void validate_void(const Deployment& d, const VoidSpec& v) {
  const bool positive = v.kind == VoidSpec::Kind::disc ? v.radius > 0.0 : (v.half_width > 0.0 && v.half_height > 0.0);
  if (!positive) throw ConfigError("void extents must be positive");
  if (!d.contains(v.center)) throw ConfigError("void centre lies outside the deployment bounds");
}

/// Removes every node inside any of the regions. Survivors keep their relative
/// order and are renumbered densely.
inline Deployment carve_voids(const Deployment& d, std::span<const VoidSpec> voids) {
  for (const auto& v : voids) validate_void(d, v);
  Deployment out;
  out.width = d.width;
  out.height = d.height;
  for (const Point& p : d.positions) {
    const bool removed = std::any_of(voids.begin(), voids.end(), [&](const VoidSpec& v) { return v.contains(p); });
    if (!removed) out.positions.push_back(p);
  }
  return out;
}

/// Smallest disc radius about `center` that removes exactly `count` nodes, placed
/// midway between the count-th and (count+1)-th node distances. nullopt when
/// distance ties make the count unattainable.
inline std::optional<double> disc_radius_removing(const Deployment& d, Point center, int count) {
  if (count <= 0 || count >= d.size()) return std::nullopt;
  std::vector<double> dist;
  dist.reserve(d.positions.size());
  for (const Point& p : d.positions) dist.push_back(planar_euclidean(p, center));
  std::sort(dist.begin(), dist.end());
  const double inside = dist[count - 1];
  const double outside = dist[count];
  if (!(inside < outside)) return std::nullopt;
  return 0.5 * (inside + outside);
}

/// n positions i.i.d. uniform over [0, width) x [0, height) from std::mt19937_64(seed).
inline Deployment generate_random(int n, double width, double height, std::uint64_t seed) {
  if (n < 1 || !(width > 0.0) || !(height > 0.0)) throw ConfigError("random deployment needs n >= 1 and a positive area");
  Rng rng(seed);
  Deployment d;
  d.width = width;
  d.height = height;
  d.positions.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double x = rng.uniform() * width;
    const double y = rng.uniform() * height;
    d.positions.push_back({x, y});
  }
  return d;
}

/// Connectivity over a deployment. Built either by the unit-disk rule or from an
/// explicit edge list (hand-made fixtures). Immutable once constructed.
class Topology {
 public:
  Topology() = default;

  static Topology unit_disk(Deployment d, double radio_range) {
    if (!(radio_range > 0.0)) throw ConfigError("radio_range must be positive");
    Topology t;
    t.deployment_ = std::move(d);
    t.range_ = radio_range;
    const int n = t.deployment_.size();
    t.adjacency_.assign(n, {});
    const double r2 = radio_range * radio_range;
    const auto& pos = t.deployment_.positions;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        const double d2 = squared_distance(pos[u], pos[v]);
        if (d2 > 0.0 && d2 <= r2) {
          t.adjacency_[u].push_back(v);
          t.adjacency_[v].push_back(u);
        }
      }
    }
    t.finish();
    return t;
  }

  static Topology from_edges(Deployment d, double nominal_range, std::span<const std::pair<NodeId, NodeId>> edges) {
    Topology t;
    t.deployment_ = std::move(d);
    t.range_ = nominal_range;
    t.adjacency_.assign(t.deployment_.size(), {});
    for (auto [u, v] : edges) {
      if (u == v || u < 0 || v < 0 || u >= t.size() || v >= t.size()) throw ConfigError("invalid fixture edge");
      t.adjacency_[u].push_back(v);
      t.adjacency_[v].push_back(u);
    }
    for (auto& a : t.adjacency_) {
      std::sort(a.begin(), a.end());
      a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    t.finish();
    return t;
  }

  int size() const { return deployment_.size(); }
  const Deployment& deployment() const { return deployment_; }
  std::span<const Point> positions() const { return deployment_.positions; }
  Point position(NodeId u) const { return deployment_.positions[u]; }
  double radio_range() const { return range_; }
  std::span<const NodeId> neighbors(NodeId u) const { return adjacency_[u]; }
  bool adjacent(NodeId u, NodeId v) const { return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v); }
  std::size_t edge_count() const { return edges_; }

  // Mean neighbour count over all nodes, boundary nodes included.
  double mean_degree() const { return size() == 0 ? 0.0 : 2.0 * static_cast<double>(edges_) / size(); }

  // Component label per node; labels are dense and ordered by lowest member id.
  const std::vector<int>& components() const { return component_; }
  int component_count() const { return component_count_; }
  bool connected() const { return component_count_ <= 1; }
  bool same_component(NodeId u, NodeId v) const { return component_[u] == component_[v]; }

 private:
  void finish() {
    edges_ = 0;
    for (auto& a : adjacency_) {
      std::sort(a.begin(), a.end());
      edges_ += a.size();
    }
    edges_ /= 2;
    component_.assign(size(), -1);
    component_count_ = 0;
    std::vector<NodeId> stack;
    for (NodeId s = 0; s < size(); ++s) {
      if (component_[s] != -1) continue;
      component_[s] = component_count_;
      stack.push_back(s);
      while (!stack.empty()) {
        const NodeId u = stack.back();
        stack.pop_back();
        for (NodeId v : adjacency_[u])
          if (component_[v] == -1) {
            component_[v] = component_count_;
            stack.push_back(v);
          }
      }
      ++component_count_;
    }
  }

  Deployment deployment_;
  double range_ = 0.0;
  std::vector<std::vector<NodeId>> adjacency_;
  std::size_t edges_ = 0;
  std::vector<int> component_;
  int component_count_ = 0;
};

inline Topology build_udg(Deployment d, double radio_range) { return Topology::unit_disk(std::move(d), radio_range); }

/// Radio range whose unit-disk graph has mean degree as close as possible to
/// `target`: k = round(target * n / 2) pairs in range. Returns the midpoint
/// between the k-th smallest pairwise distance and the next larger one, so
/// the graph does not hinge on a boundary comparison.
inline double range_for_mean_degree(const Deployment& d, double target) {
  const int n = d.size();
  if (n < 2 || !(target > 0.0)) throw ConfigError("mean-degree target needs >= 2 nodes and a positive degree");
  std::vector<double> dist;
  dist.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) dist.push_back(squared_distance(d.positions[u], d.positions[v]));
  const auto edges = static_cast<std::size_t>(std::llround(target * n / 2.0));
  if (edges == 0 || edges > dist.size()) throw ConfigError("mean-degree target is out of range for this deployment");
  std::nth_element(dist.begin(), dist.begin() + (edges - 1), dist.end());
  const double kth = dist[edges - 1];
  double next = kth;
  for (auto it = dist.begin() + edges; it != dist.end(); ++it)
    if (*it > kth && (next == kth || *it < next)) next = *it;
  return (std::sqrt(kth) + std::sqrt(next)) / 2.0;
}

/// Breadth-first hop distance from `source`; kUnreachable for other components.
inline std::vector<int> bfs_hops(const Topology& t, NodeId source) {
  std::vector<int> hops(t.size(), kUnreachable);
  std::deque<NodeId> queue{source};
  hops[source] = 0;
  while (!queue.empty()) {
    const NodeId u = queue.front();
    queue.pop_front();
    for (NodeId v : t.neighbors(u))
      if (hops[v] == kUnreachable) {
        hops[v] = hops[u] + 1;
        queue.push_back(v);
      }
  }
  return hops;
}

/// Positions the nodes believe they have. Connectivity is always derived from
/// the true positions; only routing decisions see these.
struct PerceivedPositions {
  std::vector<Point> positions;
  double error_fraction = 0.0;
  std::uint64_t seed = 0;
};

/// Offsets each node by a point drawn uniformly from the disc of radius
/// error_fraction * radio_range, using std::mt19937_64(seed) in node order.
inline PerceivedPositions perturb_positions(const Topology& t, double error_fraction, std::uint64_t seed) {
  if (!(error_fraction >= 0.0 && error_fraction <= 1.0)) throw ConfigError("loc_error must lie in [0, 1]");
  PerceivedPositions p;
  p.error_fraction = error_fraction;
  p.seed = seed;
  p.positions.assign(t.positions().begin(), t.positions().end());
  if (error_fraction == 0.0) return p;
  Rng rng(seed);
  const double radius = error_fraction * t.radio_range();
  for (Point& q : p.positions) {
    const Point off = rng.in_disc(radius);
    q.x += off.x;
    q.y += off.y;
  }
  return p;
}

// Line format: `nodes <n> width <w> height <h> range <r>`, then `<id> <x> <y>`
// per node, then `<u> <v>` per edge with u < v. Reals use 6 fractional digits.
inline void write_topology(std::ostream& out, const Topology& t) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(6);
  s << "nodes " << t.size() << " width " << t.deployment().width << " height " << t.deployment().height << " range "
    << t.radio_range() << '\n';
  for (NodeId u = 0; u < t.size(); ++u) s << u << ' ' << t.position(u).x << ' ' << t.position(u).y << '\n';
  for (NodeId u = 0; u < t.size(); ++u)
    for (NodeId v : t.neighbors(u))
      if (u < v) s << u << ' ' << v << '\n';
  out << s.str();
}

inline Topology read_topology(std::istream& in) {
  std::string kw[4];
  int n = 0;
  double w = 0, h = 0, r = 0;
  if (!(in >> kw[0] >> n >> kw[1] >> w >> kw[2] >> h >> kw[3] >> r) || kw[0] != "nodes" || kw[1] != "width" ||
      kw[2] != "height" || kw[3] != "range" || n < 0)
    throw ConfigError("malformed topology header");
  Deployment d;
  d.width = w;
  d.height = h;
  d.positions.resize(n);
  for (int i = 0; i < n; ++i) {
    int id = 0;
    if (!(in >> id >> d.positions[i].x >> d.positions[i].y) || id != i) throw ConfigError("malformed topology node line");
  }
  std::vector<std::pair<NodeId, NodeId>> edges;
  NodeId u, v;
  while (in >> u >> v) edges.emplace_back(u, v);
  if (!in.eof()) throw ConfigError("malformed topology edge line");
  return Topology::from_edges(std::move(d), r, edges);
}

}  // namespace avcs
