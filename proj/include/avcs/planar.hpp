#pragma once

#include <algorithm>
#include <span>
#include <string_view>
#include <vector>

#include "avcs/geometry.hpp"
#include "avcs/topology.hpp"

namespace avcs {

enum class PlanarMethod { gabriel, relative_neighborhood };

inline std::string_view to_string(PlanarMethod m) { return m == PlanarMethod::gabriel ? "GG" : "RNG"; }

/// Subgraph of a topology kept by a local planarization test.
struct PlanarGraph {
  PlanarMethod method = PlanarMethod::gabriel;
  std::vector<Point> positions;  // the positions the test was run on
  std::vector<std::vector<NodeId>> adjacency;

  std::span<const NodeId> neighbors(NodeId u) const { return adjacency[u]; }
  std::size_t edge_count() const {
    std::size_t e = 0;
    for (const auto& a : adjacency) e += a.size();
    return e / 2;
  }
};

/// GG drops (u, v) when a witness lies in the closed disc with diameter uv (so
/// both diagonals of a square go); RNG drops it when a witness is strictly closer to both endpoints than they
/// are to each other. Witnesses are the topology neighbours of u and v.
inline PlanarGraph planarize(const Topology& t, std::span<const Point> pos, PlanarMethod method) {
  PlanarGraph g;
  g.method = method;
  g.positions.assign(pos.begin(), pos.end());
  g.adjacency.assign(t.size(), {});
  auto witnessed = [&](NodeId u, NodeId v, NodeId w) {
    if (w == u || w == v) return false;
    const double uv = squared_distance(pos[u], pos[v]);
    const double uw = squared_distance(pos[u], pos[w]);
    const double vw = squared_distance(pos[v], pos[w]);
    if (method == PlanarMethod::gabriel) return uw + vw <= uv;
    return std::max(uw, vw) < uv;
  };
  for (NodeId u = 0; u < t.size(); ++u) {
    for (NodeId v : t.neighbors(u)) {
      if (v < u) continue;
      bool keep = true;
      for (NodeId w : t.neighbors(u))
        if (witnessed(u, v, w)) {
          keep = false;
          break;
        }
      if (keep)
        for (NodeId w : t.neighbors(v))
          if (witnessed(u, v, w)) {
            keep = false;
            break;
          }
      if (keep) {
        g.adjacency[u].push_back(v);
        g.adjacency[v].push_back(u);
      }
    }
  }
  for (auto& a : g.adjacency) std::sort(a.begin(), a.end());
  return g;
}

/// Number of pairs of edges that properly cross, judged at `pos`. Quadratic in
/// edge count; meant for checks on small instances.
inline std::size_t count_crossings(const PlanarGraph& g, std::span<const Point> pos) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId u = 0; u < static_cast<NodeId>(g.adjacency.size()); ++u)
    for (NodeId v : g.adjacency[u])
      if (u < v) edges.emplace_back(u, v);
  std::size_t crossings = 0;
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const auto [a, b] = edges[i];
      const auto [c, d] = edges[j];
      if (a == c || a == d || b == c || b == d) continue;
      if (segments_properly_cross(pos[a], pos[b], pos[c], pos[d])) ++crossings;
    }
  return crossings;
}

}  // namespace avcs
