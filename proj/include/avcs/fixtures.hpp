#pragma once

#include <utility>
#include <vector>

#include "avcs/coords.hpp"
#include "avcs/topology.hpp"

namespace avcs {

/// Hand-built graph realising the three-node forwarding-void example:
/// V(A) = [3, 9, 7, 11], V(B) = [2, 9, 8, 11], V(C) = [3, 8, 8, 11], with A-B and
/// B-C adjacent and every neighbour of C at least as far from V(A) as C is.
///
/// Layout: four anchor chains feed the A/B/C cluster. Chain 2 forks at distance
/// 6 so that A sits at 9 while C sits at 8; chain 3 forks at distance 5 so that C
/// sits at 8 while A sits at 7. The chain-4 tail touches all three.
/// Positions are only for display; adjacency is explicit, not unit-disk.
struct AbcFixture {
  Topology topology;
  AnchorSet anchors;
  VirtualCoords coords;
  NodeId a = 0;
  NodeId b = 1;
  NodeId c = 2;
};

inline AbcFixture fixture_abc() {
  Deployment d;
  std::vector<std::pair<NodeId, NodeId>> edges;
  auto add = [&](Point p) {
    d.positions.push_back(p);
    return static_cast<NodeId>(d.positions.size() - 1);
  };
  auto link = [&](NodeId u, NodeId v) { edges.emplace_back(u, v); };
  // Chain of `len` nodes from `from` heading in direction (dx, dy); returns the ids, nearest first.
  auto chain = [&](Point from, double dx, double dy, int len) {
    std::vector<NodeId> ids;
    for (int i = 1; i <= len; ++i) ids.push_back(add({from.x + dx * i, from.y + dy * i}));
    for (std::size_t i = 1; i < ids.size(); ++i) link(ids[i - 1], ids[i]);
    return ids;
  };

  const NodeId a = add({11.0, 12.0});
  const NodeId b = add({12.0, 12.8});
  const NodeId c = add({13.0, 12.0});
  link(a, b);
  link(b, c);

  // Anchor 1: B is 2 hops away.
  const auto p = chain(d.positions[b], 0.0, 1.0, 2);  // p[0] next to B, p[1] is the anchor
  link(b, p[0]);

  // Anchor 2: C at 8 via q7; A at 9 via the r-branch leaving q6.
  const auto q = chain(d.positions[c], 1.0, 0.0, 8);  // q[0] = q7 ... q[7] = anchor
  link(c, q[0]);
  const NodeId r8 = add({10.0, 11.0});
  const NodeId r7 = add({11.0, 10.0});
  link(a, r8);
  link(r8, r7);
  link(r7, q[1]);  // q[1] is q6

  // Anchor 3: A at 7 via s6; C at 8 via the t-branch leaving s5.
  const auto s = chain(d.positions[a], -1.0, 0.0, 7);  // s[0] = s6 ... s[6] = anchor
  link(a, s[0]);
  const NodeId t7 = add({13.0, 13.2});
  const NodeId t6 = add({10.0, 13.5});
  link(c, t7);
  link(t7, t6);
  link(t6, s[1]);  // s[1] is s5

  // Anchor 4: u10 touches A, B and C, all three land on 11.
  const auto u = chain({12.0, 11.0}, 0.0, -1.0, 11);  // u[0] = u10 ... u[10] = anchor
  link(u[0], a);
  link(u[0], b);
  link(u[0], c);

  double max_x = 0.0, max_y = 0.0, min_x = 0.0, min_y = 0.0;
  for (const Point& pt : d.positions) {
    max_x = std::max(max_x, pt.x);
    max_y = std::max(max_y, pt.y);
    min_x = std::min(min_x, pt.x);
    min_y = std::min(min_y, pt.y);
  }
  for (Point& pt : d.positions) {
    pt.x -= min_x;
    pt.y -= min_y;
  }
  d.width = max_x - min_x + 1.0;
  d.height = max_y - min_y + 1.0;

  AbcFixture f;
  f.anchors.ids = {p.back(), q.back(), s.back(), u.back()};
  f.topology = Topology::from_edges(std::move(d), 1.0, edges);
  f.coords = build_vcs(f.topology, f.anchors);
  f.a = a;
  f.b = b;
  f.c = c;
  return f;
}

}  // namespace avcs
