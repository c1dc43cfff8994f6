#pragma once

#include <cmath>
#include <numbers>
#include <utility>

#include "avcs/coords.hpp"
#include "avcs/planar.hpp"
#include "avcs/routing.hpp"

namespace avcs {

namespace detail {

// Planar neighbour reached first when sweeping counter-clockwise about `at`
// from the direction `ref`. A neighbour lying exactly on `ref` comes last.
inline NodeId first_ccw(const PlanarGraph& g, NodeId at, double ref) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  const Point here = g.positions[at];
  NodeId best = -1;
  double best_turn = 0.0;
  for (NodeId v : g.neighbors(at)) {
    const Point p = g.positions[v];
    double turn = std::atan2(p.y - here.y, p.x - here.x) - ref;
    while (turn <= 0.0) turn += two_pi;
    while (turn > two_pi) turn -= two_pi;
    if (best < 0 || turn < best_turn) {
      best = v;
      best_turn = turn;
    }
  }
  return best;
}

inline double bearing(Point from, Point to) { return std::atan2(to.y - from.y, to.x - from.x); }

}  // namespace detail

/// Greedy forwarding on planar distance with right-hand-rule face traversal on
/// `pg` at local minima. Greedy hops may use any topology neighbour; perimeter
/// hops use planar edges only. Both read positions from `geo` (true or perceived).
/// With `perimeter_only` greedy hops are never taken: wherever greedy would
/// resume, the packet re-enters perimeter mode from that node instead; a node
/// next to the destination still hands the packet straight over.
inline RouteResult gpsr_route(const Topology& t, const GeoCoords& geo, const PlanarGraph& pg, NodeId src, NodeId dst,
                              int ttl, bool perimeter_only = false) {
  RouteResult r = detail::start(src, dst);
  const GeoDistance dist(geo, dst);
  const Point target = geo[dst];

  bool perimeter = false;
  double entry_dist = 0.0;  // |Lp - D|
  Point entry;              // Lp: where perimeter mode began
  Point face_point;         // Lf: where the current face was entered
  std::pair<NodeId, NodeId> first_edge{-1, -1};
  NodeId cur = src;
  NodeId prev = -1;

  // Switches faces while the chosen edge crosses segment Lp-D closer to D than Lf.
  auto face_change = [&](NodeId at, NodeId next) {
    for (int guard = 0; guard < 64; ++guard) {
      const auto cross = segment_intersection(pg.positions[at], pg.positions[next], entry, target);
      if (!cross || !(planar_euclidean(*cross, target) < planar_euclidean(face_point, target))) break;
      face_point = *cross;
      next = detail::first_ccw(pg, at, detail::bearing(pg.positions[at], pg.positions[next]));
      first_edge = {at, next};
    }
    return next;
  };

  while (cur != dst) {
    if (r.hops() >= ttl) return r.fail(FailureCause::ttl_exceeded);
    if (perimeter && dist(cur) < entry_dist) perimeter = false;
    if (perimeter_only && t.adjacent(cur, dst)) {
      r.hop(dst, HopMode::perimeter);
      break;
    }
    if (!perimeter) {
      const NodeId next = perimeter_only ? -1 : detail::best_closer(t, cur, dst, dist, dist(cur), cur);
      if (next >= 0) {
        r.hop(next, HopMode::greedy);
        prev = cur;
        cur = next;
        continue;
      }
      entry = geo[cur];
      face_point = entry;
      entry_dist = dist(cur);
      const NodeId first = detail::first_ccw(pg, cur, detail::bearing(pg.positions[cur], target));
      if (first < 0) return r.fail(FailureCause::perimeter_loop);
      perimeter = true;
      first_edge = {cur, first};
      r.hop(first, HopMode::perimeter);
      prev = cur;
      cur = first;
      continue;
    }
    NodeId next = detail::first_ccw(pg, cur, detail::bearing(pg.positions[cur], pg.positions[prev]));
    if (std::pair{cur, next} == first_edge) return r.fail(FailureCause::perimeter_loop);
    next = face_change(cur, next);
    r.hop(next, HopMode::perimeter);
    prev = cur;
    cur = next;
  }
  return r.deliver();
}

}  // namespace avcs
