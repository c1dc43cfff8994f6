#pragma once

#include <algorithm>
#include <concepts>
#include <deque>
#include <span>
#include <string_view>
#include <vector>

#include "avcs/coords.hpp"
#include "avcs/distance.hpp"
#include "avcs/topology.hpp"

namespace avcs {

enum class HopMode { greedy, perimeter, backtrack, beacon_fallback, flood };
enum class Outcome { delivered_greedy, delivered_mixed, failed };
enum class FailureCause { none, local_minimum, ttl_exceeded, perimeter_loop, backtrack_exhausted, flood_miss, unreachable };

inline std::string_view to_string(HopMode m) {
  switch (m) {
    case HopMode::greedy: return "greedy";
    case HopMode::perimeter: return "perimeter";
    case HopMode::backtrack: return "backtrack";
    case HopMode::beacon_fallback: return "beacon-fallback";
    case HopMode::flood: return "flood";
  }
  return "?";
}

inline std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::delivered_greedy: return "delivered-greedy";
    case Outcome::delivered_mixed: return "delivered-mixed";
    case Outcome::failed: return "failed";
  }
  return "?";
}

inline std::string_view to_string(FailureCause c) {
  switch (c) {
    case FailureCause::none: return "none";
    case FailureCause::local_minimum: return "local-minimum";
    case FailureCause::ttl_exceeded: return "ttl-exceeded";
    case FailureCause::perimeter_loop: return "perimeter-loop";
    case FailureCause::backtrack_exhausted: return "backtrack-exhausted";
    case FailureCause::flood_miss: return "flood-miss";
    case FailureCause::unreachable: return "unreachable";
  }
  return "?";
}

/// Outcome of routing one packet. `modes[i]` is the mode of the hop from
/// path[i] to path[i + 1].
struct RouteResult {
  NodeId src = 0;
  NodeId dst = 0;
  std::vector<NodeId> path;
  std::vector<HopMode> modes;
  Outcome outcome = Outcome::failed;
  FailureCause cause = FailureCause::none;

  int hops() const { return static_cast<int>(modes.size()); }
  bool delivered() const { return outcome != Outcome::failed; }
  int complementary_hops() const {
    return static_cast<int>(std::count_if(modes.begin(), modes.end(), [](HopMode m) { return m != HopMode::greedy; }));
  }

  void hop(NodeId next, HopMode mode) {
    path.push_back(next);
    modes.push_back(mode);
  }
  RouteResult& deliver() {
    outcome = complementary_hops() == 0 ? Outcome::delivered_greedy : Outcome::delivered_mixed;
    cause = FailureCause::none;
    return *this;
  }
  RouteResult& fail(FailureCause why) {
    outcome = Outcome::failed;
    cause = why;
    return *this;
  }
};

/// Anything that maps a node to its distance from the packet's destination.
template <class F>
concept DistanceToDst = requires(const F& f, NodeId v) {
  { f(v) } -> std::convertible_to<double>;
};

/// Distance of a node's (possibly aligned) virtual coordinates to V(dst). The
/// destination itself is at distance 0: it recognises its own id.
struct VirtualDistance {
  const CoordTable<double>* local = nullptr;
  std::span<const int> dst_coords;
  NodeId dst = 0;
  DistanceFunction dfn;

  VirtualDistance(const CoordTable<double>& coords, const VirtualCoords& vc, NodeId destination, DistanceFunction f)
      : local(&coords), dst_coords(vc[destination]), dst(destination), dfn(f) {}

  double operator()(NodeId v) const { return v == dst ? 0.0 : dfn((*local)[v], dst_coords); }
};

struct GeoDistance {
  const GeoCoords* geo = nullptr;
  NodeId dst = 0;

  GeoDistance(const GeoCoords& g, NodeId destination) : geo(&g), dst(destination) {}

  double operator()(NodeId v) const { return v == dst ? 0.0 : planar_euclidean((*geo)[v], (*geo)[dst]); }
};

/// True when a node at distance `dv` (id v) is closer to `dst` than one at `du`
/// (id u). The destination itself beats every other node at the same distance:
/// a node adjacent to the destination always recognises it by id.
inline bool closer(double dv, NodeId v, double du, NodeId u, NodeId dst) {
  return dv < du || (dv == du && v == dst && u != dst);
}

/// Neighbours closer to the destination than u. Empty means u is a local minimum.
template <DistanceToDst F>
std::vector<NodeId> forwarding_set(const Topology& t, NodeId u, NodeId dst, const F& dist) {
  const double here = dist(u);
  std::vector<NodeId> out;
  for (NodeId v : t.neighbors(u))
    if (closer(dist(v), v, here, u, dst)) out.push_back(v);
  return out;
}

namespace detail {

// Closest neighbour that is closer than a node `bound_id` at distance `bound`;
// ties go to the destination, then to the lowest id. -1 when there is none.
template <DistanceToDst F>
NodeId best_closer(const Topology& t, NodeId u, NodeId dst, const F& dist, double bound, NodeId bound_id,
                   double* found = nullptr) {
  NodeId best = -1;
  double best_d = bound;
  for (NodeId v : t.neighbors(u)) {
    const double d = dist(v);
    if (best < 0 ? closer(d, v, bound, bound_id, dst) : closer(d, v, best_d, best, dst)) {
      best_d = d;
      best = v;
    }
  }
  if (found) *found = best_d;
  return best;
}

inline RouteResult start(NodeId src, NodeId dst) {
  RouteResult r;
  r.src = src;
  r.dst = dst;
  r.path.push_back(src);
  return r;
}

}  // namespace detail

/// Plain greedy forwarding: always to the closest strictly-closer neighbour.
template <DistanceToDst F>
RouteResult greedy_route(const Topology& t, NodeId src, NodeId dst, const F& dist, int ttl) {
  RouteResult r = detail::start(src, dst);
  NodeId cur = src;
  double here = dist(cur);
  while (cur != dst) {
    if (r.hops() >= ttl) return r.fail(FailureCause::ttl_exceeded);
    const NodeId next = detail::best_closer(t, cur, dst, dist, here, cur, &here);
    if (next < 0) return r.fail(FailureCause::local_minimum);
    r.hop(next, HopMode::greedy);
    cur = next;
  }
  return r.deliver();
}

/// Breadth-first shortest path; neighbours are explored in id order.
inline RouteResult sp_route(const Topology& t, NodeId src, NodeId dst) {
  RouteResult r = detail::start(src, dst);
  if (src == dst) return r.deliver();
  std::vector<NodeId> parent(t.size(), -1);
  parent[src] = src;
  std::deque<NodeId> queue{src};
  while (!queue.empty() && parent[dst] < 0) {
    const NodeId u = queue.front();
    queue.pop_front();
    for (NodeId v : t.neighbors(u))
      if (parent[v] < 0) {
        parent[v] = u;
        queue.push_back(v);
      }
  }
  if (parent[dst] < 0) return r.fail(FailureCause::unreachable);
  std::vector<NodeId> back;
  for (NodeId v = dst; v != src; v = parent[v]) back.push_back(v);
  for (auto it = back.rbegin(); it != back.rend(); ++it) r.hop(*it, HopMode::greedy);
  return r.deliver();
}

/// Greedy forwarding with per-packet hop recording (depth-first search ordered
/// by distance). Each step moves to the closest unvisited neighbour; the hop is
/// greedy if that neighbour is strictly closer, a backtrack hop otherwise. With
/// no unvisited neighbour left the packet retreats one recorded hop.
template <DistanceToDst F>
RouteResult lcr_route(const Topology& t, NodeId src, NodeId dst, const F& dist, int ttl) {
  RouteResult r = detail::start(src, dst);
  std::vector<char> visited(t.size(), 0);
  std::vector<NodeId> stack{src};
  visited[src] = 1;
  NodeId cur = src;
  while (cur != dst) {
    if (r.hops() >= ttl) return r.fail(FailureCause::ttl_exceeded);
    NodeId best = -1;
    double best_d = 0.0;
    for (NodeId v : t.neighbors(cur)) {
      if (visited[v]) continue;
      const double d = dist(v);
      if (best < 0 || closer(d, v, best_d, best, dst)) {
        best = v;
        best_d = d;
      }
    }
    if (best >= 0) {
      r.hop(best, closer(best_d, best, dist(cur), cur, dst) ? HopMode::greedy : HopMode::backtrack);
      visited[best] = 1;
      stack.push_back(best);
      cur = best;
      continue;
    }
    stack.pop_back();
    if (stack.empty()) return r.fail(FailureCause::backtrack_exhausted);
    cur = stack.back();
    r.hop(cur, HopMode::backtrack);
  }
  return r.deliver();
}

/// Beacon-vector style routing: greedy until stuck, then walk the hop-count tree
/// toward the anchor nearest the destination (smallest V(dst)_k). Greedy resumes
/// as soon as some neighbour beats the best distance seen so far. Reaching the
/// anchor triggers a scoped flood of radius V(dst)_k; its delivery path (the
/// shortest anchor->dst path) is charged as flood hops.
///
/// `hops_to_dst`, when non-empty, must be bfs_hops(t, dst); it avoids a BFS per call.
/// `fallback_only` skips greedy entirely: tree walk to the anchor, then flood.
template <DistanceToDst F>
RouteResult bvr_route(const Topology& t, NodeId src, NodeId dst, const F& dist, const VirtualCoords& vc,
                      const AnchorSet& anchors, int ttl, std::span<const int> hops_to_dst = {},
                      bool fallback_only = false) {
  RouteResult r = detail::start(src, dst);
  if (src == dst) return r.deliver();
  const auto dst_v = vc[dst];
  int k = 0;
  for (int i = 1; i < anchors.dims(); ++i)
    if (dst_v[i] < dst_v[k]) k = i;
  const NodeId anchor = anchors.ids[k];

  NodeId cur = src;
  double best = dist(cur);  // closest distance reached so far
  NodeId best_id = cur;
  while (cur != dst) {
    if (r.hops() >= ttl) return r.fail(FailureCause::ttl_exceeded);
    double found = best;
    const NodeId next = fallback_only ? -1 : detail::best_closer(t, cur, dst, dist, best, best_id, &found);
    if (next >= 0) {
      r.hop(next, HopMode::greedy);
      best = found;
      best_id = next;
      cur = next;
      continue;
    }
    if (cur != anchor) {
      NodeId parent = -1;
      for (NodeId v : t.neighbors(cur))
        if (vc[v][k] == vc[cur][k] - 1) {
          parent = v;
          break;
        }
      if (parent < 0) return r.fail(FailureCause::local_minimum);  // inconsistent coordinates
      r.hop(parent, HopMode::beacon_fallback);
      if (const double d = dist(parent); closer(d, parent, best, best_id, dst)) {
        best = d;
        best_id = parent;
      }
      cur = parent;
      continue;
    }
    std::vector<int> own;
    if (hops_to_dst.empty()) {
      own = bfs_hops(t, dst);
      hops_to_dst = own;
    }
    const int radius = dst_v[k];
    if (hops_to_dst[anchor] == kUnreachable || hops_to_dst[anchor] > radius) return r.fail(FailureCause::flood_miss);
    while (cur != dst) {
      for (NodeId v : t.neighbors(cur))
        if (hops_to_dst[v] == hops_to_dst[cur] - 1) {
          cur = v;
          break;
        }
      r.hop(cur, HopMode::flood);
    }
    if (r.hops() > ttl) return r.fail(FailureCause::ttl_exceeded);
  }
  return r.deliver();
}

}  // namespace avcs
