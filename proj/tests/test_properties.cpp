// Randomised invariants over many generated instances.
#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "avcs/gpsr.hpp"
#include "avcs/harness.hpp"

using namespace avcs;

namespace {

Topology random_topology(std::uint64_t seed, int n = 150, double side = 10.0, double range = 1.5) {
  return build_udg(generate_random(n, side, side, seed), range);
}

// Largest component as a standalone topology, so every node reaches every anchor.
Topology giant(const Topology& t) {
  std::vector<int> count(t.component_count(), 0);
  for (int c : t.components()) ++count[c];
  const int big = static_cast<int>(std::max_element(count.begin(), count.end()) - count.begin());
  Deployment d;
  d.width = t.deployment().width;
  d.height = t.deployment().height;
  for (NodeId u = 0; u < t.size(); ++u)
    if (t.components()[u] == big) d.positions.push_back(t.position(u));
  return build_udg(d, t.radio_range());
}

AnchorSet spread_anchors(const Topology& t, int k, std::uint64_t seed) {
  Rng rng(seed);
  AnchorSet a;
  while (a.dims() < k) {
    const auto id = static_cast<NodeId>(rng.below(t.size()));
    if (std::ranges::find(a.ids, id) == a.ids.end()) a.ids.push_back(id);
  }
  return a;
}

}  // namespace

TEST(Property, HopCountsAreLipschitz) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const Topology t = giant(random_topology(seed));
    const AnchorSet a = spread_anchors(t, 4, seed);
    const VirtualCoords vc = build_vcs(t, a);
    ASSERT_FALSE(check_vcs(t, a, vc).has_value()) << "seed " << seed;
    for (int k = 0; k < a.dims(); ++k)
      for (NodeId u = 0; u < t.size(); ++u) {
        if (u == a.ids[k]) continue;
        // Every non-anchor has a neighbour one hop nearer the anchor.
        const auto n = t.neighbors(u);
        ASSERT_TRUE(std::ranges::any_of(n, [&](NodeId v) { return vc[v][k] == vc[u][k] - 1; }));
      }
  }
}

TEST(Property, AlignmentMaxPrincipleAndLocality) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Topology t = giant(random_topology(seed, 120));
    const AnchorSet a = spread_anchors(t, 3, seed);
    const VirtualCoords vc = build_vcs(t, a);
    for (int depth : {1, 2, 3}) {
      for (AlignRule rule : {AlignRule::self_weighted, AlignRule::uniform_average}) {
        const AlignedCoords ac = align(vc, t, depth, rule);
        for (NodeId u = 0; u < t.size(); ++u) {
          const auto h = bfs_hops(t, u);
          for (int k = 0; k < 3; ++k) {
            int lo = vc[u][k], hi = vc[u][k];
            for (NodeId v = 0; v < t.size(); ++v)
              if (h[v] != kUnreachable && h[v] <= depth) {
                lo = std::min(lo, vc[v][k]);
                hi = std::max(hi, vc[v][k]);
              }
            ASSERT_GE(ac[u][k], lo - 1e-12);
            ASSERT_LE(ac[u][k], hi + 1e-12);
          }
        }
        // Bumping one node's raw value reaches exactly its depth-hop ball.
        const NodeId poke = static_cast<NodeId>(seed % t.size());
        VirtualCoords bumped = vc;
        bumped[poke][0] += 5;
        const AlignedCoords after = align(bumped, t, depth, rule);
        const auto h = bfs_hops(t, poke);
        for (NodeId u = 0; u < t.size(); ++u) {
          const bool changed = after[u][0] != ac[u][0];
          ASSERT_EQ(changed, h[u] <= depth) << "node " << u << " at " << h[u] << " hops";
        }
      }
    }
  }
}

TEST(Property, GreedyStrictlyDecreasesAndNeverRevisits) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Topology t = giant(random_topology(seed, 200, 12.0));
    const AnchorSet a = spread_anchors(t, 4, seed + 100);
    const VirtualCoords vc = build_vcs(t, a);
    const AlignedCoords ac = align(vc, t, 1, AlignRule::uniform_average);
    const GeoCoords geo = geo_view(t);
    for (NodeId dst = 0; dst < t.size(); dst += 9)
      for (NodeId src = 0; src < t.size(); src += 5) {
        const VirtualDistance vd(ac.values, vc, dst, {});
        const GeoDistance gd(geo, dst);
        const auto check = [&](const RouteResult& r, const auto& dist) {
          ASSERT_NE(r.cause, FailureCause::ttl_exceeded);
          ASSERT_EQ(std::set<NodeId>(r.path.begin(), r.path.end()).size(), r.path.size());
          for (std::size_t i = 1; i < r.path.size(); ++i) {
            ASSERT_TRUE(t.adjacent(r.path[i - 1], r.path[i]));
            ASSERT_TRUE(closer(dist(r.path[i]), r.path[i], dist(r.path[i - 1]), r.path[i - 1], dst));
          }
        };
        check(greedy_route(t, src, dst, vd, 10 * t.size()), vd);
        check(greedy_route(t, src, dst, gd, 10 * t.size()), gd);
      }
  }
}

TEST(Property, DeliveredRoutesHaveStretchAtLeastOne) {
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    for (Protocol p : {Protocol::gf_geo, Protocol::gpsr_gg, Protocol::gpsr_rng, Protocol::gf_vcs, Protocol::gf_avcs,
                       Protocol::lcr, Protocol::bvr, Protocol::sp}) {
      ScenarioConfig c;
      c.rows = c.cols = 14;
      c.radio_range = 1.5;
      c.voids = {VoidSpec::disc({7.0, 7.0}, 1.0 + seed * 0.6)};
      c.loc_error = uses_geo(p) ? 0.1 * seed : 0.0;
      c.protocol = p;
      c.seed = seed;
      const Scenario s = build_scenario(c);
      for (NodeId dst = 0; dst < s.topology.size(); dst += 7) {
        const auto hops = bfs_hops(s.topology, dst);
        for (NodeId src = 0; src < s.topology.size(); src += 3) {
          if (src == dst) continue;
          const RouteResult r = route(s, src, dst, hops);
          if (r.delivered()) {
            ASSERT_GE(r.hops(), hops[src]) << to_string(p);
          }
          if (const auto cr = route_complementary(s, src, dst, hops); cr && cr->delivered()) {
            ASSERT_GE(cr->hops(), hops[src]) << to_string(p);
          }
          ASSERT_EQ(r.outcome == Outcome::delivered_greedy, r.delivered() && r.complementary_hops() == 0);
        }
      }
    }
  }
}

TEST(Property, PlanarSubgraphsNestAndDoNotCross) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Topology t = random_topology(seed, 200, 10.0, 1.6);
    const PlanarGraph gg = planarize(t, t.positions(), PlanarMethod::gabriel);
    const PlanarGraph rng = planarize(t, t.positions(), PlanarMethod::relative_neighborhood);
    for (NodeId u = 0; u < t.size(); ++u) {
      for (NodeId v : rng.neighbors(u)) ASSERT_TRUE(std::ranges::binary_search(gg.neighbors(u), v));
      for (NodeId v : gg.neighbors(u)) ASSERT_TRUE(t.adjacent(u, v));
    }
    ASSERT_EQ(count_crossings(gg, gg.positions), 0u) << "seed " << seed;
    ASSERT_EQ(count_crossings(rng, rng.positions), 0u) << "seed " << seed;
    // Planarization keeps connectivity.
    for (const PlanarGraph* g : {&gg, &rng}) {
      std::vector<std::pair<NodeId, NodeId>> edges;
      for (NodeId u = 0; u < t.size(); ++u)
        for (NodeId v : g->neighbors(u))
          if (u < v) edges.emplace_back(u, v);
      const Topology pt = Topology::from_edges(t.deployment(), t.radio_range(), edges);
      ASSERT_EQ(pt.component_count(), t.component_count());
    }
  }
}

TEST(Property, RunsAreByteIdentical) {
  auto once = [] {
    std::ostringstream s;
    for (Protocol p : {Protocol::gpsr_gg, Protocol::gf_avcs, Protocol::bvr}) {
      ScenarioConfig c;
      c.deployment = DeploymentKind::random;
      c.target_degree = 10.0;
      c.protocol = p;
      c.loc_error = uses_geo(p) ? 0.2 : 0.0;
      c.seed = 1;
      c.sample_pairs = 4000;
      const Scenario sc = build_scenario(c, true);
      write_topology(s, sc.topology);
      write_metrics_row(s, evaluate(sc, {2}));
      write_distance_map(s, distance_map(sc, 17));
    }
    return s.str();
  };
  EXPECT_EQ(once(), once());
}

TEST(Property, LcrDeliversEverythingOnConnectedInstances) {
  int instances = 0;
  for (std::uint64_t seed = 1; instances < 10; ++seed) {
    ScenarioConfig c;
    c.deployment = DeploymentKind::random;
    c.n = 150;
    c.width = c.height = 10.0;
    c.radio_range = 1.5;
    c.protocol = Protocol::lcr;
    c.seed = seed;
    c.sample_pairs = 0;
    c.ttl_factor = 1e6;  // effectively unbounded: DFS needs at most 2|V| hops
    if (!build_udg(generate_random(c.n, c.width, c.height, seed), c.radio_range).connected()) continue;
    const Scenario s = build_scenario(c);
    ++instances;
    EXPECT_EQ(evaluate(s).delivery_ratio, 1.0) << "seed " << seed;
  }
}
