#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "avcs/coords.hpp"
#include "avcs/distance.hpp"
#include "avcs/error.hpp"
#include "avcs/fixtures.hpp"
#include "avcs/gpsr.hpp"
#include "avcs/planar.hpp"
#include "avcs/routing.hpp"
#include "avcs/topology.hpp"

namespace avcs {

enum class Protocol { gf_geo, gpsr_gg, gpsr_rng, gf_vcs, gf_avcs, lcr, bvr, sp };

inline constexpr std::pair<Protocol, std::string_view> kProtocolNames[] = {
    {Protocol::gf_geo, "gf-geo"}, {Protocol::gpsr_gg, "gpsr-gg"}, {Protocol::gpsr_rng, "gpsr-rng"},
    {Protocol::gf_vcs, "gf-vcs"}, {Protocol::gf_avcs, "gf-avcs"}, {Protocol::lcr, "lcr"},
    {Protocol::bvr, "bvr"},       {Protocol::sp, "sp"},
};

inline std::string_view to_string(Protocol p) {
  for (auto [value, name] : kProtocolNames)
    if (value == p) return name;
  return "?";
}

inline Protocol parse_protocol(std::string_view name) {
  for (auto [value, n] : kProtocolNames)
    if (n == name) return value;
  throw ConfigError("unknown protocol '" + std::string(name) + "'");
}

inline bool uses_geo(Protocol p) { return p == Protocol::gf_geo || p == Protocol::gpsr_gg || p == Protocol::gpsr_rng; }
inline bool uses_vcs(Protocol p) { return p == Protocol::gf_vcs || p == Protocol::gf_avcs || p == Protocol::lcr || p == Protocol::bvr; }

enum class DeploymentKind { grid, random, fixture_abc };

/// Declarative description of one experiment.
struct ScenarioConfig {
  std::string name = "scenario";
  DeploymentKind deployment = DeploymentKind::grid;
  int rows = 20;
  int cols = 20;
  double spacing = 1.0;
  int n = 400;
  double width = 20.0;
  double height = 20.0;
  double radio_range = 1.0;
  std::optional<double> target_degree;  // when set, radio_range is derived from the deployment
  std::vector<VoidSpec> voids;
  std::optional<std::vector<NodeId>> anchors;  // nullopt: corner anchors
  int dims = 4;
  AlignRule align_rule = AlignRule::uniform_average;
  int align_depth = 1;
  std::optional<DistanceKind> distance;  // nullopt: geo for geographic protocols, semi for bvr, euclid otherwise
  double semi_weight = 10.0;
  Protocol protocol = Protocol::gf_avcs;
  double loc_error = 0.0;
  std::uint64_t seed = 1;
  std::uint64_t sample_pairs = 100000;  // 0: every ordered pair
  double ttl_factor = 4.0;
};

inline DistanceKind effective_distance(const ScenarioConfig& c) {
  if (uses_geo(c.protocol) || c.protocol == Protocol::sp) return DistanceKind::planar_euclidean;
  if (c.distance) return *c.distance;
  return c.protocol == Protocol::bvr ? DistanceKind::semi_manhattan : DistanceKind::euclidean;
}

// Depth actually applied: plain VCS greedy always runs on raw coordinates.
inline int effective_depth(const ScenarioConfig& c) {
  if (!uses_vcs(c.protocol)) return 0;
  return c.protocol == Protocol::gf_vcs ? 0 : c.align_depth;
}

inline std::string_view coord_system(const ScenarioConfig& c) {
  if (!uses_vcs(c.protocol)) return c.protocol == Protocol::sp ? "none" : "geo";
  return effective_depth(c) > 0 ? "avcs" : "vcs";
}

inline void validate(const ScenarioConfig& c) {
  if (c.align_depth < 0) throw ConfigError("align_depth must be non-negative");
  if (!(c.loc_error >= 0.0 && c.loc_error <= 1.0)) throw ConfigError("loc_error must lie in [0, 1]");
  if (!(c.ttl_factor > 0.0)) throw ConfigError("ttl_factor must be positive");
  if (!(c.semi_weight > 0.0)) throw ConfigError("semi_weight must be positive");
  if (!c.target_degree && !(c.radio_range > 0.0)) throw ConfigError("radio_range must be positive");
  if (c.distance && *c.distance == DistanceKind::planar_euclidean && uses_vcs(c.protocol))
    throw ConfigError("distance 'geo' cannot be used with a virtual-coordinate protocol");
  if (c.distance && *c.distance != DistanceKind::planar_euclidean && uses_geo(c.protocol))
    throw ConfigError("geographic protocols only support distance 'geo'");
  if (!c.anchors && (c.dims < 3 || c.dims > 4)) throw ConfigError("dims must be 3 or 4 with corner anchors");
}

inline Deployment make_deployment(const ScenarioConfig& c) {
  switch (c.deployment) {
    case DeploymentKind::grid: return carve_voids(generate_grid(c.rows, c.cols, c.spacing), c.voids);
    case DeploymentKind::random: return carve_voids(generate_random(c.n, c.width, c.height, c.seed), c.voids);
    case DeploymentKind::fixture_abc: break;
  }
  return fixture_abc().topology.deployment();
}

/// Everything a protocol needs to route, built once from a ScenarioConfig and
/// read-only afterwards.
struct Scenario {
  ScenarioConfig config;
  Topology topology;
  PerceivedPositions perceived;
  GeoCoords geo;
  std::optional<PlanarGraph> planar;
  AnchorSet anchors;
  VirtualCoords vcs;
  AlignedCoords aligned;
  DistanceFunction dfn;
  int diameter = 0;
  int ttl = 0;

  bool has_vcs() const { return vcs.nodes() == topology.size() && topology.size() > 0; }
};

/// Largest finite hop distance over all pairs.
inline int hop_diameter(const Topology& t) {
  int diameter = 0;
  for (NodeId s = 0; s < t.size(); ++s) {
    const auto h = bfs_hops(t, s);
    diameter = std::max(diameter, *std::max_element(h.begin(), h.end()));
  }
  return diameter;
}

/// Builds the scenario. VCS-based protocols need every node to reach every
/// anchor; otherwise ScenarioError is thrown.
inline Scenario build_scenario(const ScenarioConfig& cfg, bool with_vcs = false) {
  validate(cfg);
  Scenario s;
  s.config = cfg;
  if (cfg.deployment == DeploymentKind::fixture_abc) {
    AbcFixture f = fixture_abc();
    s.topology = std::move(f.topology);
    if (!cfg.anchors) s.anchors = f.anchors;
  } else {
    Deployment d = make_deployment(cfg);
    const double range = cfg.target_degree ? range_for_mean_degree(d, *cfg.target_degree) : cfg.radio_range;
    s.topology = build_udg(std::move(d), range);
  }
  if (s.topology.size() < 1) throw ScenarioError("deployment has no nodes");
  s.config.radio_range = s.topology.radio_range();

  s.perceived = perturb_positions(s.topology, cfg.loc_error, cfg.seed);
  s.geo = geo_view(s.topology, &s.perceived);
  if (cfg.protocol == Protocol::gpsr_gg || cfg.protocol == Protocol::gpsr_rng)
    s.planar = planarize(s.topology, s.geo.positions,
                         cfg.protocol == Protocol::gpsr_gg ? PlanarMethod::gabriel : PlanarMethod::relative_neighborhood);

  if (uses_vcs(cfg.protocol) || with_vcs) {
    if (cfg.anchors)
      s.anchors.ids = *cfg.anchors;
    else if (cfg.deployment != DeploymentKind::fixture_abc)
      s.anchors = corner_anchors(s.topology.deployment(), cfg.dims);
    s.vcs = build_vcs(s.topology, s.anchors);
    s.aligned = align(s.vcs, s.topology, effective_depth(cfg), cfg.align_rule);
  }
  s.dfn = {effective_distance(cfg), cfg.semi_weight};
  s.diameter = hop_diameter(s.topology);
  s.ttl = std::max(1, static_cast<int>(std::ceil(cfg.ttl_factor * s.diameter)));
  return s;
}

/// Distance from a node to `dst` under the scenario's coordinates and distance function.
inline double distance_to(const Scenario& s, NodeId v, NodeId dst) {
  if (s.dfn.kind == DistanceKind::planar_euclidean) return GeoDistance(s.geo, dst)(v);
  return VirtualDistance(s.aligned.values, s.vcs, dst, s.dfn)(v);
}

/// Routes one packet with the scenario's protocol. `hops_to_dst`, when given,
/// must be bfs_hops(topology, dst).
inline RouteResult route(const Scenario& s, NodeId src, NodeId dst, std::span<const int> hops_to_dst = {}) {
  const Topology& t = s.topology;
  if (src < 0 || dst < 0 || src >= t.size() || dst >= t.size()) throw ConfigError("node id out of range");
  switch (s.config.protocol) {
    case Protocol::sp: return sp_route(t, src, dst);
    case Protocol::gf_geo: return greedy_route(t, src, dst, GeoDistance(s.geo, dst), s.ttl);
    case Protocol::gpsr_gg:
    case Protocol::gpsr_rng: return gpsr_route(t, s.geo, *s.planar, src, dst, s.ttl);
    case Protocol::gf_vcs:
    case Protocol::gf_avcs: return greedy_route(t, src, dst, VirtualDistance(s.aligned.values, s.vcs, dst, s.dfn), s.ttl);
    case Protocol::lcr: return lcr_route(t, src, dst, VirtualDistance(s.aligned.values, s.vcs, dst, s.dfn), s.ttl);
    case Protocol::bvr:
      return bvr_route(t, src, dst, VirtualDistance(s.aligned.values, s.vcs, dst, s.dfn), s.vcs, s.anchors, s.ttl,
                       hops_to_dst);
  }
  throw ConfigError("unknown protocol");
}

/// The protocol's complementary mechanism driving the whole route: face routing
/// for GPSR, tree walk plus flood for BVR, and the distance-ordered search for
/// LCR (its first branch is the greedy path). Empty for protocols without one.
inline std::optional<RouteResult> route_complementary(const Scenario& s, NodeId src, NodeId dst,
                                                      std::span<const int> hops_to_dst = {}) {
  const Topology& t = s.topology;
  switch (s.config.protocol) {
    case Protocol::gpsr_gg:
    case Protocol::gpsr_rng: return gpsr_route(t, s.geo, *s.planar, src, dst, s.ttl, true);
    case Protocol::lcr: return lcr_route(t, src, dst, VirtualDistance(s.aligned.values, s.vcs, dst, s.dfn), s.ttl);
    case Protocol::bvr:
      return bvr_route(t, src, dst, VirtualDistance(s.aligned.values, s.vcs, dst, s.dfn), s.vcs, s.anchors, s.ttl,
                       hops_to_dst, true);
    default: return std::nullopt;
  }
}

}  // namespace avcs
