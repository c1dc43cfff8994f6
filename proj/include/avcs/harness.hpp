#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "avcs/scenario.hpp"

namespace avcs {

/// Aggregated outcome of one scenario. Stretches are NaN when no pair qualifies.
struct MetricsRow {
  std::string scenario_id;
  std::string protocol;
  std::string coord_system;
  std::string distance;
  int align_depth = 0;
  double mean_degree = 0.0;
  std::uint64_t pairs = 0;     // reachable ordered pairs evaluated
  std::uint64_t excluded = 0;  // sampled pairs in different components
  double greedy_ratio = 0.0;
  double delivery_ratio = 0.0;
  double stretch_greedy = std::numeric_limits<double>::quiet_NaN();
  double stretch_all = std::numeric_limits<double>::quiet_NaN();
  // Stretch when the complementary mechanism carries the whole route; NaN for
  // protocols without one.
  double stretch_complementary = std::numeric_limits<double>::quiet_NaN();
};

struct EvalOptions {
  unsigned workers = 1;
};

namespace detail {

struct PairRecord {
  int sp = kUnreachable;
  int hops = 0;
  Outcome outcome = Outcome::failed;
  int complementary_hops = -1;  // forced complementary route, -1 unless delivered
};

inline std::pair<NodeId, NodeId> pair_at(std::uint64_t index, int n) {
  const auto src = static_cast<NodeId>(index / (n - 1));
  auto dst = static_cast<NodeId>(index % (n - 1));
  if (dst >= src) ++dst;
  return {src, dst};
}

// Ordered (src, dst) pairs, src != dst. Everything when budget is 0 or covers all
// pairs; otherwise `budget` distinct pairs by selection sampling (Knuth's
// algorithm S), returned in index order.
inline std::vector<std::uint64_t> choose_pairs(int n, std::uint64_t budget, std::uint64_t seed) {
  const std::uint64_t total = n < 2 ? 0 : static_cast<std::uint64_t>(n) * (n - 1);
  std::vector<std::uint64_t> out;
  if (budget == 0 || budget >= total) {
    out.resize(total);
    for (std::uint64_t i = 0; i < total; ++i) out[i] = i;
    return out;
  }
  out.reserve(budget);
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uint64_t needed = budget;
  for (std::uint64_t i = 0; i < total && needed > 0; ++i) {
    if (static_cast<double>(total - i) * rng.uniform() < static_cast<double>(needed)) {
      out.push_back(i);
      --needed;
    }
  }
  return out;
}

inline double mean_or_nan(double sum, std::uint64_t count) {
  return count == 0 ? std::numeric_limits<double>::quiet_NaN() : sum / static_cast<double>(count);
}

}  // namespace detail

inline MetricsRow describe(const Scenario& s) {
  MetricsRow row;
  row.scenario_id = s.config.name;
  row.protocol = std::string(to_string(s.config.protocol));
  row.coord_system = std::string(coord_system(s.config));
  row.distance = std::string(to_string(s.dfn.kind));
  row.align_depth = effective_depth(s.config);
  row.mean_degree = s.topology.mean_degree();
  return row;
}

/// Routes every sampled ordered pair and aggregates. Work is split by
/// destination across workers; aggregation runs in pair order afterwards, so the
/// worker count never changes the result.
inline MetricsRow evaluate(const Scenario& s, const EvalOptions& opt = {}) {
  const int n = s.topology.size();
  const auto pairs = detail::choose_pairs(n, s.config.sample_pairs, s.config.seed);

  std::vector<std::vector<std::size_t>> by_dst(n);
  for (std::size_t i = 0; i < pairs.size(); ++i) by_dst[detail::pair_at(pairs[i], n).second].push_back(i);

  std::vector<detail::PairRecord> records(pairs.size());
  auto work = [&](unsigned worker, unsigned workers) {
    for (NodeId dst = static_cast<NodeId>(worker); dst < n; dst += static_cast<NodeId>(workers)) {
      if (by_dst[dst].empty()) continue;
      const auto hops = bfs_hops(s.topology, dst);
      for (std::size_t i : by_dst[dst]) {
        const NodeId src = detail::pair_at(pairs[i], n).first;
        auto& rec = records[i];
        rec.sp = hops[src];
        if (rec.sp == kUnreachable) continue;
        const RouteResult r = route(s, src, dst, hops);
        rec.hops = r.hops();
        rec.outcome = r.outcome;
        if (const auto c = route_complementary(s, src, dst, hops); c && c->delivered()) rec.complementary_hops = c->hops();
      }
    }
  };
  const unsigned workers = std::max(1u, opt.workers);
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
    for (auto& th : pool) th.join();
  }

  MetricsRow row = describe(s);
  std::uint64_t greedy = 0, delivered = 0, complementary = 0;
  double sum_greedy = 0.0, sum_all = 0.0, sum_complementary = 0.0;
  for (const auto& rec : records) {
    if (rec.sp == kUnreachable) {
      ++row.excluded;
      continue;
    }
    ++row.pairs;
    if (rec.complementary_hops >= 0 && rec.sp > 0) {
      ++complementary;
      sum_complementary += static_cast<double>(rec.complementary_hops) / rec.sp;
    }
    if (rec.outcome == Outcome::failed) continue;
    const double stretch = static_cast<double>(rec.hops) / rec.sp;
    ++delivered;
    sum_all += stretch;
    if (rec.outcome == Outcome::delivered_greedy) {
      ++greedy;
      sum_greedy += stretch;
    }
  }
  row.greedy_ratio = row.pairs == 0 ? 0.0 : static_cast<double>(greedy) / row.pairs;
  row.delivery_ratio = row.pairs == 0 ? 0.0 : static_cast<double>(delivered) / row.pairs;
  row.stretch_greedy = detail::mean_or_nan(sum_greedy, greedy);
  row.stretch_all = detail::mean_or_nan(sum_all, delivered);
  row.stretch_complementary = detail::mean_or_nan(sum_complementary, complementary);
  return row;
}

inline MetricsRow evaluate(const ScenarioConfig& cfg, const EvalOptions& opt = {}) {
  return evaluate(build_scenario(cfg), opt);
}

enum class SweepAxis { radio_range, void_size, hole_count, align_depth, error_fraction, seed };

inline constexpr std::pair<SweepAxis, std::string_view> kAxisNames[] = {
    {SweepAxis::radio_range, "radio_range"}, {SweepAxis::void_size, "void_size"},
    {SweepAxis::hole_count, "hole_count"},   {SweepAxis::align_depth, "align_depth"},
    {SweepAxis::error_fraction, "error_fraction"}, {SweepAxis::seed, "seed"},
};

inline std::string_view to_string(SweepAxis a) {
  for (auto [value, name] : kAxisNames)
    if (value == a) return name;
  return "?";
}

inline SweepAxis parse_axis(std::string_view name) {
  for (auto [value, n] : kAxisNames)
    if (n == name) return value;
  if (name == "loc_error") return SweepAxis::error_fraction;
  throw ConfigError("unknown sweep axis '" + std::string(name) + "'");
}

/// Centre used for single-void sweeps: the grid node nearest the middle of the
/// area (lowest id on ties), or the middle itself for random deployments.
inline Point void_center(const ScenarioConfig& c) {
  if (c.deployment != DeploymentKind::grid) return {c.width / 2.0, c.height / 2.0};
  const Deployment g = generate_grid(c.rows, c.cols, c.spacing);
  const Point mid{g.width / 2.0, g.height / 2.0};
  Point best = g.positions.front();
  for (const Point& p : g.positions)
    if (squared_distance(p, mid) < squared_distance(best, mid)) best = p;
  return best;
}

/// `count` equal discs: five on a quincunx, otherwise row-major on a
/// ceil(sqrt(count))-square lattice. Radius is 0.3 of the lattice pitch.
inline std::vector<VoidSpec> hole_layout(int count, double width, double height) {
  std::vector<VoidSpec> out;
  if (count <= 0) return out;
  if (count == 5) {
    const double r = 0.3 * std::min(width, height) / 4.0;
    for (auto [fx, fy] : {std::pair{0.25, 0.25}, {0.75, 0.25}, {0.5, 0.5}, {0.25, 0.75}, {0.75, 0.75}})
      out.push_back(VoidSpec::disc({fx * width, fy * height}, r));
    return out;
  }
  const int side = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(count))));
  const double r = 0.3 * std::min(width, height) / (side + 1);
  for (int i = 0; i < count; ++i) {
    const int cx = i % side, cy = i / side;
    out.push_back(VoidSpec::disc({width * (cx + 1) / (side + 1), height * (cy + 1) / (side + 1)}, r));
  }
  return out;
}

inline ScenarioConfig apply_axis(ScenarioConfig c, SweepAxis axis, double value) {
  switch (axis) {
    case SweepAxis::radio_range:
      c.radio_range = value;
      c.target_degree.reset();
      break;
    case SweepAxis::void_size:
      c.voids.clear();
      if (value > 0.0) c.voids.push_back(VoidSpec::disc(void_center(c), value));
      break;
    case SweepAxis::hole_count: {
      const double w = c.deployment == DeploymentKind::grid ? c.cols * c.spacing : c.width;
      const double h = c.deployment == DeploymentKind::grid ? c.rows * c.spacing : c.height;
      c.voids = hole_layout(static_cast<int>(value), w, h);
      break;
    }
    case SweepAxis::align_depth: c.align_depth = static_cast<int>(value); break;
    case SweepAxis::error_fraction: c.loc_error = value; break;
    case SweepAxis::seed: c.seed = static_cast<std::uint64_t>(value); break;
  }
  return c;
}

inline std::string format_value(double v) {
  std::ostringstream s;
  s << v;
  return s.str();
}

/// One sweep point: the row, or the error that stopped it.
struct SweepPoint {
  double value = 0.0;
  std::optional<MetricsRow> row;
  std::string error;
};

/// Mean and sample standard deviation of the numeric fields of `rows`.
inline std::pair<MetricsRow, MetricsRow> summarize(const std::vector<MetricsRow>& rows, const std::string& id) {
  MetricsRow mean = rows.front(), sd = rows.front();
  mean.scenario_id = id + "/mean";
  sd.scenario_id = id + "/stddev";
  auto fields = [](MetricsRow& r) {
    return std::vector<double*>{&r.mean_degree, &r.greedy_ratio, &r.delivery_ratio, &r.stretch_greedy, &r.stretch_all,
                                &r.stretch_complementary};
  };
  const double count = static_cast<double>(rows.size());
  auto mf = fields(mean), sf = fields(sd);
  for (std::size_t f = 0; f < mf.size(); ++f) {
    double sum = 0.0;
    for (MetricsRow r : rows) sum += *fields(r)[f];
    const double m = sum / count;
    double sq = 0.0;
    for (MetricsRow r : rows) sq += (*fields(r)[f] - m) * (*fields(r)[f] - m);
    *mf[f] = m;
    *sf[f] = rows.size() > 1 ? std::sqrt(sq / (count - 1.0)) : 0.0;
  }
  std::uint64_t pairs = 0;
  for (const auto& r : rows) pairs += r.pairs;
  mean.pairs = pairs / rows.size();
  sd.pairs = 0;
  return {mean, sd};
}

struct SweepResult {
  std::vector<SweepPoint> points;
  std::vector<MetricsRow> summary;  // seed axis only: mean then stddev
};

/// Evaluates `base` once per value. A failing point is recorded and the sweep continues.
inline SweepResult sweep(const ScenarioConfig& base, SweepAxis axis, const std::vector<double>& values,
                         const EvalOptions& opt = {}) {
  SweepResult out;
  std::vector<MetricsRow> ok;
  for (double v : values) {
    ScenarioConfig c = apply_axis(base, axis, v);
    c.name = base.name + "/" + std::string(to_string(axis)) + "=" + format_value(v);
    SweepPoint p;
    p.value = v;
    try {
      p.row = evaluate(c, opt);
      ok.push_back(*p.row);
    } catch (const Error& e) {
      p.error = e.what();
    }
    out.points.push_back(std::move(p));
  }
  if (axis == SweepAxis::seed && !ok.empty()) {
    auto [mean, sd] = summarize(ok, base.name + "/seed");
    out.summary = {mean, sd};
  }
  return out;
}

/// Per-node distance to one destination plus the nodes where greedy stalls.
struct DistanceMap {
  struct Entry {
    Point position;  // true position
    double distance = 0.0;
    bool local_minimum = false;
  };
  NodeId dst = 0;
  std::vector<Entry> entries;
  std::vector<NodeId> local_minima;
};

inline DistanceMap distance_map(const Scenario& s, NodeId dst) {
  if (dst < 0 || dst >= s.topology.size()) throw ConfigError("destination " + std::to_string(dst) + " does not exist");
  DistanceMap m;
  m.dst = dst;
  m.entries.resize(s.topology.size());
  for (NodeId u = 0; u < s.topology.size(); ++u) {
    auto& e = m.entries[u];
    e.position = s.topology.position(u);
    e.distance = distance_to(s, u, dst);
  }
  for (NodeId u = 0; u < s.topology.size(); ++u) {
    if (u == dst) continue;
    bool stuck = true;
    for (NodeId v : s.topology.neighbors(u))
      if (closer(m.entries[v].distance, v, m.entries[u].distance, u, dst)) {
        stuck = false;
        break;
      }
    if (stuck) {
      m.entries[u].local_minimum = true;
      m.local_minima.push_back(u);
    }
  }
  return m;
}

namespace detail {

inline void put_real(std::ostream& out, double v) {
  if (std::isnan(v))
    out << "nan";
  else
    out << v;
}

}  // namespace detail

inline constexpr std::string_view kMetricsHeader =
    "scenario_id,protocol,coord_system,distance,align_depth,mean_degree,pairs,greedy_ratio,delivery_ratio,"
    "stretch_greedy,stretch_all,stretch_complementary";

inline void write_metrics_row(std::ostream& out, const MetricsRow& r) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(6);
  s << r.scenario_id << ',' << r.protocol << ',' << r.coord_system << ',' << r.distance << ',' << r.align_depth << ',';
  detail::put_real(s, r.mean_degree);
  s << ',' << r.pairs << ',';
  for (double v : {r.greedy_ratio, r.delivery_ratio, r.stretch_greedy, r.stretch_all}) {
    detail::put_real(s, v);
    s << ',';
  }
  detail::put_real(s, r.stretch_complementary);
  s << '\n';
  out << s.str();
}

inline void write_distance_map(std::ostream& out, const DistanceMap& m) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(6);
  s << "x,y,dist,is_local_min\n";
  for (const auto& e : m.entries) s << e.position.x << ',' << e.position.y << ',' << e.distance << ',' << (e.local_minimum ? 1 : 0) << '\n';
  out << s.str();
}

}  // namespace avcs
