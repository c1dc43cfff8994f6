#pragma once

#include <cmath>
#include <span>
#include <string>
#include <string_view>

#include "avcs/error.hpp"
#include "avcs/geometry.hpp"

namespace avcs {

// Local (possibly aligned) coordinates are compared against the destination's
// integer coordinates: packets only ever carry V(dst).

inline void require_same_dims(std::size_t a, std::size_t b) {
  if (a != b) throw Error("dimension", "coordinate dimensionality mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

inline double euclidean_vcs(std::span<const double> av, std::span<const int> dst) {
  require_same_dims(av.size(), dst.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < av.size(); ++i) {
    const double d = av[i] - dst[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

inline double manhattan_vcs(std::span<const double> av, std::span<const int> dst) {
  require_same_dims(av.size(), dst.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < av.size(); ++i) sum += std::abs(av[i] - dst[i]);
  return sum;
}

// Overshoot beyond the destination's coordinate costs `weight` per unit;
// undershoot costs 1. weight == 1 is plain Manhattan.
inline double semi_manhattan_vcs(std::span<const double> av, std::span<const int> dst, double weight) {
  require_same_dims(av.size(), dst.size());
  double over = 0.0, under = 0.0;
  for (std::size_t i = 0; i < av.size(); ++i) {
    const double d = av[i] - dst[i];
    if (d > 0.0)
      over += d;
    else
      under -= d;
  }
  return weight * over + under;
}

enum class DistanceKind { euclidean, manhattan, semi_manhattan, planar_euclidean };

inline std::string_view to_string(DistanceKind k) {
  switch (k) {
    case DistanceKind::euclidean: return "euclid";
    case DistanceKind::manhattan: return "manhattan";
    case DistanceKind::semi_manhattan: return "semi";
    case DistanceKind::planar_euclidean: return "geo";
  }
  return "?";
}

struct DistanceFunction {
  DistanceKind kind = DistanceKind::euclidean;
  double semi_weight = 10.0;

  bool is_virtual() const { return kind != DistanceKind::planar_euclidean; }

  double operator()(std::span<const double> av, std::span<const int> dst) const {
    switch (kind) {
      case DistanceKind::euclidean: return euclidean_vcs(av, dst);
      case DistanceKind::manhattan: return manhattan_vcs(av, dst);
      case DistanceKind::semi_manhattan: return semi_manhattan_vcs(av, dst, semi_weight);
      case DistanceKind::planar_euclidean: break;
    }
    throw Error("dimension", "planar distance applied to virtual coordinates");
  }

  double operator()(Point p, Point q) const { return planar_euclidean(p, q); }
};

}  // namespace avcs
