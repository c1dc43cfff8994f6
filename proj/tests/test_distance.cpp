#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "avcs/distance.hpp"
#include "avcs/fixtures.hpp"

using namespace avcs;

namespace {

std::vector<double> real(std::span<const int> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(Distance, CounterexampleEuclidean) {
  const AbcFixture f = fixture_abc();
  EXPECT_DOUBLE_EQ(euclidean_vcs(real(f.coords[f.c]), f.coords[f.a]), std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(euclidean_vcs(real(f.coords[f.b]), f.coords[f.a]), std::sqrt(2.0));
}

TEST(Distance, CounterexampleManhattan) {
  const AbcFixture f = fixture_abc();
  EXPECT_DOUBLE_EQ(manhattan_vcs(real(f.coords[f.b]), f.coords[f.a]), 2.0);
  EXPECT_DOUBLE_EQ(manhattan_vcs(real(f.coords[f.c]), f.coords[f.a]), 2.0);
}

TEST(Distance, RealValuedHandCases) {
  const std::vector<int> origin{0, 0}, x_axis{1, 0};
  EXPECT_NEAR(euclidean_vcs(std::vector{0.5, 0.5}, origin), 0.707107, 5e-7);
  EXPECT_DOUBLE_EQ(manhattan_vcs(std::vector{0.25, 0.75}, x_axis), 1.5);
}

TEST(Distance, SemiManhattanPenalisesOvershoot) {
  EXPECT_DOUBLE_EQ(semi_manhattan_vcs(std::vector{3.0, 1.0}, std::vector{1, 3}, 10.0), 22.0);
  EXPECT_DOUBLE_EQ(semi_manhattan_vcs(std::vector{1.0, 1.0}, std::vector{3, 3}, 10.0), 4.0);
  // Swapping the roles changes which side overshoots.
  EXPECT_DOUBLE_EQ(semi_manhattan_vcs(std::vector{1.0, 3.0}, std::vector{3, 1}, 10.0), 22.0);
  EXPECT_DOUBLE_EQ(semi_manhattan_vcs(std::vector{3.0, 3.0}, std::vector{1, 1}, 10.0), 40.0);
}

TEST(Distance, SemiManhattanWithUnitWeightIsManhattan) {
  const std::vector<double> a{2.5, 7.0, 0.0, 4.25};
  const std::vector<int> b{3, 5, 1, 4};
  EXPECT_DOUBLE_EQ(semi_manhattan_vcs(a, b, 1.0), manhattan_vcs(a, b));
}

TEST(Distance, NormOrdering) {
  const std::vector<double> a{2.5, 7.0, 0.0, 4.25};
  const std::vector<int> b{3, 5, 1, 4};
  EXPECT_LE(euclidean_vcs(a, b), manhattan_vcs(a, b));
  EXPECT_LE(manhattan_vcs(a, b), semi_manhattan_vcs(a, b, 10.0));
}

TEST(Distance, DimensionMismatchThrows) {
  EXPECT_THROW(euclidean_vcs(std::vector{1.0, 2.0}, std::vector{1, 2, 3}), Error);
  EXPECT_THROW(manhattan_vcs(std::vector{1.0}, std::vector{1, 2}), Error);
}

TEST(Distance, Planar) {
  EXPECT_DOUBLE_EQ(planar_euclidean({0, 0}, {3, 4}), 5.0);
  EXPECT_DOUBLE_EQ(planar_euclidean({1.5, 2.5}, {4.5, 6.5}), 5.0);
  const DistanceFunction geo{DistanceKind::planar_euclidean};
  EXPECT_FALSE(geo.is_virtual());
  EXPECT_DOUBLE_EQ(geo(Point{0, 0}, Point{3, 4}), 5.0);
}

TEST(Distance, FunctionDispatch) {
  const std::vector<double> a{3.0, 1.0};
  const std::vector<int> b{1, 3};
  EXPECT_DOUBLE_EQ((DistanceFunction{DistanceKind::euclidean}(a, b)), std::sqrt(8.0));
  EXPECT_DOUBLE_EQ((DistanceFunction{DistanceKind::manhattan}(a, b)), 4.0);
  EXPECT_DOUBLE_EQ((DistanceFunction{DistanceKind::semi_manhattan}(a, b)), 22.0);
  EXPECT_DOUBLE_EQ((DistanceFunction{DistanceKind::semi_manhattan, 1.0}(a, b)), 4.0);
}
