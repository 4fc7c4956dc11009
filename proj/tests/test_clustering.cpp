#include "doctest.h"

#include <cmath>

#include "mohboa/clustering.hpp"
#include "mohboa/errors.hpp"
#include "oracles.hpp"

using namespace mohboa;

namespace {

std::vector<ObjectiveVector> line(std::size_t n) {
  std::vector<ObjectiveVector> pts;
  for (std::size_t i = 0; i < n; ++i) pts.push_back(ObjectiveVector{double(i), double(n - i)});
  return pts;
}

void check_fixed_point(std::span<const ObjectiveVector> pts, const Clustering& c) {
  const auto members = c.members();
  for (std::size_t k : c.nonempty) {
    double sx = 0;
    double sy = 0;
    for (auto i : members[k]) {
      sx += pts[i][0];
      sy += pts[i][1];
    }
    CHECK(c.centers[k][0] == doctest::Approx(sx / members[k].size()));
    CHECK(c.centers[k][1] == doctest::Approx(sy / members[k].size()));
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double own = euclidean_distance(pts[i], c.centers[c.assignment[i]]);
    for (std::size_t k = 0; k < c.k; ++k) {
      const double other = euclidean_distance(pts[i], c.centers[k]);
      CHECK(own <= other + 1e-9);
      if (k < c.assignment[i]) CHECK(other > own - 1e-12);
    }
  }
}

}  // namespace

TEST_CASE("ordered center initialization") {
  // Input deliberately out of order; the sort is by first objective.
  std::vector<ObjectiveVector> pts = line(12);
  std::reverse(pts.begin(), pts.end());
  auto idx = ordered_center_indices(pts, 3);
  std::vector<double> first;
  for (auto i : idx) first.push_back(pts[i][0]);
  CHECK(first == std::vector<double>{2, 6, 10});

  CHECK(ordered_center_indices(line(1), 1) == std::vector<std::size_t>{0});
  const auto five = line(5);
  idx = ordered_center_indices(five, 5);
  CHECK(idx == std::vector<std::size_t>{0, 1, 2, 3, 4});
  // More centers than points: step and offset are both zero.
  idx = ordered_center_indices(line(3), 5);
  CHECK(idx == std::vector<std::size_t>(5, 0));
  CHECK_THROWS_AS(ordered_center_indices(five, 0), InvalidArgument);
}

TEST_CASE("kmeans basics") {
  RandomSource rng(1);
  const auto pts = line(9);
  SUBCASE("k = 1 puts everything in one cluster at the mean") {
    const auto c = kmeans(pts, 1, rng);
    CHECK(c.nonempty == std::vector<std::size_t>{0});
    CHECK(c.centers[0][0] == doctest::Approx(4.0));
    CHECK(c.centers[0][1] == doctest::Approx(5.0));
  }
  SUBCASE("k = N distinct points gives singletons") {
    const auto c = kmeans(pts, pts.size(), rng);
    CHECK(c.nonempty.size() == pts.size());
    CHECK(c.wcss == doctest::Approx(0.0));
  }
  SUBCASE("duplicates collapse into one cluster and leave others empty") {
    std::vector<ObjectiveVector> same(6, ObjectiveVector{1, 1});
    const auto c = kmeans(same, 3, rng);
    CHECK(c.nonempty.size() == 1);
  }
  CHECK_THROWS_AS(kmeans(pts, 0, rng), InvalidArgument);
  CHECK_THROWS_AS(kmeans(std::vector<ObjectiveVector>{}, 2, rng), InvalidArgument);
}

TEST_CASE("kmeans recovers two separated groups like the exhaustive minimizer") {
  std::vector<ObjectiveVector> pts;
  for (int i = 0; i < 5; ++i) pts.push_back({0, 10});
  for (int i = 0; i < 5; ++i) pts.push_back({10, 0});
  RandomSource rng(3);
  const auto c = kmeans(pts, 2, rng);
  std::vector<oracle::Point> plain;
  for (const auto& p : pts) plain.push_back({p[0], p[1]});
  std::vector<int> labels;
  const double best = oracle::best_two_partition_wcss(plain, &labels);
  CHECK(c.wcss == doctest::Approx(best));
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < pts.size(); ++j)
      CHECK((c.assignment[i] == c.assignment[j]) == (labels[i] == labels[j]));

  // Noisy groups, still against the exhaustive oracle.
  for (int t = 0; t < 20; ++t) {
    std::vector<ObjectiveVector> noisy;
    for (int i = 0; i < 6; ++i) noisy.push_back({rng.uniform(), 10 + rng.uniform()});
    for (int i = 0; i < 6; ++i) noisy.push_back({10 + rng.uniform(), rng.uniform()});
    std::vector<oracle::Point> np;
    for (const auto& p : noisy) np.push_back({p[0], p[1]});
    CHECK(kmeans(noisy, 2, rng).wcss == doctest::Approx(oracle::best_two_partition_wcss(np)));
  }
}

TEST_CASE("kmeans invariants on random inputs") {
  RandomSource rng(11);
  for (int t = 0; t < 50; ++t) {
    std::vector<ObjectiveVector> pts;
    const std::size_t n = 1 + rng.below(200);
    for (std::size_t i = 0; i < n; ++i) pts.push_back({double(rng.below(30)), double(rng.below(30))});
    const std::size_t k = 1 + rng.below(12);

    const auto single = kmeans_from(pts, init_centers_ordered(pts, k), 100);
    for (std::size_t i = 1; i < single.wcss_trace.size(); ++i)
      CHECK(single.wcss_trace[i] <= single.wcss_trace[i - 1] + 1e-9);
    CHECK(single.iterations <= 100);
    if (single.converged) check_fixed_point(pts, single);

    RandomSource a(t);
    RandomSource b(t);
    const auto c1 = kmeans(pts, k, a);
    const auto c2 = kmeans(pts, k, b);
    CHECK(c1.assignment == c2.assignment);
    CHECK(c1.wcss <= single.wcss + 1e-9);
    for (std::size_t i = 0; i < pts.size(); ++i) CHECK(c1.assignment[i] < k);
  }
}

TEST_CASE("kmeans respects the iteration cap") {
  std::vector<ObjectiveVector> pts;
  for (int i = 0; i < 100; ++i) pts.push_back({double(i * i % 37), double(i % 11)});
  const auto c = kmeans_from(pts, init_centers_ordered(pts, 7), 1);
  CHECK(c.iterations == 1);
}
