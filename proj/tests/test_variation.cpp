#include "doctest.h"

#include <cmath>

#include "mohboa/errors.hpp"
#include "mohboa/problems.hpp"
#include "mohboa/variation.hpp"

using namespace mohboa;

namespace {

std::vector<Genotype> strings(std::initializer_list<const char*> bits) {
  std::vector<Genotype> out;
  for (const char* b : bits) out.push_back(Genotype::from_string(b));
  return out;
}

// Pareto-optimal trap strings (every block all zeros or all ones) with a
// little bit-flip noise.
std::vector<Genotype> trap_optimal_cluster(std::size_t n, std::size_t count, double noise,
                                           RandomSource& rng) {
  std::vector<Genotype> out;
  for (std::size_t c = 0; c < count; ++c) {
    Genotype g(n);
    for (std::size_t b = 0; b < n / 5; ++b) {
      const bool v = rng.coin();
      for (std::size_t k = 0; k < 5; ++k) g.set(5 * b + k, v != rng.bernoulli(noise));
    }
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

TEST_CASE("umda_build") {
  auto m = umda_build(strings({"11111", "11111"}));
  for (double p : m.p) CHECK(p == doctest::Approx(0.75));
  m = umda_build(strings({"10101", "01010"}));
  for (double p : m.p) CHECK(p == doctest::Approx(0.5));
  const auto f = bit_frequencies(strings({"111", "110", "100"}));
  CHECK(f[0] == doctest::Approx(1.0));
  CHECK(f[1] == doctest::Approx(2.0 / 3.0));
  CHECK(f[2] == doctest::Approx(1.0 / 3.0));
  CHECK_THROWS_AS(umda_build(std::vector<Genotype>{}), InvalidArgument);
}

TEST_CASE("umda_sample") {
  RandomSource rng(1);
  UnivariateModel m{std::vector<double>(10, 0.75)};
  CHECK(umda_sample(m, 0, rng).empty());
  const auto s = umda_sample(m, 1000, rng);
  double ones = 0;
  for (const auto& g : s) ones += g.count_ones();
  const double frac = ones / 10000.0;
  const double sigma = std::sqrt(0.75 * 0.25 / 10000.0);
  CHECK(std::abs(frac - 0.75) <= 3 * sigma);

  RandomSource a(9);
  RandomSource b(9);
  CHECK(umda_sample(m, 20, a) == umda_sample(m, 20, b));

  // Per-position frequencies follow p.
  UnivariateModel skew{{0.1, 0.5, 0.9}};
  const auto t = umda_sample(skew, 20000, rng);
  for (std::size_t i = 0; i < 3; ++i) {
    double c = 0;
    for (const auto& g : t) c += g[i];
    const double sd = std::sqrt(skew.p[i] * (1 - skew.p[i]) / 20000.0);
    CHECK(std::abs(c / 20000.0 - skew.p[i]) <= 4 * sd);
  }
}

TEST_CASE("two-point crossover and bit-flip mutation") {
  const auto [x, y] = two_point_crossover(Genotype::from_string("00000"), Genotype::from_string("11111"), 1, 3);
  CHECK(x.to_string() == "01100");
  CHECK(y.to_string() == "10011");
  CHECK_THROWS_AS(two_point_crossover(Genotype(5), Genotype(5), 3, 3), InvalidArgument);

  RandomSource rng(2);
  const auto parents = strings({"00000", "11111", "10101"});
  const auto copies = ga_variation(parents, 9, GAOperatorParams{0.0, 0.0}, rng);
  CHECK(copies.size() == 9);
  for (const auto& c : copies) CHECK(std::find(parents.begin(), parents.end(), c) != parents.end());

  const auto flipped = ga_variation(strings({"00110"}), 5, GAOperatorParams{0.0, 1.0}, rng);
  for (const auto& c : flipped) CHECK(c.to_string() == "11001");

  // With p_c = 1 every pair of children is a two-point exchange of the
  // parents: positionwise the pair holds one bit from each parent.
  const auto crossed = ga_variation(strings({"0000000000", "1111111111"}), 200, GAOperatorParams{1.0, 0.0}, rng);
  CHECK(crossed.size() == 200);
  for (std::size_t i = 0; i + 1 < crossed.size(); i += 2)
    for (std::size_t b = 0; b < 10; ++b) {
      if (crossed[i] == crossed[i + 1]) continue;  // identical parents drawn
      CHECK(crossed[i][b] != crossed[i + 1][b]);
    }
  CHECK(ga_variation(parents, 0, {}, rng).empty());
  CHECK(ga_variation(parents, 7, {}, rng).size() == 7);
  CHECK_THROWS_AS(ga_variation(std::vector<Genotype>{}, 3, {}, rng), InvalidArgument);
}

TEST_CASE("hboa_build on identical strings keeps single leaves") {
  std::vector<Genotype> cluster(20, Genotype::from_string("1011001"));
  const auto model = hboa_build(cluster);
  for (const auto& t : model.trees()) CHECK(t.leaf_count() == 1);
  CHECK(model.edge_count() == 0);
  CHECK_THROWS_AS(hboa_build(std::vector<Genotype>(1, Genotype(3))), InvalidArgument);
}

TEST_CASE("hboa_build on a copied variable adds exactly one edge") {
  RandomSource rng(4);
  std::vector<Genotype> cluster;
  for (int i = 0; i < 100; ++i) {
    Genotype g(2);
    const bool v = rng.coin();
    g.set(0, v);
    g.set(1, v);
    cluster.push_back(g);
  }
  const auto model = hboa_build(cluster);
  CHECK(model.edge_count() == 1);
  CHECK(model.acyclic());
  const bool one_on_zero = model.parents(1) == std::vector<std::size_t>{0};
  const bool zero_on_one = model.parents(0) == std::vector<std::size_t>{1};
  CHECK(one_on_zero != zero_on_one);
}

TEST_CASE("hboa scores rise with every accepted split and match a recount") {
  RandomSource rng(5);
  for (int t = 0; t < 10; ++t) {
    const auto cluster = trap_optimal_cluster(15, 120, 0.05, rng);
    HboaBuildTrace trace;
    const auto model = hboa_build(cluster, &trace);
    REQUIRE(trace.scores.size() >= 2);
    for (std::size_t i = 1; i < trace.scores.size(); ++i) CHECK(trace.scores[i] > trace.scores[i - 1]);
    CHECK(hboa_score(model, cluster) == doctest::Approx(trace.scores.back()).epsilon(1e-9));
    CHECK(model.acyclic());
    const double lo = probability_floor(cluster.size());
    for (const auto& tree : model.trees())
      for (const auto& node : tree.nodes)
        if (node.leaf()) {
          CHECK(node.p_one >= lo);
          CHECK(node.p_one <= 1 - lo);
        }
  }
}

TEST_CASE("hboa learns trap linkage") {
  // Over 20 seeds, edges between positions of the same block must far
  // outnumber edges crossing blocks.
  std::size_t within = 0;
  std::size_t across = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    RandomSource rng(seed);
    const auto cluster = trap_optimal_cluster(10, 200, 0.02, rng);
    const auto model = hboa_build(cluster);
    for (std::size_t i = 0; i < model.size(); ++i)
      for (std::size_t p : model.parents(i)) (p / 5 == i / 5 ? within : across) += 1;
  }
  MESSAGE("within-block edges " << within << ", cross-block edges " << across);
  CHECK(within > 0);
  CHECK(within >= 10 * std::max<std::size_t>(across, 1));
}

TEST_CASE("hboa_sample") {
  RandomSource rng(6);
  SUBCASE("uniform leaves give uniform strings") {
    BayesNetLocal m(std::vector<DecisionTree>(8));
    const auto s = hboa_sample(m, 5000, rng);
    double ones = 0;
    for (const auto& g : s) ones += g.count_ones();
    CHECK(std::abs(ones / 40000.0 - 0.5) < 4 * std::sqrt(0.25 / 40000.0));
  }
  SUBCASE("deterministic leaves copy the parent") {
    DecisionTree x2;
    x2.nodes = {DecisionNode{0, 1, 2, 0.5}, DecisionNode{-1, -1, -1, 0.0}, DecisionNode{-1, -1, -1, 1.0}};
    BayesNetLocal m(std::vector<DecisionTree>{DecisionTree{}, x2});
    for (const auto& g : hboa_sample(m, 500, rng)) CHECK(g[0] == g[1]);
  }
  SUBCASE("fixed seed reproduces samples") {
    RandomSource src(7);
    const auto cluster = trap_optimal_cluster(10, 100, 0.05, src);
    const auto model = hboa_build(cluster);
    RandomSource a(1);
    RandomSource b(1);
    CHECK(hboa_sample(model, 50, a) == hboa_sample(model, 50, b));
  }
  SUBCASE("cyclic models are rejected") {
    DecisionTree on0;
    on0.nodes = {DecisionNode{0, 1, 2}, DecisionNode{}, DecisionNode{}};
    DecisionTree on1;
    on1.nodes = {DecisionNode{1, 1, 2}, DecisionNode{}, DecisionNode{}};
    BayesNetLocal cyclic(std::vector<DecisionTree>{on1, on0});
    CHECK_FALSE(cyclic.acyclic());
    CHECK_THROWS_AS(hboa_sample(cyclic, 1, rng), InvalidState);
  }
}

TEST_CASE("independent_network carries clamped marginals") {
  const auto cluster = strings({"110", "100"});
  const auto net = independent_network(cluster);
  CHECK(net.tree(0).nodes[0].p_one == doctest::Approx(0.75));
  CHECK(net.tree(1).nodes[0].p_one == doctest::Approx(0.5));
  CHECK(net.tree(2).nodes[0].p_one == doctest::Approx(0.25));
}
