#include "doctest.h"

#include <set>

#include "mohboa/errors.hpp"
#include "mohboa/problems.hpp"
#include "mohboa/replacement.hpp"

using namespace mohboa;

namespace {

Population evaluated_random(const Problem& p, std::size_t count, RandomSource& rng) {
  Evaluator ev(p);
  auto pop = random_population(count, p.size(), rng);
  ev.evaluate(pop);
  return pop;
}

std::size_t rank_one_count(Population pop) {
  nondominated_sort(pop);
  std::size_t c = 0;
  for (const auto& i : pop) c += *i.rank == 1;
  return c;
}

Individual ind(const char* bits, double f1, double f2) {
  Individual i(Genotype::from_string(bits));
  i.objectives = ObjectiveVector{f1, f2};
  return i;
}

}  // namespace

TEST_CASE("window defaults and names") {
  CHECK(default_rtr_window(30, 100) == 5);
  CHECK(default_rtr_window(30, 10) == 1);
  CHECK(default_rtr_window(4, 1000) == 4);
  CHECK(parse_replacement("elitist")->scheme == ReplacementScheme::Elitist);
  CHECK(parse_replacement("rtr")->metric == RtrMetric::Hamming);
  CHECK(parse_replacement("rtr-objective")->metric == RtrMetric::EuclideanObjective);
  CHECK_FALSE(parse_replacement("nsga"));
  CHECK(replacement_label(*parse_replacement("rtr-objective")) == "rtr-objective");
}

TEST_CASE("empty offspring leave the parents in place") {
  RandomSource rng(1);
  const auto problem = Problem::trap5_invtrap5(10);
  const auto parents = evaluated_random(problem, 20, rng);
  for (auto scheme : {ReplacementScheme::Elitist, ReplacementScheme::Rtr}) {
    const auto out = replace(parents, {}, ReplacementConfig{scheme, std::nullopt, RtrMetric::Hamming}, rng);
    REQUIRE(out.size() == parents.size());
    std::multiset<std::string> before;
    std::multiset<std::string> after;
    for (const auto& i : parents) before.insert(i.genotype.to_string());
    for (const auto& i : out) after.insert(i.genotype.to_string());
    CHECK(before == after);
  }
}

TEST_CASE("elitist replacement") {
  RandomSource rng(2);
  const auto problem = Problem::onemax_zeromax(5);
  SUBCASE("dominating offspring displace dominated parents") {
    // Parents are dominated; the offspring sit on the front.
    Population parents;
    Population offspring;
    for (int i = 0; i < 4; ++i) {
      parents.push_back(ind("00000", 1.0, 1.0));
      offspring.push_back(ind("00000", i, 5 - i));
    }
    const auto out = elitist_replace(parents, offspring, rng);
    for (const auto& ind : out) CHECK(ind.objectives != (ObjectiveVector{1.0, 1.0}));
  }
  SUBCASE("enough first-front members fill the population") {
    const auto parents = evaluated_random(Problem::onemax_zeromax(12), 30, rng);
    const auto offspring = evaluated_random(Problem::onemax_zeromax(12), 30, rng);
    // Onemax-zeromax: every string is Pareto optimal.
    const auto out = elitist_replace(parents, offspring, rng);
    CHECK(out.size() == 30);
    CHECK(rank_one_count(out) == 30);
  }
  SUBCASE("keeps the best merged ranks") {
    const auto p3 = Problem::trap5_invtrap5(15);
    for (int t = 0; t < 20; ++t) {
      auto parents = evaluated_random(p3, 25, rng);
      auto offspring = evaluated_random(p3, 25, rng);
      auto out = elitist_replace(parents, offspring, rng);
      Population all = parents;
      all.insert(all.end(), offspring.begin(), offspring.end());
      nondominated_sort(all);
      std::vector<std::size_t> ranks;
      for (const auto& i : all) ranks.push_back(*i.rank);
      std::sort(ranks.begin(), ranks.end());
      std::size_t worst_kept = 0;
      for (const auto& i : out) worst_kept = std::max<std::size_t>(worst_kept, *i.rank);
      CHECK(worst_kept == ranks[24]);
    }
  }
}

TEST_CASE("rtr replacement") {
  RandomSource rng(3);
  SUBCASE("single parent, window 1") {
    Population parents{ind("00000", 1.0, 1.0)};
    Population better{ind("11111", 5.0, 5.0)};
    Population worse{ind("11111", 0.0, 0.0)};
    auto out = rtr_replace(parents, better, 1, RtrMetric::Hamming, rng);
    CHECK(out[0].genotype.to_string() == "11111");
    out = rtr_replace(parents, worse, 1, RtrMetric::Hamming, rng);
    CHECK(out[0].genotype.to_string() == "00000");
  }
  SUBCASE("window bounds") {
    const auto parents = evaluated_random(Problem::onemax_zeromax(6), 5, rng);
    CHECK_THROWS_AS(rtr_replace(parents, parents, 0, RtrMetric::Hamming, rng), InvalidArgument);
    CHECK_THROWS_AS(rtr_replace(parents, parents, 6, RtrMetric::Hamming, rng), InvalidArgument);
    CHECK_NOTHROW(rtr_replace(parents, parents, 5, RtrMetric::EuclideanObjective, rng));
  }
  SUBCASE("survivors come from parents or offspring") {
    const auto problem = Problem::trap5_invtrap5(10);
    for (int t = 0; t < 20; ++t) {
      const auto parents = evaluated_random(problem, 40, rng);
      const auto offspring = evaluated_random(problem, 40, rng);
      for (auto metric : {RtrMetric::Hamming, RtrMetric::EuclideanObjective}) {
        const auto out = rtr_replace(parents, offspring, 5, metric, rng);
        REQUIRE(out.size() == 40);
        std::set<std::string> pool;
        for (const auto& i : parents) pool.insert(i.genotype.to_string());
        for (const auto& i : offspring) pool.insert(i.genotype.to_string());
        for (const auto& i : out) {
          CHECK(pool.count(i.genotype.to_string()) == 1);
          CHECK(problem.evaluate(i.genotype) == i.objectives);
        }
      }
    }
  }
  SUBCASE("full window replaces the nearest parent") {
    Population parents{ind("000000", 0.0, 6.0),
                       ind("111111", 6.0, 0.0),
                       ind("111000", 3.0, 3.0)};
    Population offspring{ind("111110", 5.0, 1.0)};
    const auto out = rtr_replace(parents, offspring, 3, RtrMetric::Hamming, rng);
    // Nearest by Hamming is 111111, an extreme with infinite crowding, so it
    // survives; the other members are untouched.
    CHECK(out[0].genotype.to_string() == "000000");
    CHECK(out[1].genotype.to_string() == "111111");
    CHECK(out[2].genotype.to_string() == "111000");
  }
}

TEST_CASE("rtr keeps both optima of a bimodal population") {
  // Parents split between all-zeros and all-ones neighbourhoods; offspring
  // are copies of the all-ones optimum. With Hamming niching the zero side
  // must survive.
  const auto problem = Problem::trap5_invtrap5(10);
  Evaluator ev(problem);
  std::size_t survived = 0;
  const int trials = 50;
  for (int t = 0; t < trials; ++t) {
    RandomSource rng(100 + t);
    Population parents;
    for (int i = 0; i < 20; ++i) {
      Genotype g(10);
      if (i % 2) for (std::size_t b = 0; b < 10; ++b) g.set(b, true);
      if (rng.coin()) g.flip(rng.below(10));
      parents.emplace_back(g);
    }
    ev.evaluate(parents);
    Population offspring(20, Individual(Genotype::from_string("1111111111")));
    ev.evaluate(offspring);
    const auto out = rtr_replace(parents, offspring, 20, RtrMetric::Hamming, rng);
    bool zeros = false;
    for (const auto& i : out) zeros |= i.genotype.count_ones() <= 1;
    survived += zeros;
  }
  CHECK(survived == trials);
}

TEST_CASE("rtr with offspring identical to the parents keeps the same strings") {
  RandomSource rng(7);
  const auto problem = Problem::trap5_invtrap5(10);
  const auto parents = evaluated_random(problem, 30, rng);
  // A full window always finds the twin at distance zero.
  const auto out = rtr_replace(parents, parents, 30, RtrMetric::Hamming, rng);
  std::multiset<std::string> before;
  std::multiset<std::string> after;
  for (const auto& i : parents) before.insert(i.genotype.to_string());
  for (const auto& i : out) after.insert(i.genotype.to_string());
  CHECK(before == after);
}

TEST_CASE("rtr preserves every front point of onemax-zeromax") {
  const auto problem = Problem::onemax_zeromax(5);
  const auto front = reference_front(problem);
  Evaluator ev(problem);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    RandomSource rng(seed);
    Population parents;
    for (int ones = 0; ones <= 5; ++ones) {
      Genotype g(5);
      for (int b = 0; b < ones; ++b) g.set(b, true);
      parents.emplace_back(g);
    }
    while (parents.size() < 24) parents.emplace_back(random_genotype(5, rng));
    ev.evaluate(parents);
    Population offspring(24, Individual(Genotype::from_string("11100")));
    ev.evaluate(offspring);
    const auto out = rtr_replace(parents, offspring, 24, RtrMetric::Hamming, rng);
    CHECK(front_coverage(out, front).full);
  }
}
