#include "doctest.h"

#include <set>

#include "mohboa/errors.hpp"
#include "mohboa/problems.hpp"
#include "oracles.hpp"

using namespace mohboa;

namespace {

std::set<std::pair<int, int>> as_pairs(const ReferenceFront& f) {
  std::set<std::pair<int, int>> out;
  for (const auto& p : f.points) out.insert({static_cast<int>(p[0]), static_cast<int>(p[1])});
  return out;
}

}  // namespace

TEST_CASE("onemax and zeromax") {
  CHECK(onemax(Genotype::from_string("11111")) == 5);
  CHECK(onemax(Genotype::from_string("00000")) == 0);
  CHECK(onemax(Genotype::from_string("10110")) == 3);
  CHECK(zeromax(Genotype::from_string("00000")) == 5);
  CHECK(zeromax(Genotype::from_string("11111")) == 0);
  CHECK(zeromax(Genotype::from_string("10110")) == 2);

  RandomSource rng(2);
  for (int t = 0; t < 200; ++t) {
    const Genotype g = random_genotype(1 + rng.below(90), rng);
    CHECK(onemax(g) + zeromax(g) == static_cast<int>(g.size()));
  }
}

TEST_CASE("trap block functions") {
  CHECK(trap5_block(5) == 5);
  CHECK(trap5_block(0) == 4);
  CHECK(trap5_block(3) == 1);
  CHECK(invtrap5_block(0) == 5);
  CHECK(invtrap5_block(5) == 4);
  CHECK(invtrap5_block(1) == 0);
  const int trap[] = {4, 3, 2, 1, 0, 5};
  const int inv[] = {5, 0, 1, 2, 3, 4};
  for (int u = 0; u <= 5; ++u) {
    CHECK(trap5_block(u) == trap[u]);
    CHECK(invtrap5_block(u) == inv[u]);
  }
  CHECK_THROWS_AS(trap5_block(6), InvalidArgument);
  CHECK_THROWS_AS(trap5_block(-1), InvalidArgument);
  CHECK_THROWS_AS(invtrap5_block(6), InvalidArgument);
}

TEST_CASE("evaluate") {
  const Problem trap10 = Problem::trap5_invtrap5(10);
  CHECK(trap10.evaluate(Genotype::from_string("1111100000")) == ObjectiveVector{9, 9});
  CHECK(trap10.evaluate(Genotype::from_string("1111111111")) == ObjectiveVector{10, 8});
  CHECK(Problem::onemax_zeromax(5).evaluate(Genotype::from_string("11111")) == ObjectiveVector{5, 0});
  CHECK_THROWS_AS(trap10.evaluate(Genotype(9)), InvalidArgument);
  CHECK_THROWS_AS(Problem::trap5_invtrap5(7), InvalidArgument);
  CHECK_THROWS_AS(Problem::onemax_zeromax(0), InvalidArgument);
}

TEST_CASE("make_partition") {
  RandomSource rng(9);
  const Partition c = make_partition(10, PartitionMode::Contiguous, rng);
  REQUIRE(c.size() == 2);
  CHECK(c[0] == Block{0, 1, 2, 3, 4});
  CHECK(c[1] == Block{5, 6, 7, 8, 9});

  for (int t = 0; t < 20; ++t) {
    const Partition s = make_partition(30, PartitionMode::Shuffled, rng);
    REQUIRE(s.size() == 6);
    std::set<std::size_t> all;
    for (const auto& b : s) all.insert(b.begin(), b.end());
    CHECK(all.size() == 30);
    CHECK(*all.rbegin() == 29);
  }
  CHECK_THROWS_AS(make_partition(7, PartitionMode::Contiguous, rng), InvalidArgument);
  CHECK_THROWS_AS(Problem::trap5_invtrap5(10, Partition{Block{0, 1, 2, 3, 4}, Block{0, 6, 7, 8, 9}}),
                  InvalidArgument);
}

TEST_CASE("evaluation matches per-block oracle under shuffled partitions") {
  RandomSource rng(4);
  for (int t = 0; t < 10; ++t) {
    const Partition part = make_partition(20, PartitionMode::Shuffled, rng);
    const Problem p = Problem::trap5_invtrap5(20, part);
    std::vector<std::vector<std::size_t>> blocks;
    for (const auto& b : part) blocks.emplace_back(b.begin(), b.end());
    for (int k = 0; k < 100; ++k) {
      const Genotype g = random_genotype(20, rng);
      std::vector<int> bits(20);
      for (std::size_t i = 0; i < 20; ++i) bits[i] = g[i];
      const auto [a, b] = oracle::trap_pair(bits, blocks);
      CHECK(p.evaluate(g) == ObjectiveVector{static_cast<double>(a), static_cast<double>(b)});
    }
  }
}

TEST_CASE("partition order invariance") {
  // Relabel positions with a permutation; the permuted genotype under the
  // permuted partition scores the same as the original under contiguous.
  RandomSource rng(8);
  std::vector<std::size_t> perm(15);
  for (std::size_t i = 0; i < 15; ++i) perm[i] = i;
  rng.shuffle(std::span<std::size_t>(perm));
  Partition shuffled = contiguous_partition(15);
  for (auto& b : shuffled)
    for (auto& pos : b) pos = perm[pos];
  const Problem a = Problem::trap5_invtrap5(15);
  const Problem b = Problem::trap5_invtrap5(15, shuffled);
  for (int t = 0; t < 200; ++t) {
    const Genotype g = random_genotype(15, rng);
    Genotype h(15);
    for (std::size_t i = 0; i < 15; ++i) h.set(perm[i], g[i]);
    CHECK(a.evaluate(g) == b.evaluate(h));
  }
}

TEST_CASE("reference fronts") {
  CHECK(as_pairs(reference_front(Problem::onemax_zeromax(5))) ==
        std::set<std::pair<int, int>>{{0, 5}, {1, 4}, {2, 3}, {3, 2}, {4, 1}, {5, 0}});
  CHECK(as_pairs(reference_front(Problem::trap5_invtrap5(10))) ==
        std::set<std::pair<int, int>>{{8, 10}, {9, 9}, {10, 8}});
  CHECK(as_pairs(reference_front(Problem::trap5_invtrap5(5))) ==
        std::set<std::pair<int, int>>{{4, 5}, {5, 4}});
  CHECK(reference_front(Problem::onemax_zeromax(50)).size() == 51);
  CHECK(reference_front(Problem::trap5_invtrap5(30)).size() == 7);
}

TEST_CASE("reference fronts match exhaustive enumeration for small sizes") {
  for (int n = 1; n <= 12; ++n) {
    const auto brute = oracle::enumerate_front(n, [n](std::uint32_t x) { return oracle::onemax_zeromax(x, n); });
    CHECK(as_pairs(reference_front(Problem::onemax_zeromax(n))) == brute);
  }
  for (int n : {5, 10, 15}) {
    std::vector<std::vector<std::size_t>> blocks;
    for (int b = 0; b < n / 5; ++b) blocks.push_back({std::size_t(5 * b), std::size_t(5 * b + 1),
                                                       std::size_t(5 * b + 2), std::size_t(5 * b + 3),
                                                       std::size_t(5 * b + 4)});
    const auto brute = oracle::enumerate_front(n, [&](std::uint32_t x) {
      std::vector<int> bits(n);
      for (int i = 0; i < n; ++i) bits[i] = (x >> i) & 1U;
      return oracle::trap_pair(bits, blocks);
    });
    CHECK(as_pairs(reference_front(Problem::trap5_invtrap5(n))) == brute);
  }
}
