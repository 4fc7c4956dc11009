#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace mohboa {

/// Seeded xoshiro256** generator. All stochastic operators draw from one of
/// these, and every derived quantity (bounded integers, reals, shuffles) is
/// computed here so results do not depend on the standard library's
/// distribution implementations.
class RandomSource {
 public:
  using result_type = std::uint64_t;

  explicit RandomSource(std::uint64_t seed);

  std::uint64_t seed() const noexcept { return seed_; }

  std::uint64_t next() noexcept;
  result_type operator()() noexcept { return next(); }
  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~result_type{0}; }

  // Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  // Uniform real in [0, 1) with 53 random bits.
  double uniform() noexcept;
  bool bernoulli(double p) noexcept { return uniform() < p; }
  bool coin() noexcept { return (next() >> 63) != 0; }

  // Independent child stream; advances this generator by one draw.
  RandomSource split();

  // k distinct values from [0, n), in draw order (Floyd's algorithm).
  std::vector<std::size_t> sample_distinct(std::size_t n, std::size_t k);

  template <class T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = below(i);
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::uint64_t seed_;
  std::array<std::uint64_t, 4> state_{};
};

std::uint64_t splitmix64(std::uint64_t& state) noexcept;

// Order-sensitive combination of two seeds.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) noexcept;

// Stable 64-bit FNV-1a hash of a key (platform independent, unlike std::hash).
std::uint64_t hash_key(std::string_view key) noexcept;

}  // namespace mohboa
