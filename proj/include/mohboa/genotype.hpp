#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mohboa/random.hpp"

namespace mohboa {

/// Fixed-length binary string stored as packed 64-bit words. Bits past
/// size() in the last word are always zero.
class Genotype {
 public:
  Genotype() = default;
  explicit Genotype(std::size_t n);

  // Parses a string of '0'/'1' characters, position 0 first.
  static Genotype from_string(std::string_view bits);

  std::size_t size() const noexcept { return n_; }
  bool empty() const noexcept { return n_ == 0; }

  bool operator[](std::size_t i) const noexcept {
    return (words_[i >> 6] >> (i & 63)) & 1U;
  }
  void set(std::size_t i, bool value) noexcept {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }
  void flip(std::size_t i) noexcept { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  std::size_t count_ones() const noexcept;
  std::span<const std::uint64_t> words() const noexcept { return words_; }
  std::span<std::uint64_t> words() noexcept { return words_; }
  std::string to_string() const;

  friend bool operator==(const Genotype&, const Genotype&) = default;
  friend auto operator<=>(const Genotype&, const Genotype&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

Genotype random_genotype(std::size_t n, RandomSource& rng);

std::size_t hamming_distance(const Genotype& a, const Genotype& b);

/// Objective values of one solution; every coordinate is maximized.
class ObjectiveVector {
 public:
  ObjectiveVector() = default;
  explicit ObjectiveVector(std::vector<double> values) : values_(std::move(values)) {}
  ObjectiveVector(std::initializer_list<double> values) : values_(values) {}

  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  double operator[](std::size_t i) const noexcept { return values_[i]; }
  std::span<const double> values() const noexcept { return values_; }

  friend bool operator==(const ObjectiveVector&, const ObjectiveVector&) = default;
  friend auto operator<=>(const ObjectiveVector& a, const ObjectiveVector& b) {
    return std::lexicographical_compare_three_way(
        a.values_.begin(), a.values_.end(), b.values_.begin(), b.values_.end(),
        [](double x, double y) { return std::weak_order(x, y); });
  }

 private:
  std::vector<double> values_;
};

double euclidean_distance(const ObjectiveVector& a, const ObjectiveVector& b);

struct Individual {
  Genotype genotype;
  ObjectiveVector objectives;  // empty until evaluated
  std::optional<unsigned> rank;
  std::optional<double> crowding;

  Individual() = default;
  explicit Individual(Genotype g) : genotype(std::move(g)) {}

  bool evaluated() const noexcept { return !objectives.empty(); }
  void clear_ranking() noexcept {
    rank.reset();
    crowding.reset();
  }
};

/// Ordered multiset of individuals sharing genotype length and objective
/// dimension. The population size N is the vector size.
using Population = std::vector<Individual>;

Population random_population(std::size_t count, std::size_t n, RandomSource& rng);

}  // namespace mohboa
