#include "mohboa/genotype.hpp"

#include <bit>
#include <cmath>

#include "mohboa/errors.hpp"

namespace mohboa {

Genotype::Genotype(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

Genotype Genotype::from_string(std::string_view bits) {
  Genotype g(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      g.set(i, true);
    else if (bits[i] != '0')
      throw InvalidArgument("Genotype::from_string: expected only '0' and '1'");
  }
  return g;
}

std::size_t Genotype::count_ones() const noexcept {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::string Genotype::to_string() const {
  std::string out(n_, '0');
  for (std::size_t i = 0; i < n_; ++i)
    if ((*this)[i]) out[i] = '1';
  return out;
}

Genotype random_genotype(std::size_t n, RandomSource& rng) {
  if (n == 0) throw InvalidArgument("random_genotype: n must be at least 1");
  Genotype g(n);
  auto words = g.words();
  for (auto& w : words) w = rng.next();
  if (const std::size_t tail = n & 63; tail != 0)
    words.back() &= (std::uint64_t{1} << tail) - 1;
  return g;
}

std::size_t hamming_distance(const Genotype& a, const Genotype& b) {
  if (a.size() != b.size())
    throw InvalidArgument("hamming_distance: genotype lengths differ");
  auto wa = a.words();
  auto wb = b.words();
  std::size_t d = 0;
  for (std::size_t i = 0; i < wa.size(); ++i)
    d += static_cast<std::size_t>(std::popcount(wa[i] ^ wb[i]));
  return d;
}

double euclidean_distance(const ObjectiveVector& a, const ObjectiveVector& b) {
  if (a.size() != b.size())
    throw InvalidArgument("euclidean_distance: dimension mismatch");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

Population random_population(std::size_t count, std::size_t n, RandomSource& rng) {
  Population pop;
  pop.reserve(count);
  for (std::size_t i = 0; i < count; ++i) pop.emplace_back(random_genotype(n, rng));
  return pop;
}

}  // namespace mohboa
