#include "mohboa/variation.hpp"

#include "mohboa/errors.hpp"

namespace mohboa {

std::pair<Genotype, Genotype> two_point_crossover(const Genotype& a, const Genotype& b,
                                                  std::size_t c1, std::size_t c2) {
  if (a.size() != b.size()) throw InvalidArgument("two_point_crossover: parent lengths differ");
  if (!(c1 < c2) || c2 > a.size())
    throw InvalidArgument("two_point_crossover: cuts must satisfy c1 < c2 <= n");
  Genotype x = a;
  Genotype y = b;
  for (std::size_t i = c1; i < c2; ++i) {
    x.set(i, b[i]);
    y.set(i, a[i]);
  }
  return {std::move(x), std::move(y)};
}

std::vector<Genotype> ga_variation(std::span<const Genotype> parents, std::size_t count,
                                   const GAOperatorParams& params, RandomSource& rng) {
  if (parents.empty()) throw InvalidArgument("ga_variation: no parents");
  const double pc = params.crossover_probability;
  const std::size_t n = parents.front().size();
  const double pm = params.resolved_mutation(n);
  if (pc < 0 || pc > 1 || pm < 0 || pm > 1)
    throw InvalidArgument("ga_variation: probabilities must lie in [0, 1]");

  std::vector<Genotype> out;
  out.reserve(count + 1);
  while (out.size() < count) {
    const Genotype& a = parents[rng.below(parents.size())];
    const Genotype& b = parents[rng.below(parents.size())];
    std::pair<Genotype, Genotype> children{a, b};
    // Two distinct cuts need n >= 3; shorter strings are only mutated.
    if (n >= 3 && rng.bernoulli(pc)) {
      std::size_t c1 = 1 + rng.below(n - 1);
      std::size_t c2 = 1 + rng.below(n - 2);
      if (c2 >= c1) ++c2;
      if (c1 > c2) std::swap(c1, c2);
      children = two_point_crossover(a, b, c1, c2);
    }
    for (Genotype* child : {&children.first, &children.second}) {
      if (pm > 0)
        for (std::size_t i = 0; i < n; ++i)
          if (rng.bernoulli(pm)) child->flip(i);
    }
    out.push_back(std::move(children.first));
    if (out.size() < count) out.push_back(std::move(children.second));
  }
  return out;
}

}  // namespace mohboa
