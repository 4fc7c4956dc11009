#include "mohboa/variation.hpp"

#include <algorithm>

#include "mohboa/errors.hpp"

namespace mohboa {

double probability_floor(std::size_t cluster_size) noexcept {
  return 1.0 / (2.0 * static_cast<double>(cluster_size));
}

std::vector<double> bit_frequencies(std::span<const Genotype> cluster) {
  if (cluster.empty()) throw InvalidArgument("bit_frequencies: empty cluster");
  const std::size_t n = cluster.front().size();
  std::vector<double> ones(n, 0.0);
  for (const auto& g : cluster) {
    if (g.size() != n) throw InvalidArgument("bit_frequencies: genotype lengths differ");
    for (std::size_t i = 0; i < n; ++i)
      if (g[i]) ones[i] += 1.0;
  }
  for (auto& f : ones) f /= static_cast<double>(cluster.size());
  return ones;
}

UnivariateModel umda_build(std::span<const Genotype> cluster) {
  if (cluster.empty()) throw InvalidArgument("umda_build: empty cluster");
  UnivariateModel model{bit_frequencies(cluster)};
  const double lo = probability_floor(cluster.size());
  for (auto& p : model.p) p = std::clamp(p, lo, 1.0 - lo);
  return model;
}

std::vector<Genotype> umda_sample(const UnivariateModel& model, std::size_t count,
                                  RandomSource& rng) {
  std::vector<Genotype> out;
  out.reserve(count);
  const std::size_t n = model.p.size();
  for (std::size_t c = 0; c < count; ++c) {
    Genotype g(n);
    for (std::size_t i = 0; i < n; ++i)
      if (rng.bernoulli(model.p[i])) g.set(i, true);
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace mohboa
