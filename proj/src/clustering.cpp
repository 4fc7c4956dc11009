#include "mohboa/clustering.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

#include "mohboa/errors.hpp"

namespace mohboa {

namespace {

double squared_distance(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

// Selected populations repeat objective vectors heavily, so Lloyd iterations
// run on distinct values weighted by multiplicity. Every copy of a value
// always lands in the same cluster, so the result equals the per-point one.
struct WeightedPoints {
  std::vector<std::vector<double>> values;
  std::vector<double> weight;
  std::vector<std::size_t> point_to_value;
};

WeightedPoints compress(std::span<const ObjectiveVector> points) {
  WeightedPoints w;
  std::map<ObjectiveVector, std::size_t> index;
  w.point_to_value.reserve(points.size());
  for (const auto& p : points) {
    auto [it, inserted] = index.try_emplace(p, w.values.size());
    if (inserted) {
      w.values.emplace_back(p.values().begin(), p.values().end());
      w.weight.push_back(0.0);
    }
    w.weight[it->second] += 1.0;
    w.point_to_value.push_back(it->second);
  }
  return w;
}

std::size_t nearest(std::span<const double> x, const std::vector<std::vector<double>>& centers) {
  std::size_t best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < centers.size(); ++c) {
    const double d = squared_distance(x, centers[c]);
    if (d < best_d) {
      best_d = d;
      best = c;
    }
  }
  return best;
}

Clustering lloyd(std::span<const ObjectiveVector> points, const WeightedPoints& wp,
                 std::vector<ObjectiveVector> initial, std::size_t max_iters) {
  const std::size_t k = initial.size();
  if (k == 0) throw InvalidArgument("kmeans: k must be at least 1");
  if (points.empty()) throw InvalidArgument("kmeans: no points to cluster");
  const std::size_t m = points.front().size();

  std::vector<std::vector<double>> centers;
  centers.reserve(k);
  for (const auto& c : initial) {
    if (c.size() != m) throw InvalidArgument("kmeans: center dimension mismatch");
    centers.emplace_back(c.values().begin(), c.values().end());
  }

  const std::size_t u = wp.values.size();
  std::vector<std::size_t> assign(u);
  auto total_wcss = [&] {
    double s = 0.0;
    for (std::size_t v = 0; v < u; ++v) s += wp.weight[v] * squared_distance(wp.values[v], centers[assign[v]]);
    return s;
  };
  auto recompute = [&] {
    std::vector<std::vector<double>> sum(k, std::vector<double>(m, 0.0));
    std::vector<double> mass(k, 0.0);
    for (std::size_t v = 0; v < u; ++v) {
      mass[assign[v]] += wp.weight[v];
      for (std::size_t d = 0; d < m; ++d) sum[assign[v]][d] += wp.weight[v] * wp.values[v][d];
    }
    for (std::size_t c = 0; c < k; ++c)
      if (mass[c] > 0)
        for (std::size_t d = 0; d < m; ++d) centers[c][d] = sum[c][d] / mass[c];
  };

  Clustering out;
  out.k = k;
  for (std::size_t v = 0; v < u; ++v) assign[v] = nearest(wp.values[v], centers);
  out.wcss_trace.push_back(total_wcss());
  while (out.iterations < max_iters) {
    recompute();
    ++out.iterations;
    bool changed = false;
    for (std::size_t v = 0; v < u; ++v) {
      const std::size_t c = nearest(wp.values[v], centers);
      if (c != assign[v]) {
        assign[v] = c;
        changed = true;
      }
    }
    out.wcss_trace.push_back(total_wcss());
    if (!changed) {
      out.converged = true;
      break;
    }
  }
  recompute();

  out.assignment.resize(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) out.assignment[i] = assign[wp.point_to_value[i]];
  std::vector<bool> used(k, false);
  for (std::size_t c : out.assignment) used[c] = true;
  for (std::size_t c = 0; c < k; ++c)
    if (used[c]) out.nonempty.push_back(c);
  out.centers.reserve(k);
  for (auto& c : centers) out.centers.emplace_back(std::move(c));
  out.wcss = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i)
    out.wcss += squared_distance(points[i].values(), out.centers[out.assignment[i]].values());
  return out;
}

}  // namespace

std::vector<std::vector<std::size_t>> Clustering::members() const {
  std::vector<std::vector<std::size_t>> out(k);
  for (std::size_t i = 0; i < assignment.size(); ++i) out[assignment[i]].push_back(i);
  return out;
}

std::vector<std::size_t> ordered_center_indices(std::span<const ObjectiveVector> points,
                                                std::size_t k) {
  if (k == 0) throw InvalidArgument("init_centers_ordered: k must be at least 1");
  if (points.empty()) throw InvalidArgument("init_centers_ordered: no points");
  const std::size_t n = points.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (points[a][0] != points[b][0]) return points[a][0] < points[b][0];
    return points[a].size() > 1 && points[a][1] < points[b][1];
  });
  const std::size_t offset = n / (2 * k);
  const std::size_t step = n / k;
  std::vector<std::size_t> out(k);
  for (std::size_t i = 0; i < k; ++i) out[i] = order[std::min(n - 1, offset + i * step)];
  return out;
}

std::vector<ObjectiveVector> init_centers_ordered(std::span<const ObjectiveVector> points,
                                                  std::size_t k) {
  std::vector<ObjectiveVector> centers;
  for (std::size_t idx : ordered_center_indices(points, k)) centers.push_back(points[idx]);
  return centers;
}

Clustering kmeans_from(std::span<const ObjectiveVector> points,
                       std::vector<ObjectiveVector> centers, std::size_t max_iters) {
  return lloyd(points, compress(points), std::move(centers), max_iters);
}

Clustering kmeans(std::span<const ObjectiveVector> points, std::size_t k, RandomSource& rng,
                  KMeansOptions options) {
  if (k == 0) throw InvalidArgument("kmeans: k must be at least 1");
  if (points.empty()) throw InvalidArgument("kmeans: no points to cluster");
  const WeightedPoints wp = compress(points);
  Clustering best = lloyd(points, wp, init_centers_ordered(points, k), options.max_iters);
  for (std::size_t r = 1; r < options.restarts; ++r) {
    std::vector<ObjectiveVector> centers;
    centers.reserve(k);
    const std::size_t distinct = std::min(k, points.size());
    for (std::size_t idx : rng.sample_distinct(points.size(), distinct)) centers.push_back(points[idx]);
    // More clusters than points: the surplus centers duplicate existing
    // ones and end up empty.
    for (std::size_t i = distinct; i < k; ++i) centers.push_back(centers[i % distinct]);
    Clustering attempt = lloyd(points, wp, std::move(centers), options.max_iters);
    if (attempt.wcss < best.wcss) best = std::move(attempt);
  }
  return best;
}

}  // namespace mohboa
