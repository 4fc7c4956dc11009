#include "mohboa/pareto.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "mohboa/errors.hpp"

namespace mohboa {

bool dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
  if (a.size() != b.size()) throw InvalidArgument("dominates: dimension mismatch");
  bool strict = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return false;
    if (a[i] > b[i]) strict = true;
  }
  return strict;
}

std::vector<unsigned> nondominated_ranks_quadratic(std::span<const ObjectiveVector> points) {
  const std::size_t n = points.size();
  std::vector<unsigned> rank(n, 0);
  std::vector<std::size_t> dominated_count(n, 0);
  std::vector<std::vector<std::size_t>> dominated_by(n);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      if (dominates(points[p], points[q])) {
        dominated_by[p].push_back(q);
        ++dominated_count[q];
      } else if (dominates(points[q], points[p])) {
        dominated_by[q].push_back(p);
        ++dominated_count[p];
      }
    }
  }
  std::vector<std::size_t> current;
  for (std::size_t p = 0; p < n; ++p)
    if (dominated_count[p] == 0) current.push_back(p);
  unsigned r = 1;
  while (!current.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t p : current) {
      rank[p] = r;
      for (std::size_t q : dominated_by[p])
        if (--dominated_count[q] == 0) next.push_back(q);
    }
    current = std::move(next);
    ++r;
  }
  return rank;
}

namespace {

// Two-objective sweep. After sorting by (f1 desc, f2 desc), every earlier
// point is no worse in f1, and within one front f2 is nondecreasing, so a
// point is dominated by a front iff it is dominated by that front's last
// member. "Dominated by front k" is monotone in k, which permits a binary
// search over fronts.
std::vector<unsigned> ranks_two_objective(std::span<const ObjectiveVector> points) {
  const std::size_t n = points.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (points[a][0] != points[b][0]) return points[a][0] > points[b][0];
    return points[a][1] > points[b][1];
  });
  std::vector<std::size_t> last_of_front;
  std::vector<unsigned> rank(n, 0);
  auto dominated_by_front = [&](std::size_t front, std::size_t p) {
    const auto& last = points[last_of_front[front]];
    return last[1] > points[p][1] || (last[1] == points[p][1] && last[0] > points[p][0]);
  };
  for (std::size_t p : order) {
    std::size_t lo = 0;
    std::size_t hi = last_of_front.size();
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      if (dominated_by_front(mid, p))
        lo = mid + 1;
      else
        hi = mid;
    }
    if (lo == last_of_front.size())
      last_of_front.push_back(p);
    else
      last_of_front[lo] = p;
    rank[p] = static_cast<unsigned>(lo + 1);
  }
  return rank;
}

}  // namespace

std::vector<unsigned> nondominated_ranks(std::span<const ObjectiveVector> points) {
  if (points.empty()) return {};
  const std::size_t m = points.front().size();
  for (const auto& p : points)
    if (p.size() != m) throw InvalidArgument("nondominated_ranks: dimension mismatch");
  if (m == 2) return ranks_two_objective(points);
  return nondominated_ranks_quadratic(points);
}

std::vector<double> crowding_distances(std::span<const ObjectiveVector> points,
                                       std::span<const unsigned> ranks,
                                       CrowdingOptions options) {
  if (points.size() != ranks.size())
    throw InvalidArgument("crowding_distances: ranks and points differ in length");
  constexpr double inf = std::numeric_limits<double>::infinity();
  std::vector<double> d(points.size(), 0.0);
  if (points.empty()) return d;

  const unsigned max_rank = *std::max_element(ranks.begin(), ranks.end());
  std::vector<std::vector<std::size_t>> by_rank(max_rank + 1);
  for (std::size_t i = 0; i < points.size(); ++i) by_rank[ranks[i]].push_back(i);

  const std::size_t m = points.front().size();
  std::vector<std::size_t> q;
  for (const auto& members : by_rank) {
    if (members.empty()) continue;
    const std::size_t size = members.size();
    for (std::size_t obj = 0; obj < m; ++obj) {
      q = members;
      std::stable_sort(q.begin(), q.end(),
                       [&](std::size_t a, std::size_t b) { return points[a][obj] < points[b][obj]; });
      d[q.front()] = inf;
      d[q.back()] = inf;
      const double range = points[q.back()][obj] - points[q.front()][obj];
      for (std::size_t i = 1; i + 1 < size; ++i) {
        double gap = points[q[i + 1]][obj] - points[q[i - 1]][obj];
        if (options.normalize && range > 0) gap /= range;
        d[q[i]] += gap;
      }
    }
  }
  return d;
}

namespace {

std::vector<ObjectiveVector> objectives_of(std::span<const Individual> pop) {
  std::vector<ObjectiveVector> out;
  out.reserve(pop.size());
  for (const auto& ind : pop) {
    if (!ind.evaluated()) throw InvalidState("ranking requires evaluated individuals");
    out.push_back(ind.objectives);
  }
  return out;
}

}  // namespace

void nondominated_sort(std::span<Individual> pop) {
  const auto ranks = nondominated_ranks(objectives_of(pop));
  for (std::size_t i = 0; i < pop.size(); ++i) pop[i].rank = ranks[i];
}

void crowding_assign(std::span<Individual> pop, CrowdingOptions options) {
  std::vector<unsigned> ranks;
  ranks.reserve(pop.size());
  for (const auto& ind : pop) {
    if (!ind.rank) throw InvalidState("crowding_assign: ranks must be assigned first");
    ranks.push_back(*ind.rank);
  }
  const auto d = crowding_distances(objectives_of(pop), ranks, options);
  for (std::size_t i = 0; i < pop.size(); ++i) pop[i].crowding = d[i];
}

void rank_and_crowd(std::span<Individual> pop, CrowdingOptions options) {
  const auto points = objectives_of(pop);
  const auto ranks = nondominated_ranks(points);
  const auto d = crowding_distances(points, ranks, options);
  for (std::size_t i = 0; i < pop.size(); ++i) {
    pop[i].rank = ranks[i];
    pop[i].crowding = d[i];
  }
}

Winner compare(const Individual& a, const Individual& b, RandomSource& rng) {
  if (!a.rank || !b.rank || !a.crowding || !b.crowding)
    throw InvalidState("compare: rank and crowding must be set on both individuals");
  if (*a.rank < *b.rank) return Winner::First;
  if (*a.rank > *b.rank) return Winner::Second;
  if (*a.crowding > *b.crowding) return Winner::First;
  if (*a.crowding < *b.crowding) return Winner::Second;
  return rng.coin() ? Winner::First : Winner::Second;
}

Population tournament_select(std::span<const Individual> pop, std::size_t count,
                             RandomSource& rng) {
  if (pop.empty()) throw InvalidArgument("tournament_select: empty population");
  Population out;
  out.reserve(count);
  for (std::size_t t = 0; t < count; ++t) {
    const auto& a = pop[rng.below(pop.size())];
    const auto& b = pop[rng.below(pop.size())];
    out.push_back(compare(a, b, rng) == Winner::First ? a : b);
  }
  return out;
}

Coverage front_coverage(std::span<const Individual> pop, const ReferenceFront& front) {
  std::vector<ObjectiveVector> seen;
  seen.reserve(pop.size());
  for (const auto& ind : pop)
    if (ind.evaluated()) seen.push_back(ind.objectives);
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  Coverage c;
  for (const auto& point : front.points)
    if (std::binary_search(seen.begin(), seen.end(), point)) ++c.covered;
  c.full = !front.points.empty() && c.covered == front.points.size();
  return c;
}

}  // namespace mohboa
