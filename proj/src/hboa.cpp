#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>

#include "mohboa/errors.hpp"
#include "mohboa/variation.hpp"

namespace mohboa {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// log2 of the BDe marginal likelihood of one leaf with a unit Dirichlet
// prior on both outcomes: n0! n1! / (n0 + n1 + 1)!.
double leaf_term(double n0, double n1) {
  return (std::lgamma(n0 + 1) + std::lgamma(n1 + 1) - std::lgamma(n0 + n1 + 2)) /
         std::numbers::ln2;
}

double split_penalty(std::size_t cluster_size) {
  return 0.5 * std::log2(static_cast<double>(cluster_size));
}

struct OpenLeaf {
  std::size_t var;
  int node;
  std::vector<std::uint32_t> records;
  std::vector<bool> on_path;   // variables already tested above this leaf
  double ones = 0;
  double term = 0;
  std::vector<double> gain;    // per candidate split variable
};

class NetworkBuilder {
 public:
  explicit NetworkBuilder(std::span<const Genotype> cluster)
      : cluster_(cluster),
        n_(cluster.front().size()),
        penalty_(split_penalty(cluster.size())),
        trees_(n_),
        edge_(n_ * n_, false),
        reach_(n_ * n_, false) {}

  BayesNetLocal build(HboaBuildTrace* trace) {
    std::vector<std::uint32_t> all(cluster_.size());
    for (std::uint32_t r = 0; r < all.size(); ++r) all[r] = r;
    double score = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      leaves_.push_back(make_leaf(i, 0, all, std::vector<bool>(n_, false)));
      score += leaves_.back().term;
    }
    if (trace) trace->scores.push_back(score);

    for (;;) {
      std::size_t best_leaf = 0;
      std::size_t best_var = 0;
      double best_gain = 0;
      bool found = false;
      for (std::size_t l = 0; l < leaves_.size(); ++l) {
        const OpenLeaf& leaf = leaves_[l];
        for (std::size_t j = 0; j < n_; ++j) {
          if (leaf.gain[j] > best_gain && edge_allowed(j, leaf.var)) {
            best_gain = leaf.gain[j];
            best_leaf = l;
            best_var = j;
            found = true;
          }
        }
      }
      if (!found) break;
      apply_split(best_leaf, best_var);
      score += best_gain;
      if (trace) trace->scores.push_back(score);
    }

    const double lo = probability_floor(cluster_.size());
    for (const OpenLeaf& leaf : leaves_) {
      const double size = static_cast<double>(leaf.records.size());
      const double p = size > 0 ? leaf.ones / size : 0.5;
      trees_[leaf.var].nodes[leaf.node].p_one = std::clamp(p, lo, 1.0 - lo);
    }
    return BayesNetLocal(std::move(trees_));
  }

 private:
  OpenLeaf make_leaf(std::size_t var, int node, std::vector<std::uint32_t> records,
                     std::vector<bool> on_path) const {
    OpenLeaf leaf{var, node, std::move(records), std::move(on_path), 0, 0, {}};
    // counts[j][xj][xi]
    std::vector<std::array<std::array<double, 2>, 2>> counts(n_, {{{0, 0}, {0, 0}}});
    for (std::uint32_t r : leaf.records) {
      const Genotype& g = cluster_[r];
      const int xi = g[var] ? 1 : 0;
      leaf.ones += xi;
      for (std::size_t j = 0; j < n_; ++j) counts[j][g[j] ? 1 : 0][xi] += 1;
    }
    const double size = static_cast<double>(leaf.records.size());
    leaf.term = leaf_term(size - leaf.ones, leaf.ones);
    leaf.gain.assign(n_, kNegInf);
    for (std::size_t j = 0; j < n_; ++j) {
      if (j == var || leaf.on_path[j]) continue;
      leaf.gain[j] = leaf_term(counts[j][0][0], counts[j][0][1]) +
                     leaf_term(counts[j][1][0], counts[j][1][1]) - leaf.term - penalty_;
    }
    return leaf;
  }

  // Adding parent -> child keeps the graph acyclic unless child already
  // reaches parent.
  bool edge_allowed(std::size_t parent, std::size_t child) const {
    return edge_[parent * n_ + child] || !reach_[child * n_ + parent];
  }

  void add_edge(std::size_t parent, std::size_t child) {
    if (edge_[parent * n_ + child]) return;
    edge_[parent * n_ + child] = true;
    for (std::size_t x = 0; x < n_; ++x) {
      if (x != parent && !reach_[x * n_ + parent]) continue;
      for (std::size_t y = 0; y < n_; ++y)
        if (y == child || reach_[child * n_ + y]) reach_[x * n_ + y] = true;
    }
  }

  void apply_split(std::size_t leaf_index, std::size_t split_var) {
    OpenLeaf leaf = std::move(leaves_[leaf_index]);
    leaves_.erase(leaves_.begin() + static_cast<std::ptrdiff_t>(leaf_index));

    auto& nodes = trees_[leaf.var].nodes;
    const int zero = static_cast<int>(nodes.size());
    const int one = zero + 1;
    nodes.push_back(DecisionNode{});
    nodes.push_back(DecisionNode{});
    nodes[leaf.node].split = static_cast<int>(split_var);
    nodes[leaf.node].if_zero = zero;
    nodes[leaf.node].if_one = one;

    std::vector<std::uint32_t> rec0;
    std::vector<std::uint32_t> rec1;
    for (std::uint32_t r : leaf.records) (cluster_[r][split_var] ? rec1 : rec0).push_back(r);
    std::vector<bool> path = leaf.on_path;
    path[split_var] = true;
    leaves_.push_back(make_leaf(leaf.var, zero, std::move(rec0), path));
    leaves_.push_back(make_leaf(leaf.var, one, std::move(rec1), std::move(path)));
    add_edge(split_var, leaf.var);
  }

  std::span<const Genotype> cluster_;
  std::size_t n_;
  double penalty_;
  std::vector<DecisionTree> trees_;
  std::vector<OpenLeaf> leaves_;
  std::vector<bool> edge_;
  std::vector<bool> reach_;
};

void check_cluster(std::span<const Genotype> cluster) {
  const std::size_t n = cluster.front().size();
  if (n == 0) throw InvalidArgument("hboa: empty genotypes");
  for (const auto& g : cluster)
    if (g.size() != n) throw InvalidArgument("hboa: genotype lengths differ");
}

}  // namespace

std::vector<std::size_t> DecisionTree::tested_variables() const {
  std::vector<std::size_t> vars;
  for (const auto& node : nodes)
    if (!node.leaf()) vars.push_back(static_cast<std::size_t>(node.split));
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

std::size_t DecisionTree::leaf_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(nodes.begin(), nodes.end(), [](const DecisionNode& d) { return d.leaf(); }));
}

double DecisionTree::probability(const Genotype& x) const noexcept {
  int at = 0;
  while (!nodes[at].leaf()) at = x[static_cast<std::size_t>(nodes[at].split)] ? nodes[at].if_one : nodes[at].if_zero;
  return nodes[at].p_one;
}

std::size_t BayesNetLocal::edge_count() const {
  std::size_t edges = 0;
  for (const auto& t : trees_) edges += t.tested_variables().size();
  return edges;
}

std::optional<std::vector<std::size_t>> BayesNetLocal::topological_order() const {
  const std::size_t n = trees_.size();
  std::vector<std::vector<std::size_t>> parents(n);
  std::vector<std::size_t> missing(n);
  for (std::size_t i = 0; i < n; ++i) {
    parents[i] = trees_[i].tested_variables();
    for (std::size_t p : parents[i])
      if (p >= n) return std::nullopt;
    missing[i] = parents[i].size();
  }
  std::vector<std::vector<std::size_t>> children(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t p : parents[i]) children[p].push_back(i);

  std::vector<std::size_t> order;
  order.reserve(n);
  std::vector<bool> done(n, false);
  // Repeatedly emit the lowest-indexed ready variable.
  for (std::size_t emitted = 0; emitted < n; ++emitted) {
    std::size_t pick = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!done[i] && missing[i] == 0) {
        pick = i;
        break;
      }
    if (pick == n) return std::nullopt;
    done[pick] = true;
    order.push_back(pick);
    for (std::size_t c : children[pick]) --missing[c];
  }
  return order;
}

BayesNetLocal independent_network(std::span<const Genotype> cluster) {
  if (cluster.empty()) throw InvalidArgument("independent_network: empty cluster");
  const auto model = umda_build(cluster);
  std::vector<DecisionTree> trees(model.p.size());
  for (std::size_t i = 0; i < trees.size(); ++i) trees[i].nodes[0].p_one = model.p[i];
  return BayesNetLocal(std::move(trees));
}

BayesNetLocal hboa_build(std::span<const Genotype> cluster, HboaBuildTrace* trace) {
  if (cluster.size() < 2)
    throw InvalidArgument("hboa_build: cluster needs at least 2 members");
  check_cluster(cluster);
  return NetworkBuilder(cluster).build(trace);
}

double hboa_score(const BayesNetLocal& model, std::span<const Genotype> cluster) {
  if (cluster.empty()) throw InvalidArgument("hboa_score: empty cluster");
  check_cluster(cluster);
  double score = 0;
  std::size_t extra_leaves = 0;
  for (std::size_t var = 0; var < model.size(); ++var) {
    const auto& tree = model.tree(var);
    std::vector<std::array<double, 2>> counts(tree.nodes.size(), {0, 0});
    for (const auto& g : cluster) {
      int at = 0;
      while (!tree.nodes[at].leaf())
        at = g[static_cast<std::size_t>(tree.nodes[at].split)] ? tree.nodes[at].if_one
                                                               : tree.nodes[at].if_zero;
      counts[at][g[var] ? 1 : 0] += 1;
    }
    for (std::size_t node = 0; node < tree.nodes.size(); ++node)
      if (tree.nodes[node].leaf()) score += leaf_term(counts[node][0], counts[node][1]);
    extra_leaves += tree.leaf_count() - 1;
  }
  return score - split_penalty(cluster.size()) * static_cast<double>(extra_leaves);
}

std::vector<Genotype> hboa_sample(const BayesNetLocal& model, std::size_t count,
                                  RandomSource& rng) {
  const auto order = model.topological_order();
  if (!order) throw InvalidState("hboa_sample: parent graph is cyclic");
  std::vector<Genotype> out;
  out.reserve(count);
  for (std::size_t c = 0; c < count; ++c) {
    Genotype g(model.size());
    for (std::size_t var : *order)
      if (rng.bernoulli(model.tree(var).probability(g))) g.set(var, true);
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace mohboa
