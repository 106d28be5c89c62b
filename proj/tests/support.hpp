#pragma once

// Independent reference implementations used as test oracles. None of these
// touch the indexed evaluator, the delta cache or the subset DP.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "pbland/graph.hpp"
#include "pbland/vcsp.hpp"

namespace testsupport {

using namespace pbland;

inline std::int64_t naive_evaluate(const VcspInstance& inst, const Assignment& x) {
  std::int64_t total = 0;
  for (const auto& c : inst.constraints()) {
    bool all = true;
    for (auto v : c.scope) all = all && x.get(v.index);
    if (all) total += c.weight;
  }
  return total;
}

inline std::int64_t naive_delta(const VcspInstance& inst, const Assignment& x, std::size_t v) {
  return naive_evaluate(inst, x.flipped(VariableId{v})) - naive_evaluate(inst, x);
}

inline Assignment from_mask(std::uint64_t mask, std::size_t d) {
  Assignment x(d);
  for (std::size_t i = 0; i < d; ++i) x.set(i, (mask >> i) & 1u);
  return x;
}

inline Assignment random_assignment(std::mt19937_64& rng, std::size_t d) {
  Assignment x(d);
  for (std::size_t i = 0; i < d; ++i) x.set(i, rng() & 1u);
  return x;
}

/// Random instance, arity 1..3, weights in [-100, 100].
inline VcspInstance random_instance(std::mt19937_64& rng, std::size_t d, std::size_t count) {
  InstanceBuilder b(d);
  std::uniform_int_distribution<int> arity(1, static_cast<int>(std::min<std::size_t>(3, d)));
  std::uniform_int_distribution<std::size_t> var(0, d - 1);
  std::uniform_int_distribution<int> weight(-100, 100);
  for (std::size_t i = 0; i < count; ++i) {
    const int a = arity(rng);
    std::vector<std::size_t> pick;
    while (static_cast<int>(pick.size()) < a) {
      auto v = var(rng);
      if (std::find(pick.begin(), pick.end(), v) == pick.end()) pick.push_back(v);
    }
    std::vector<VariableId> scope;
    for (auto v : pick) scope.push_back(VariableId{v});
    b.add(scope, weight(rng));
  }
  return b.build();
}

inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  Graph g(names);
  std::bernoulli_distribution edge(p);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t w = u + 1; w < n; ++w) {
      if (edge(rng)) g.add_edge(u, w);
    }
  }
  return g;
}

/// Vertex separation number by trying every linear order (n <= 9).
inline int brute_pathwidth(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return 0;
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  int best = static_cast<int>(n);
  do {
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;
    int worst = 0;
    for (std::size_t i = 0; i < n; ++i) {
      int boundary = 0;
      for (std::size_t j = 0; j <= i; ++j) {
        const auto v = order[j];
        bool out = false;
        for (auto w : g.neighbors(v)) out = out || pos[w] > i;
        if (out) ++boundary;
      }
      worst = std::max(worst, boundary);
    }
    best = std::min(best, worst);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

}  // namespace testsupport
