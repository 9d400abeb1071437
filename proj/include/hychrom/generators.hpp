#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hychrom/errors.hpp"
#include "hychrom/hypergraph.hpp"

namespace hychrom {

// Visits all t-subsets of {0..n-1} in lexicographic order.
template <typename Fn>
void for_each_combination(int n, int t, Fn&& fn) {
  if (t < 0 || t > n) return;
  std::vector<int> c(t);
  for (int i = 0; i < t; ++i) c[i] = i;
  while (true) {
    fn(const_cast<const std::vector<int>&>(c));
    int i = t - 1;
    while (i >= 0 && c[i] == n - t + i) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < t; ++j) c[j] = c[j - 1] + 1;
  }
}

// Uniform double in [0,1) from the top 53 bits of a 64-bit draw. Used instead
// of std::uniform_real_distribution, whose output is implementation-defined.
inline double next_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline void check_uniform_params(int n, int t) {
  if (t < 2) throw ParseError("edge size t must be at least 2");
  if (n < t) throw ParseError("need n >= t");
}

inline Hypergraph single_edge(int t) {
  if (t < 2) throw ParseError("edge size t must be at least 2");
  std::vector<int> e(t);
  for (int i = 0; i < t; ++i) e[i] = i;
  return Hypergraph(t, {e});
}

inline Hypergraph complete_uniform(int n, int t) {
  check_uniform_params(n, t);
  std::vector<std::vector<int>> edges;
  for_each_combination(n, t, [&](const std::vector<int>& c) { edges.push_back(c); });
  return Hypergraph(n, std::move(edges));
}

// Edges {i, i+1, ..., i+t-1 mod n} for i = 0..n-1. Requires n > t so the n
// windows are distinct as sets.
inline Hypergraph tight_cycle(int n, int t) {
  check_uniform_params(n, t);
  if (n == t) throw ParseError("tight cycle needs n > t");
  std::vector<std::vector<int>> edges;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(t);
    for (int j = 0; j < t; ++j) e[j] = (i + j) % n;
    edges.push_back(std::move(e));
  }
  return Hypergraph(n, std::move(edges));
}

// k edges of size t, consecutive edges sharing exactly one vertex.
inline Hypergraph loose_path(int k, int t) {
  if (t < 2) throw ParseError("edge size t must be at least 2");
  if (k < 1) throw ParseError("loose path needs at least one edge");
  int n = k * (t - 1) + 1;
  std::vector<std::vector<int>> edges;
  for (int i = 0; i < k; ++i) {
    std::vector<int> e(t);
    for (int j = 0; j < t; ++j) e[j] = i * (t - 1) + j;
    edges.push_back(std::move(e));
  }
  return Hypergraph(n, std::move(edges));
}

// Each t-subset of {0..n-1} is included independently with probability p.
// Candidate sets are drawn in lexicographic order, so the result is fully
// determined by (n, t, p, seed).
inline Hypergraph random_uniform(int n, int t, double p, std::uint64_t seed) {
  check_uniform_params(n, t);
  if (p < 0.0 || p > 1.0) throw ParseError("probability p outside [0,1]");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<int>> edges;
  for_each_combination(n, t, [&](const std::vector<int>& c) {
    if (next_unit(rng) < p) edges.push_back(c);
  });
  return Hypergraph(n, std::move(edges));
}

struct FamilyParams {
  int n = 0;
  int t = 0;
  int k = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
};

inline Hypergraph generate(const std::string& family, const FamilyParams& params) {
  if (family == "single_edge") return single_edge(params.t);
  if (family == "complete_uniform") return complete_uniform(params.n, params.t);
  if (family == "tight_cycle") return tight_cycle(params.n, params.t);
  if (family == "loose_path") return loose_path(params.k, params.t);
  if (family == "random_uniform")
    return random_uniform(params.n, params.t, params.p, params.seed);
  throw ParseError("unknown family: " + family);
}

}  // namespace hychrom
