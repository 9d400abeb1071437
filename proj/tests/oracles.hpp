#pragma once

// Reference implementations used only by the tests. Each one recomputes a
// quantity along a route the library does not use, so agreement is evidence
// rather than tautology.

#include <bit>
#include <climits>
#include <cstdint>
#include <vector>

#include "hychrom/hypergraph.hpp"
#include "hychrom/numeric.hpp"
#include "hychrom/polynomial.hpp"

namespace oracle {

using hychrom::Hypergraph;
using hychrom::Int;
using hychrom::IntPolynomial;

// Proper colorings by recursive assignment. An edge is tested once all its
// vertices are colored, i.e. at its largest vertex.
inline void color_rec(const Hypergraph& h, std::vector<int>& color, int v,
                      int q, Int& acc) {
  if (v == h.num_vertices()) {
    ++acc;
    return;
  }
  for (int c = 0; c < q; ++c) {
    color[v] = c;
    bool ok = true;
    for (int i = 0; i < h.num_edges() && ok; ++i) {
      const auto& e = h.edge(i);
      if (e.back() != v) continue;
      bool mono = true;
      for (std::size_t j = 0; j + 1 < e.size(); ++j)
        if (color[e[j]] != color[e[j + 1]]) {
          mono = false;
          break;
        }
      if (mono) ok = false;
    }
    if (ok) color_rec(h, color, v + 1, q, acc);
  }
}

inline Int proper_colorings(const Hypergraph& h, int q) {
  if (h.num_vertices() == 0) return 1;
  std::vector<int> color(h.num_vertices(), -1);
  Int acc = 0;
  color_rec(h, color, 0, q, acc);
  return acc;
}

// Spanning trees of a simple graph by enumerating (n-1)-edge subsets;
// connected on n-1 edges implies acyclic.
inline Int spanning_trees(const Hypergraph& g) {
  int n = g.num_vertices();
  if (n <= 1) return 1;
  int m = g.num_edges();
  Int count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    if (std::popcount(mask) != n - 1) continue;
    if (hychrom::component_count(g, mask) == 1) ++count;
  }
  return count;
}

// Rank by minimizing n - |P| + e_Z(P) over all vertex labelings; a labeling
// with k distinct values stands in for a k-part partition.
inline int rank_by_labels(const Hypergraph& h, std::uint64_t edge_subset) {
  int n = h.num_vertices();
  if (n == 0) return 0;
  std::vector<int> label(n, 0);
  int best = INT_MAX;
  for (;;) {
    int used = 0;
    for (int v = 0; v < n; ++v) {
      bool fresh = true;
      for (int u = 0; u < v; ++u)
        if (label[u] == label[v]) fresh = false;
      if (fresh) ++used;
    }
    int crossing = 0;
    for (std::uint64_t rest = edge_subset; rest; rest &= rest - 1) {
      const auto& e = h.edge(std::countr_zero(rest));
      for (std::size_t j = 0; j + 1 < e.size(); ++j)
        if (label[e[j]] != label[e[j + 1]]) {
          ++crossing;
          break;
        }
    }
    best = std::min(best, n - used + crossing);
    int v = n - 1;
    while (v >= 0 && label[v] == n - 1) label[v--] = 0;
    if (v < 0) return best;
    ++label[v];
  }
}

// A 2-uniform edge subset is independent exactly when it is an ordinary
// forest: |F| = n - c(F).
inline bool graph_forest(const Hypergraph& g, std::uint64_t mask) {
  return std::popcount(mask) ==
         g.num_vertices() - hychrom::component_count(g, mask);
}

// Closed forms for standard families.
inline IntPolynomial tree_polynomial(int n) {
  auto p = IntPolynomial::monomial(1);
  auto qm1 = IntPolynomial(std::vector<Int>{-1, 1});
  for (int i = 1; i < n; ++i) p = p * qm1;
  return p;
}

inline IntPolynomial cycle_polynomial(int n) {
  auto qm1 = IntPolynomial(std::vector<Int>{-1, 1});
  auto p = IntPolynomial::monomial(0);
  for (int i = 0; i < n; ++i) p = p * qm1;
  return n % 2 == 0 ? p + qm1 : p - qm1;
}

inline IntPolynomial complete_polynomial(int n) {
  auto p = IntPolynomial::monomial(0);
  for (int i = 0; i < n; ++i)
    p = p * IntPolynomial(std::vector<Int>{-i, 1});
  return p;
}

// Loose path with k edges of size t: every edge subset is a forest whose
// component count drops by t-1 per edge.
inline IntPolynomial loose_path_polynomial(int k, int t) {
  int n = k * (t - 1) + 1;
  IntPolynomial p;
  Int binom = 1;
  for (int j = 0; j <= k; ++j) {
    Int coeff = (j % 2 == 0) ? binom : -binom;
    p.add_term(n - j * (t - 1), coeff);
    binom = binom * (k - j) / (j + 1);
  }
  return p;
}

}  // namespace oracle
