#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "hychrom/caps.hpp"
#include "hychrom/errors.hpp"
#include "hychrom/hypergraph.hpp"
#include "hychrom/numeric.hpp"
#include "hychrom/partition.hpp"
#include "hychrom/polynomial.hpp"
#include "hychrom/union_find.hpp"

namespace hychrom {

// P(x) = sum over edge subsets E' of (-1)^|E'| x^{c(E')}, where c counts
// connected components of (V, E') including isolated vertices.
inline IntPolynomial chromatic_polynomial(const Hypergraph& h,
                                          const Caps& caps = {}) {
  check_edge_subset_cap(h, caps);
  int n = h.num_vertices();
  int m = h.num_edges();
  std::vector<Int> by_components(n + 1, Int(0));
  if (n == 0) return IntPolynomial({Int(1)});
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    int c = component_count(h, mask);
    if (std::popcount(mask) % 2 == 0)
      ++by_components[c];
    else
      --by_components[c];
  }
  return IntPolynomial(std::move(by_components));
}

// Number of vertex partitions into exactly j parts with no edge contained in
// a part, for j = 0..n. These are the coefficients of P in the falling
// factorial basis.
inline std::vector<Int> admissible_partition_counts(const Hypergraph& h,
                                                    const Caps& caps = {}) {
  int n = h.num_vertices();
  check_partition_cap(n, caps);
  std::vector<Int> counts(n + 1, Int(0));
  int m = h.num_edges();
  for_each_set_partition(n, [&](const std::vector<std::uint64_t>& parts) {
    if (crossing_edge_count(h, parts) == m) ++counts[parts.size()];
  });
  return counts;
}

inline IntPolynomial chromatic_polynomial_via_partitions(
    const Hypergraph& h, const Caps& caps = {}) {
  return from_falling_factorial(admissible_partition_counts(h, caps));
}

// Picks whichever enumeration fits the caps; the two routes agree wherever
// both apply.
inline IntPolynomial chromatic_polynomial_auto(const Hypergraph& h,
                                               const Caps& caps = {}) {
  if (h.num_edges() <= caps.subset_edges) return chromatic_polynomial(h, caps);
  return chromatic_polynomial_via_partitions(h, caps);
}

// Direct count of colorings with q colors leaving no edge monochromatic.
inline Int count_proper_colorings(const Hypergraph& h, int q,
                                  const Caps& caps = {}) {
  if (q < 0) throw ParseError("negative color count");
  int n = h.num_vertices();
  if (n == 0) return 1;
  if (q == 0) return 0;
  long long work = 1;
  for (int i = 0; i < n; ++i) {
    work *= q;
    if (work > caps.coloring_work)
      throw CapExceeded("coloring enumeration q^n exceeds work cap");
  }
  std::vector<int> color(n, 0);
  Int proper = 0;
  for (;;) {
    bool ok = true;
    for (const auto& edge : h.edges()) {
      int c0 = color[edge[0]];
      bool mono = true;
      for (std::size_t i = 1; i < edge.size(); ++i)
        if (color[edge[i]] != c0) {
          mono = false;
          break;
        }
      if (mono) {
        ok = false;
        break;
      }
    }
    if (ok) ++proper;
    int v = 0;
    while (v < n && color[v] == q - 1) color[v++] = 0;
    if (v == n) break;
    ++color[v];
  }
  return proper;
}

// Coefficient of x^1: the signed count of edge subsets that leave the whole
// vertex set connected.
inline Int linear_coefficient(const Hypergraph& h, const Caps& caps = {}) {
  check_edge_subset_cap(h, caps);
  int m = h.num_edges();
  Int a1 = 0;
  if (h.num_vertices() == 0) return 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    if (component_count(h, mask) != 1) continue;
    if (std::popcount(mask) % 2 == 0)
      ++a1;
    else
      --a1;
  }
  return a1;
}

// linear coefficient of every induced subhypergraph, indexed by vertex mask.
inline std::vector<Int> linear_coefficient_table(const Hypergraph& h,
                                                 const Caps& caps = {}) {
  check_vertex_subset_cap(h, caps);
  int n = h.num_vertices();
  std::vector<Int> table(std::size_t{1} << n);
  for (std::uint64_t vmask = 0; vmask < (std::uint64_t{1} << n); ++vmask)
    table[vmask] = linear_coefficient(induced(h, vmask).subgraph, caps);
  return table;
}

struct IdentityCheck {
  Int lhs = 0;
  Int rhs = 0;
  bool ok = false;
};

// sum over vertex subsets S of P(H[S], x) * P(H[V\S], y) equals P(H, x+y).
inline IdentityCheck check_binomial_identity(const Hypergraph& h, const Int& x,
                                             const Int& y,
                                             const Caps& caps = {}) {
  check_vertex_subset_cap(h, caps);
  int n = h.num_vertices();
  std::uint64_t full = (n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;

  std::vector<Int> at_x(std::size_t{1} << n), at_y(std::size_t{1} << n);
  for (std::uint64_t s = 0; s <= full; ++s) {
    IntPolynomial p = chromatic_polynomial_auto(induced(h, s).subgraph, caps);
    at_x[s] = p(x);
    at_y[s] = p(y);
    if (s == full) break;
  }

  IdentityCheck result;
  for (std::uint64_t s = 0; s <= full; ++s) {
    result.lhs += at_x[s] * at_y[full & ~s];
    if (s == full) break;
  }
  result.rhs = chromatic_polynomial_auto(h, caps)(Int(x + y));
  result.ok = result.lhs == result.rhs;
  return result;
}

// Rebuilds P from the linear coefficients of induced subhypergraphs:
// the coefficient of x^k is the sum over vertex partitions into k parts of
// the product of per-part linear coefficients.
inline IntPolynomial reconstruct_from_linear_coefficients(
    const Hypergraph& h, const Caps& caps = {}) {
  int n = h.num_vertices();
  check_partition_cap(n, caps);
  auto table = linear_coefficient_table(h, caps);
  if (n == 0) return IntPolynomial({Int(1)});
  std::vector<Int> coeffs(n + 1, Int(0));
  for_each_set_partition(n, [&](const std::vector<std::uint64_t>& parts) {
    Int prod = 1;
    for (std::uint64_t pm : parts) {
      prod *= table[pm];
      if (prod == 0) break;
    }
    coeffs[parts.size()] += prod;
  });
  return IntPolynomial(std::move(coeffs));
}

}  // namespace hychrom
