#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "hychrom/caps.hpp"
#include "hychrom/chromatic.hpp"
#include "hychrom/errors.hpp"
#include "hychrom/hypergraph.hpp"
#include "hychrom/matroid.hpp"
#include "hychrom/numeric.hpp"
#include "hychrom/partition.hpp"

namespace hychrom {

inline std::vector<std::uint64_t> submasks_ascending(std::uint64_t set) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = set;; s = (s - 1) & set) {
    out.push_back(s);
    if (s == 0) break;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

inline Int count_connected_spanning_hyperforests(const Hypergraph& h,
                                                 const Caps& caps = {}) {
  auto forest = hyperforest_table(h, caps);
  Int count = 0;
  for (std::uint64_t mask = 0; mask < forest.size(); ++mask)
    if (forest[mask] && is_connected_spanning(h, mask)) ++count;
  return count;
}

// |a_1(H)| is at most the number of connected spanning hyperforests.
struct SignedForestCheck {
  Int linear = 0;
  Int forest_count = 0;
  bool ok = false;
};

inline SignedForestCheck penrose_check(const Hypergraph& h,
                                       const Caps& caps = {}) {
  SignedForestCheck r;
  r.linear = linear_coefficient(h, caps);
  r.forest_count = count_connected_spanning_hyperforests(h, caps);
  Int mag = r.linear < 0 ? -r.linear : r.linear;
  r.ok = mag <= r.forest_count;
  return r;
}

// ---------------------------------------------------------------------------
// Spanning trees of simple graphs, for the tree-sum bound.

// Fraction-free Gaussian elimination; divisions are exact.
inline Int bareiss_determinant(std::vector<std::vector<Int>> a) {
  int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int pivot = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) {
          pivot = i;
          break;
        }
      if (pivot < 0) return 0;
      std::swap(a[k], a[pivot]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

// Matrix-tree count for a 2-uniform hypergraph (determinant of a Laplacian
// minor). Zero when the graph is disconnected.
inline Int spanning_tree_count(const Hypergraph& g) {
  if (g.num_edges() > 0 && (!g.uniformity() || *g.uniformity() != 2))
    throw ParseError("spanning tree count needs a 2-uniform hypergraph");
  int n = g.num_vertices();
  if (n <= 1) return 1;
  std::vector<std::vector<Int>> lap(n - 1, std::vector<Int>(n - 1, Int(0)));
  for (const auto& e : g.edges()) {
    int u = e[0], v = e[1];
    if (u > 0) lap[u - 1][u - 1] += 1;
    if (v > 0) lap[v - 1][v - 1] += 1;
    if (u > 0 && v > 0) {
      lap[u - 1][v - 1] -= 1;
      lap[v - 1][u - 1] -= 1;
    }
  }
  return bareiss_determinant(std::move(lap));
}

// Tree sum anchored at a vertex: sum of spanning-tree counts over all induced
// subgraphs containing v, bounded by (eD)^(n-1). The bound has no content
// when the graph has n >= 2 vertices but no edges, hence the flag.
struct TreeSumCheck {
  Int tree_sum = 0;
  Real rhs;
  bool applicable = true;
  bool ok = true;
};

inline TreeSumCheck sokal_tree_sum_check(const Hypergraph& g, int v,
                                         const Caps& caps = {}) {
  if (g.num_edges() > 0 && (!g.uniformity() || *g.uniformity() != 2))
    throw ParseError("tree-sum check needs a 2-uniform hypergraph");
  check_vertex_subset_cap(g, caps);
  int n = g.num_vertices();
  if (v < 0 || v >= n) throw ParseError("vertex index out of range");
  TreeSumCheck r;
  std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t s = 0;; ++s) {
    if (s >> v & 1) r.tree_sum += spanning_tree_count(induced(g, s).subgraph);
    if (s == full) break;
  }
  int degree = g.max_degree();
  r.rhs = real_power(euler_number() * degree, n - 1);
  r.applicable = (n == 1 || degree >= 1);
  r.ok = !r.applicable || leq_with_slack(Real(r.tree_sum), r.rhs);
  return r;
}

// Sum of |a_1| over size-s induced subhypergraphs containing v, bounded by
// (etD)^(s-1) with t the edge size and D the maximum degree.
struct BoundedSumCheck {
  Int lhs = 0;
  Real rhs;
  int edge_size = 0;
  bool ok = true;
};

inline BoundedSumCheck bounded_linear_sum_check(const Hypergraph& h, int v,
                                                int s, const Caps& caps = {}) {
  check_vertex_subset_cap(h, caps);
  int n = h.num_vertices();
  if (v < 0 || v >= n) throw ParseError("vertex index out of range");
  if (s < 1) throw ParseError("subset size must be positive");
  BoundedSumCheck r;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (!(mask >> v & 1) || std::popcount(mask) != s) continue;
    Int a1 = linear_coefficient(induced(h, mask).subgraph, caps);
    r.lhs += a1 < 0 ? -a1 : a1;
  }
  r.edge_size = h.uniformity() ? *h.uniformity() : max_edge_size(h);
  r.rhs = real_power(euler_number() * r.edge_size * h.max_degree(), s - 1);
  r.ok = leq_with_slack(Real(r.lhs), r.rhs);
  return r;
}

// ---------------------------------------------------------------------------
// Equivalence classes of spanning edge subsets (every subset of E on the
// full vertex set). Two subsets are equivalent when they share the maximal
// bad partition of their subhypergraph and the set of their edges crossing
// it. Partition-connected subsets share the trivial one-part partition.
// Connectivity of (V, member) is constant within a class: the parts are
// internally connected, so connectivity is decided by the shared crossing
// edges alone.

struct EquivalenceClass {
  std::vector<std::uint64_t> partition;  // vertex masks by smallest element
  std::uint64_t bad_edge_mask = 0;       // edges of members crossing it
  std::vector<std::uint64_t> members;    // ascending edge masks
  std::vector<std::uint64_t> basis_members;  // maximal hyperforests of the union
  std::uint64_t union_mask = 0;
  Int signed_sum = 0;                    // sum of (-1)^|member|
  bool members_connected = false;        // c(V, member) == 1, shared
};

inline std::vector<EquivalenceClass> equivalence_classes(const Hypergraph& h,
                                                         const Caps& caps = {}) {
  check_edge_subset_cap(h, caps);
  check_partition_cap(h.num_vertices(), caps);
  int n = h.num_vertices();
  int m = h.num_edges();
  std::uint64_t fullv = n == 0 ? 0 : (std::uint64_t{1} << n) - 1;
  std::map<std::pair<std::vector<std::uint64_t>, std::uint64_t>,
           EquivalenceClass>
      by_key;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    auto bad = maximal_bad_partition(edge_subset_hypergraph(h, mask), caps);
    std::vector<std::uint64_t> parts;
    if (bad)
      parts = bad->part_masks;
    else if (n > 0)
      parts = {fullv};
    std::uint64_t bad_edges = crossing_edge_mask(h, parts) & mask;
    bool connected = is_connected_spanning(h, mask);
    auto& cls = by_key[{parts, bad_edges}];
    if (cls.members.empty()) {
      cls.partition = parts;
      cls.bad_edge_mask = bad_edges;
      cls.members_connected = connected;
    } else if (cls.members_connected != connected) {
      throw TheoremViolation("class mixes connected and disconnected members");
    }
    cls.members.push_back(mask);
    cls.union_mask |= mask;
    cls.signed_sum += (std::popcount(mask) % 2 == 0) ? 1 : -1;
  }
  auto forest = hyperforest_table(h, caps);
  std::vector<EquivalenceClass> out;
  out.reserve(by_key.size());
  for (auto& [key, cls] : by_key) {
    int rank_u = 0;
    for (std::uint64_t s : submasks_ascending(cls.union_mask))
      if (forest[s]) rank_u = std::max(rank_u, std::popcount(s));
    for (std::uint64_t member : cls.members)
      if (forest[member] && std::popcount(member) == rank_u)
        cls.basis_members.push_back(member);
    out.push_back(std::move(cls));
  }
  return out;
}

// Per-class verification: the union's maximal hyperforests decompose into
// the shared crossing edges plus one maximal hyperforest per
// partition-connected piece, the class is the up-closure of those maximal
// hyperforests within the union, and the alternating member sum is bounded
// by their number.
struct ClassCheck {
  EquivalenceClass cls;
  std::vector<std::uint64_t> pieces;    // decomposition of the union
  Int max_forest_count = 0;             // maximal hyperforests of the union
  Int max_forest_count_in_class = 0;
  Int global_base_count_in_class = 0;   // maximal hyperforests of H here
  bool variants_agree = true;
  bool structure_ok = false;
  bool closure_matches = false;
  bool per_class_ok = false;
};

struct StructureReport {
  std::vector<ClassCheck> classes;
  Int a1 = 0;            // sum over classes of connected subsets
  Int forest_total = 0;  // their maximal-hyperforest counts summed
  Int n_forests = 0;     // connected spanning hyperforests of H
  bool all_ok = false;
};

inline StructureReport verify_structure_theorem(const Hypergraph& h,
                                                const Caps& caps = {}) {
  StructureReport report;
  auto classes = equivalence_classes(h, caps);
  auto forest = hyperforest_table(h, caps);

  int global_rank = 0;
  for (std::uint64_t mask = 0; mask < forest.size(); ++mask)
    if (forest[mask])
      global_rank = std::max(global_rank, std::popcount(mask));
  std::vector<std::uint64_t> global_bases;
  for (std::uint64_t mask = 0; mask < forest.size(); ++mask) {
    if (forest[mask] && std::popcount(mask) == global_rank)
      global_bases.push_back(mask);
    if (forest[mask] && is_connected_spanning(h, mask)) ++report.n_forests;
  }

  bool per_class_all = true;
  for (auto& cls : classes) {
    ClassCheck cc;
    std::uint64_t u = cls.union_mask;
    auto subs = submasks_ascending(u);

    int rank_u = 0;
    for (std::uint64_t s : subs)
      if (forest[s]) rank_u = std::max(rank_u, std::popcount(s));
    std::vector<std::uint64_t> max_forests;
    for (std::uint64_t s : subs)
      if (forest[s] && std::popcount(s) == rank_u) max_forests.push_back(s);
    cc.max_forest_count = Int(max_forests.size());

    cc.pieces =
        partition_connected_decomposition(edge_subset_hypergraph(h, u), caps);
    bool structure = cc.pieces == cls.partition;
    std::uint64_t bad = crossing_edge_mask(h, cls.partition) & u;
    structure = structure && bad == cls.bad_edge_mask;

    std::vector<std::uint64_t> inside(cc.pieces.size(), 0);
    for (std::uint64_t rest = u & ~bad; rest; rest &= rest - 1) {
      int i = std::countr_zero(rest);
      bool placed = false;
      for (std::size_t p = 0; p < cc.pieces.size(); ++p) {
        if ((h.edge_mask(i) & ~cc.pieces[p]) == 0) {
          inside[p] |= std::uint64_t{1} << i;
          placed = true;
          break;
        }
      }
      structure = structure && placed;
    }

    Int combination_count = 1;
    std::vector<int> piece_rank(cc.pieces.size(), 0);
    for (std::size_t p = 0; p < cc.pieces.size(); ++p) {
      int r = 0;
      Int count = 0;
      for (std::uint64_t s : submasks_ascending(inside[p])) {
        if (!forest[s]) continue;
        int k = std::popcount(s);
        if (k > r) {
          r = k;
          count = 0;
        }
        if (k == r) ++count;
      }
      piece_rank[p] = r;
      combination_count *= count;
    }
    for (std::uint64_t t : max_forests) {
      structure = structure && (bad & ~t) == 0;
      for (std::size_t p = 0; p < cc.pieces.size(); ++p)
        structure =
            structure && std::popcount(t & inside[p]) == piece_rank[p];
    }
    structure = structure && cc.max_forest_count == combination_count;
    cc.structure_ok = structure;

    std::vector<std::uint64_t> closure;
    for (std::uint64_t s : subs) {
      for (std::uint64_t t : max_forests) {
        if ((t & ~s) == 0) {
          closure.push_back(s);
          break;
        }
      }
    }
    cc.closure_matches = closure == cls.members;

    cc.max_forest_count_in_class = Int(cls.basis_members.size());
    for (std::uint64_t b : global_bases)
      if (std::binary_search(cls.members.begin(), cls.members.end(), b))
        ++cc.global_base_count_in_class;
    cc.variants_agree =
        cc.max_forest_count_in_class == cc.global_base_count_in_class;

    Int mag = cls.signed_sum < 0 ? -cls.signed_sum : cls.signed_sum;
    cc.per_class_ok = mag <= cc.max_forest_count_in_class;

    per_class_all = per_class_all && cc.structure_ok && cc.closure_matches &&
                    cc.per_class_ok;
    if (cls.members_connected) {
      report.a1 += cls.signed_sum;
      report.forest_total += cc.max_forest_count_in_class;
    }
    cc.cls = std::move(cls);
    report.classes.push_back(std::move(cc));
  }

  Int direct = linear_coefficient(h, caps);
  Int mag_a1 = report.a1 < 0 ? -report.a1 : report.a1;
  report.all_ok = per_class_all && report.a1 == direct &&
                  mag_a1 <= report.forest_total &&
                  report.forest_total <= report.n_forests;
  return report;
}

}  // namespace hychrom
