#pragma once

#include <algorithm>
#include <bit>
#include <climits>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hychrom/caps.hpp"
#include "hychrom/errors.hpp"
#include "hychrom/hypergraph.hpp"
#include "hychrom/numeric.hpp"
#include "hychrom/partition.hpp"

namespace hychrom {

inline std::uint64_t spanned_vertices(const Hypergraph& h,
                                      std::uint64_t edge_mask) {
  std::uint64_t s = 0;
  for (std::uint64_t m = edge_mask; m; m &= m - 1)
    s |= h.edge_mask(std::countr_zero(m));
  return s;
}

// A sub-collection is a hypercircuit when it has exactly as many edges as
// spanned vertices and every proper nonempty vertex subset X of the span
// meets at least |X|+1 of its edges.
inline bool is_hypercircuit(const Hypergraph& h, std::uint64_t edge_mask) {
  int k = std::popcount(edge_mask);
  if (k == 0) return false;
  if (k > 32)
    throw CapExceeded("hypercircuit test over " + std::to_string(k) +
                      " edges");
  std::uint64_t span = spanned_vertices(h, edge_mask);
  if (std::popcount(span) != k) return false;
  std::vector<std::uint64_t> member;
  member.reserve(k);
  for (std::uint64_t m = edge_mask; m; m &= m - 1)
    member.push_back(h.edge_mask(std::countr_zero(m)));
  for (std::uint64_t x = (span - 1) & span; x; x = (x - 1) & span) {
    int meeting = 0;
    for (std::uint64_t em : member)
      if (em & x) ++meeting;
    if (meeting < std::popcount(x) + 1) return false;
  }
  return true;
}

inline std::vector<std::uint64_t> hypercircuit_masks(const Hypergraph& h,
                                                     const Caps& caps = {}) {
  if (h.num_edges() > caps.subset_edges)
    throw CapExceeded("hypercircuit enumeration over " +
                      std::to_string(h.num_edges()) + " edges exceeds cap " +
                      std::to_string(caps.subset_edges));
  std::vector<std::uint64_t> out;
  int m = h.num_edges();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask)
    if (is_hypercircuit(h, mask)) out.push_back(mask);
  return out;
}

// Independent sets of the hypergraphic matroid: every nonempty sub-collection
// spans strictly more vertices than it has edges. Equivalently, no
// sub-collection is a hypercircuit.
inline bool is_hyperforest(const Hypergraph& h, std::uint64_t edge_mask) {
  if (std::popcount(edge_mask) > 32)
    throw CapExceeded("hyperforest test over large edge set");
  for (std::uint64_t x = edge_mask; x; x = (x - 1) & edge_mask) {
    std::uint64_t span = 0;
    for (std::uint64_t m = x; m; m &= m - 1)
      span |= h.edge_mask(std::countr_zero(m));
    if (std::popcount(span) <= std::popcount(x)) return false;
  }
  return true;
}

// Spanned vertex set of every edge subset at once; index is the edge mask.
inline std::vector<std::uint64_t> spanned_vertices_table(const Hypergraph& h,
                                                         const Caps& caps = {}) {
  if (h.num_edges() > caps.subset_edges || h.num_edges() > 24)
    throw CapExceeded("span table over " + std::to_string(h.num_edges()) +
                      " edges");
  int m = h.num_edges();
  std::vector<std::uint64_t> spans(std::size_t{1} << m, 0);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask)
    spans[mask] = spans[mask & (mask - 1)] | h.edge_mask(std::countr_zero(mask));
  return spans;
}

// Hyperforest indicator for every edge subset. A set is a hyperforest iff it
// spans more vertices than edges and stays one after removing any edge.
inline std::vector<char> hyperforest_table(const Hypergraph& h,
                                           const Caps& caps = {}) {
  auto spans = spanned_vertices_table(h, caps);
  int m = h.num_edges();
  std::vector<char> forest(std::size_t{1} << m, 0);
  forest[0] = 1;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    if (std::popcount(spans[mask]) <= std::popcount(mask)) continue;
    bool ok = true;
    for (std::uint64_t rest = mask; rest; rest &= rest - 1) {
      std::uint64_t low = rest & (0 - rest);
      if (!forest[mask ^ low]) {
        ok = false;
        break;
      }
    }
    forest[mask] = ok;
  }
  return forest;
}

// ---------------------------------------------------------------------------
// Rank of the hypergraphic matroid: r(Z) = min over vertex partitions P of
// n - |P| + (number of edges of Z meeting two or more parts).

struct RankQuery {
  int value = 0;
  std::vector<std::uint64_t> witness_partition;  // attains the minimum
};

inline RankQuery rank(const Hypergraph& h, std::uint64_t edge_subset,
                      const Caps& caps = {}) {
  int n = h.num_vertices();
  check_partition_cap(n, caps);
  RankQuery best;
  best.value = INT_MAX;
  for_each_set_partition(n, [&](const std::vector<std::uint64_t>& parts) {
    int crossing =
        std::popcount(crossing_edge_mask(h, parts) & edge_subset);
    int value = n - static_cast<int>(parts.size()) + crossing;
    if (value < best.value) {
      best.value = value;
      best.witness_partition = parts;
    }
  });
  if (best.value == INT_MAX) best.value = 0;  // n = 0
  return best;
}

// Rank of every edge subset at once; index is the edge mask.
inline std::vector<int> rank_table(const Hypergraph& h, const Caps& caps = {}) {
  check_edge_subset_cap(h, caps);
  check_partition_cap(h.num_vertices(), caps);
  int n = h.num_vertices();
  int m = h.num_edges();
  std::vector<int> table(std::size_t{1} << m, INT_MAX);
  for_each_set_partition(n, [&](const std::vector<std::uint64_t>& parts) {
    std::uint64_t crossing = crossing_edge_mask(h, parts);
    int base = n - static_cast<int>(parts.size());
    for (std::uint64_t z = 0; z < (std::uint64_t{1} << m); ++z) {
      int value = base + std::popcount(crossing & z);
      if (value < table[z]) table[z] = value;
    }
  });
  return table;
}

inline int dual_rank(const Hypergraph& h, std::uint64_t subset,
                     const Caps& caps = {}) {
  std::uint64_t full = full_edge_mask(h);
  return std::popcount(subset) + rank(h, full & ~subset, caps).value -
         rank(h, full, caps).value;
}

// Same rank by its other characterization: the largest hyperforest inside.
inline int rank_via_independence(const Hypergraph& h, std::uint64_t edge_subset,
                                 const Caps& caps = {}) {
  if (std::popcount(edge_subset) > caps.subset_edges)
    throw CapExceeded("independence scan exceeds edge-subset cap");
  int best = 0;
  for (std::uint64_t x = edge_subset;; x = (x - 1) & edge_subset) {
    int k = std::popcount(x);
    if (k > best && is_hyperforest(h, x)) best = k;
    if (x == 0) break;
  }
  return best;
}

// ---------------------------------------------------------------------------
// Partition connectivity. A partition is good when at least |P|-1 edges
// cross it; H is partition-connected when every partition is good.

inline bool is_partition_connected(const Hypergraph& h, const Caps& caps = {}) {
  check_partition_cap(h.num_vertices(), caps);
  bool ok = true;
  for_each_set_partition(
      h.num_vertices(), [&](const std::vector<std::uint64_t>& parts) -> bool {
        if (parts.size() >= 2 &&
            crossing_edge_count(h, parts) <
                static_cast<int>(parts.size()) - 1) {
          ok = false;
          return false;
        }
        return true;
      });
  return ok;
}

// Among bad partitions, the unique one maximizing
// |P|*(n-1)/n - crossing_count. Empty when H is partition-connected.
inline std::optional<PartitionRecord> maximal_bad_partition(
    const Hypergraph& h, const Caps& caps = {}) {
  check_partition_cap(h.num_vertices(), caps);
  std::optional<PartitionRecord> best;
  bool tie = false;
  for_each_set_partition(h.num_vertices(),
                         [&](const std::vector<std::uint64_t>& parts) {
                           PartitionRecord rec = make_partition_record(h, parts);
                           if (!rec.is_bad) return;
                           if (!best || rec.score > best->score) {
                             best = std::move(rec);
                             tie = false;
                           } else if (rec.score == best->score) {
                             tie = true;
                           }
                         });
  if (tie) throw TheoremViolation("maximal bad partition is not unique");
  return best;
}

// Vertex sets of the maximal partition-connected induced subhypergraphs.
// Starts from singletons and keeps merging the first (smallest, then
// lexicographically first) group of parts whose union induces a
// partition-connected subhypergraph.
inline std::vector<std::uint64_t> partition_connected_decomposition(
    const Hypergraph& h, const Caps& caps = {}) {
  int n = h.num_vertices();
  check_partition_cap(n, caps);
  std::vector<std::uint64_t> parts = singleton_partition(n);
  for (;;) {
    int p = static_cast<int>(parts.size());
    if (p < 2) break;
    std::vector<std::uint32_t> groups;
    for (std::uint32_t g = 3; g < (std::uint32_t{1} << p); ++g)
      if (std::popcount(g) >= 2) groups.push_back(g);
    std::sort(groups.begin(), groups.end(),
              [](std::uint32_t a, std::uint32_t b) {
                int pa = std::popcount(a), pb = std::popcount(b);
                return pa != pb ? pa < pb : a < b;
              });
    std::uint32_t merged = 0;
    for (std::uint32_t g : groups) {
      std::uint64_t u = 0;
      for (std::uint32_t m = g; m; m &= m - 1)
        u |= parts[std::countr_zero(m)];
      if (is_partition_connected(induced(h, u).subgraph, caps)) {
        merged = g;
        break;
      }
    }
    if (!merged) break;
    std::vector<std::uint64_t> next;
    std::uint64_t u = 0;
    for (int i = 0; i < p; ++i) {
      if (merged >> i & 1)
        u |= parts[i];
      else
        next.push_back(parts[i]);
    }
    next.push_back(u);
    std::sort(next.begin(), next.end(),
              [](std::uint64_t a, std::uint64_t b) {
                return std::countr_zero(a) < std::countr_zero(b);
              });
    parts = std::move(next);
  }
  return parts;
}

// ---------------------------------------------------------------------------
// For any matroid given by a rank oracle over masks: the alternating sum
// over independent sets is bounded by the number of bases.

struct EulerCheck {
  Int signed_sum = 0;
  Int base_count = 0;
  bool ok = false;
};

template <typename RankFn>
EulerCheck euler_inequality_check(int ground_size, RankFn&& rank_of) {
  if (ground_size > 24)
    throw CapExceeded("independent-set enumeration over " +
                      std::to_string(ground_size) + " elements");
  std::uint64_t full =
      ground_size == 0 ? 0 : (std::uint64_t{1} << ground_size) - 1;
  int full_rank = rank_of(full);
  EulerCheck result;
  for (std::uint64_t mask = 0;; ++mask) {
    int k = std::popcount(mask);
    if (rank_of(mask) == k) {
      result.signed_sum += (k % 2 == 0) ? 1 : -1;
      if (k == full_rank) ++result.base_count;
    }
    if (mask == full) break;
  }
  Int mag = result.signed_sum < 0 ? -result.signed_sum : result.signed_sum;
  result.ok = mag <= result.base_count;
  return result;
}

}  // namespace hychrom
