#pragma once

#include <algorithm>
#include <cstdint>
#include <type_traits>
#include <vector>

#include <json.hpp>

#include "hychrom/caps.hpp"
#include "hychrom/errors.hpp"
#include "hychrom/hypergraph.hpp"
#include "hychrom/numeric.hpp"

namespace hychrom {

// Enumerates all set partitions of {0..n-1} via restricted growth strings in
// lexicographic order. fn receives the partition as vertex bitmasks, one per
// part, ordered by smallest element. A bool-returning fn stops the
// enumeration by returning false. n = 0 yields the single empty partition.
template <typename Fn>
void for_each_set_partition(int n, Fn&& fn) {
  if (n > 64) throw CapExceeded("partition enumeration needs n <= 64");
  auto visit = [&fn](const std::vector<std::uint64_t>& parts) -> bool {
    if constexpr (std::is_same_v<decltype(fn(parts)), bool>) {
      return fn(parts);
    } else {
      fn(parts);
      return true;
    }
  };
  if (n == 0) {
    std::vector<std::uint64_t> empty;
    visit(empty);
    return;
  }
  std::vector<int> rgs(n, 0);   // rgs[v] = part index of v
  std::vector<int> maxv(n, 0);  // maxv[v] = max over rgs[0..v]
  std::vector<std::uint64_t> parts;
  for (;;) {
    int num_parts = maxv[n - 1] + 1;
    parts.assign(num_parts, 0);
    for (int v = 0; v < n; ++v) parts[rgs[v]] |= std::uint64_t{1} << v;
    if (!visit(parts)) return;

    int v = n - 1;
    while (v > 0 && rgs[v] == maxv[v - 1] + 1) --v;
    if (v == 0) break;
    ++rgs[v];
    maxv[v] = std::max(maxv[v - 1], rgs[v]);
    for (int w = v + 1; w < n; ++w) {
      rgs[w] = 0;
      maxv[w] = maxv[v];
    }
  }
}

inline Int bell_number(int n) {
  // Bell triangle.
  std::vector<Int> row = {Int(1)};
  for (int i = 1; i <= n; ++i) {
    std::vector<Int> next(i + 1);
    next[0] = row.back();
    for (int j = 1; j <= i; ++j) next[j] = next[j - 1] + row[j - 1];
    row = std::move(next);
  }
  return row[0];
}

inline void check_partition_cap(int n, const Caps& caps) {
  if (n > caps.partition_vertices)
    throw CapExceeded("partition enumeration over " + std::to_string(n) +
                      " vertices exceeds cap " +
                      std::to_string(caps.partition_vertices));
}

// A set partition of the vertices together with the quantities that drive the
// connectivity analysis: the number of crossing edges and the deficiency
// score |P|*(n-1)/n - N(P). A partition is bad when N(P) < |P| - 1.
struct PartitionRecord {
  std::vector<std::uint64_t> part_masks;  // ordered by smallest element
  int crossing_count = 0;
  Rational score;
  bool is_bad = false;

  int num_parts() const { return static_cast<int>(part_masks.size()); }
};

// An edge crosses a partition when it meets at least two parts, i.e. it is
// contained in no single part.
inline int crossing_edge_count(const Hypergraph& h,
                               const std::vector<std::uint64_t>& part_masks) {
  int crossing = 0;
  for (std::uint64_t em : h.edge_masks()) {
    bool inside = false;
    for (std::uint64_t pm : part_masks)
      if ((em & ~pm) == 0) {
        inside = true;
        break;
      }
    if (!inside) ++crossing;
  }
  return crossing;
}

inline std::uint64_t crossing_edge_mask(const Hypergraph& h,
                                        const std::vector<std::uint64_t>& part_masks) {
  std::uint64_t mask = 0;
  const auto& ems = h.edge_masks();
  for (std::size_t i = 0; i < ems.size(); ++i) {
    bool inside = false;
    for (std::uint64_t pm : part_masks)
      if ((ems[i] & ~pm) == 0) {
        inside = true;
        break;
      }
    if (!inside) mask |= std::uint64_t{1} << i;
  }
  return mask;
}

inline PartitionRecord make_partition_record(
    const Hypergraph& h, std::vector<std::uint64_t> part_masks) {
  PartitionRecord rec;
  rec.part_masks = std::move(part_masks);
  rec.crossing_count = crossing_edge_count(h, rec.part_masks);
  int n = h.num_vertices();
  int p = rec.num_parts();
  if (n > 0)
    rec.score = Rational(p) * Rational(n - 1, n) - rec.crossing_count;
  rec.is_bad = rec.crossing_count < p - 1;
  return rec;
}

// Serialized form: array of parts, each an ascending vertex array; parts
// ordered by smallest element.
inline nlohmann::json partition_to_json(const std::vector<std::uint64_t>& part_masks) {
  nlohmann::json arr = nlohmann::json::array();
  for (std::uint64_t pm : part_masks) {
    nlohmann::json part = nlohmann::json::array();
    for (int v = 0; v < 64; ++v)
      if (pm >> v & 1) part.push_back(v);
    arr.push_back(std::move(part));
  }
  return arr;
}

inline std::vector<std::uint64_t> singleton_partition(int n) {
  std::vector<std::uint64_t> parts(n);
  for (int v = 0; v < n; ++v) parts[v] = std::uint64_t{1} << v;
  return parts;
}

}  // namespace hychrom
