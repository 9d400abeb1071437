#pragma once

namespace hychrom {

// Enumeration limits shared by the exact kernels. All defaults are sized so
// a single instance finishes in seconds on a desktop.
struct Caps {
  // 2^|E| edge-subset enumerations (chromatic sums, forest counts, classes).
  int subset_edges = 24;
  // Bell(n) set-partition enumerations (rank formula, partition counts).
  int partition_vertices = 12;
  // 2^n vertex-subset enumerations (induced-subhypergraph scans).
  int subset_vertices = 16;
  // q^n work budget for the brute-force coloring counter.
  long long coloring_work = 100'000'000;
};

}  // namespace hychrom
