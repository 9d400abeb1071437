#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hychrom/caps.hpp"
#include "hychrom/chromatic.hpp"
#include "hychrom/errors.hpp"
#include "hychrom/generators.hpp"
#include "hychrom/hypergraph.hpp"
#include "hychrom/matroid.hpp"
#include "hychrom/numeric.hpp"
#include "hychrom/penrose.hpp"
#include "hychrom/roots.hpp"

namespace hychrom {

struct InstanceRecord {
  int id = 0;
  std::uint64_t seed = 0;  // sub-seed the instance was drawn from, 0 if fixed
  Hypergraph h;
};

// One row of a verification report. Numeric fields are decimal strings so
// the serialized form is identical on every platform; empty string means
// the producing check did not run.
struct InstanceReport {
  int id = 0;
  std::uint64_t seed = 0;
  int n = 0;
  int t = 0;  // uniform edge size, else largest edge size, 0 when edgeless
  int max_degree = 0;
  int num_edges = 0;
  std::string a1;
  std::string n_forests;
  std::string max_root_modulus;
  std::string bound_8etD;
  std::string bound_cR;
  std::vector<std::pair<std::string, std::string>> checks;  // name -> status
  std::string status;  // "ok", "violated" or "skipped"
  bool ok = true;
};

inline const std::vector<std::string>& all_check_names() {
  static const std::vector<std::string> names = {
      "penrose",           "expo_identity",     "bounded_expo",
      "rank_consistency",  "hyperforest_bound", "euler_inequality",
      "root_bounds",       "structure_theorem", "sokal"};
  return names;
}

namespace checks {

inline std::string penrose(const Hypergraph& h, const Caps& caps,
                           InstanceReport& out) {
  auto c = penrose_check(h, caps);
  out.a1 = to_decimal(c.linear);
  out.n_forests = to_decimal(c.forest_count);
  return c.ok ? "ok" : "violated";
}

inline std::string expo_identity(const Hypergraph& h, const Caps& caps) {
  if (h.num_vertices() > 6) return "inapplicable";
  for (int x = 0; x <= 3; ++x)
    for (int y = 0; y <= 3; ++y)
      if (!check_binomial_identity(h, Int(x), Int(y), caps).ok)
        return "violated";
  return "ok";
}

inline std::string bounded_expo(const Hypergraph& h, const Caps& caps) {
  int n = h.num_vertices();
  if (n == 0) return "inapplicable";
  auto table = linear_coefficient_table(h, caps);
  int t = h.uniformity() ? *h.uniformity() : max_edge_size(h);
  Real base = euler_number() * t * h.max_degree();
  for (int s = 1; s <= std::min(6, n); ++s) {
    Real rhs = real_power(base, s - 1);
    for (int v = 0; v < n; ++v) {
      Int lhs = 0;
      for (std::uint64_t mask = 0; mask < table.size(); ++mask) {
        if (!(mask >> v & 1) || std::popcount(mask) != s) continue;
        lhs += abs(table[mask]);
      }
      if (!leq_with_slack(Real(lhs), rhs)) return "violated";
    }
  }
  return "ok";
}

inline std::string rank_consistency(const Hypergraph& h, const Caps& caps) {
  if (h.num_vertices() > 5 || h.num_edges() > 6) return "inapplicable";
  auto table = rank_table(h, caps);
  auto forest = hyperforest_table(h, caps);
  std::uint64_t full = full_edge_mask(h);
  for (std::uint64_t z = 0;; ++z) {
    if (table[z] != rank_via_independence(h, z, caps)) return "violated";
    bool independent = table[z] == std::popcount(z);
    if (independent != static_cast<bool>(forest[z])) return "violated";
    if (z == full) break;
  }
  return "ok";
}

inline std::string hyperforest_bound(const Hypergraph& h, const Caps& caps) {
  int n = h.num_vertices();
  if (n == 0) return "inapplicable";
  auto forest = hyperforest_table(h, caps);
  for (std::uint64_t mask = 0; mask < forest.size(); ++mask)
    if (forest[mask] && std::popcount(mask) > n - 1) return "violated";
  if (rank(h, full_edge_mask(h), caps).value > n - 1) return "violated";
  return "ok";
}

inline std::string euler_inequality(const Hypergraph& h, const Caps& caps) {
  auto table = rank_table(h, caps);
  std::uint64_t full = full_edge_mask(h);
  int full_rank = table[full];
  auto primal = euler_inequality_check(
      h.num_edges(), [&](std::uint64_t s) { return table[s]; });
  auto dual =
      euler_inequality_check(h.num_edges(), [&](std::uint64_t s) {
        return std::popcount(s) + table[full & ~s] - full_rank;
      });
  return primal.ok && dual.ok ? "ok" : "violated";
}

inline std::string root_bounds(const Hypergraph& h, const Caps& caps,
                               InstanceReport& out) {
  auto rb = root_bound_check(h, caps);
  out.max_root_modulus = to_decimal(rb.roots.max_modulus);
  out.bound_8etD = to_decimal(rb.bound_eight);
  out.bound_cR = to_decimal(rb.bound_c);
  bool ok = rb.within_eight && rb.within_c &&
            rb.roots.max_residual <= Real("1e-8");
  return ok ? "ok" : "violated";
}

inline std::string structure_theorem(const Hypergraph& h, const Caps& caps) {
  if (h.num_vertices() == 0 || h.num_vertices() > 6 || h.num_edges() > 8)
    return "inapplicable";
  return verify_structure_theorem(h, caps).all_ok ? "ok" : "violated";
}

inline std::string sokal(const Hypergraph& h, const Caps& caps) {
  int n = h.num_vertices();
  if (n == 0) return "inapplicable";
  if (h.num_edges() > 0 && (!h.uniformity() || *h.uniformity() != 2))
    return "inapplicable";
  if (n >= 2 && h.max_degree() == 0) return "inapplicable";
  check_vertex_subset_cap(h, caps);
  std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::vector<Int> tau(full + 1);
  for (std::uint64_t s = 0;; ++s) {
    tau[s] = spanning_tree_count(induced(h, s).subgraph);
    if (s == full) break;
  }
  Real rhs = real_power(euler_number() * h.max_degree(), n - 1);
  for (int v = 0; v < n; ++v) {
    Int sum = 0;
    for (std::uint64_t s = 0; s <= full; ++s)
      if (s >> v & 1) sum += tau[s];
    if (!leq_with_slack(Real(sum), rhs)) return "violated";
  }
  return "ok";
}

}  // namespace checks

inline std::string run_check(const std::string& name, const Hypergraph& h,
                             const Caps& caps, InstanceReport& out) {
  if (name == "penrose") return checks::penrose(h, caps, out);
  if (name == "expo_identity") return checks::expo_identity(h, caps);
  if (name == "bounded_expo") return checks::bounded_expo(h, caps);
  if (name == "rank_consistency") return checks::rank_consistency(h, caps);
  if (name == "hyperforest_bound") return checks::hyperforest_bound(h, caps);
  if (name == "euler_inequality") return checks::euler_inequality(h, caps);
  if (name == "root_bounds") return checks::root_bounds(h, caps, out);
  if (name == "structure_theorem") return checks::structure_theorem(h, caps);
  if (name == "sokal") return checks::sokal(h, caps);
  throw ParseError("unknown check: " + name);
}

inline InstanceReport run_instance(const InstanceRecord& rec,
                                   const std::vector<std::string>& names,
                                   const Caps& caps) {
  InstanceReport r;
  r.id = rec.id;
  r.seed = rec.seed;
  r.n = rec.h.num_vertices();
  r.t = rec.h.uniformity() ? *rec.h.uniformity() : max_edge_size(rec.h);
  r.max_degree = rec.h.max_degree();
  r.num_edges = rec.h.num_edges();
  bool any_skip = false;
  for (const auto& name : names) {
    std::string status;
    try {
      status = run_check(name, rec.h, caps, r);
    } catch (const CapExceeded&) {
      status = "skipped: cap";
    } catch (const TheoremViolation& e) {
      status = std::string("violated: ") + e.what();
    } catch (const RootFindingError& e) {
      status = std::string("error: ") + e.what();
    }
    if (status.rfind("skipped", 0) == 0)
      any_skip = true;
    else if (status != "ok" && status != "inapplicable")
      r.ok = false;
    r.checks.emplace_back(name, std::move(status));
  }
  r.status = !r.ok ? "violated" : any_skip ? "skipped" : "ok";
  return r;
}

// Instances are claimed through a shared cursor but land in their own slot,
// so the merged report does not depend on the worker count.
inline std::vector<InstanceReport> run_sweep(
    const std::vector<InstanceRecord>& instances,
    const std::vector<std::string>& names, const Caps& caps, int workers = 1) {
  std::vector<InstanceReport> reports(instances.size());
  std::atomic<std::size_t> cursor{0};
  auto drain = [&] {
    for (;;) {
      std::size_t i = cursor.fetch_add(1);
      if (i >= instances.size()) return;
      reports[i] = run_instance(instances[i], names, caps);
    }
  };
  if (workers <= 1) {
    drain();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(drain);
    for (auto& th : pool) th.join();
  }
  return reports;
}

inline bool sweep_all_ok(const std::vector<InstanceReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const InstanceReport& r) { return r.ok; });
}

inline bool sweep_any_skip(const std::vector<InstanceReport>& reports) {
  return std::any_of(reports.begin(), reports.end(),
                     [](const InstanceReport& r) {
                       return r.status == "skipped";
                     });
}

inline nlohmann::json report_to_json(const InstanceReport& r) {
  nlohmann::json j;
  j["id"] = r.id;
  j["seed"] = std::to_string(r.seed);
  j["n"] = r.n;
  j["t"] = r.t;
  j["max_degree"] = r.max_degree;
  j["num_edges"] = r.num_edges;
  j["a1"] = r.a1;
  j["n_forests"] = r.n_forests;
  j["max_root_modulus"] = r.max_root_modulus;
  j["bound_8etD"] = r.bound_8etD;
  j["bound_cR"] = r.bound_cR;
  j["rhs_digits"] = kRealDigits;
  nlohmann::json by_name = nlohmann::json::object();
  for (const auto& [name, status] : r.checks) by_name[name] = status;
  j["checks"] = std::move(by_name);
  j["status"] = r.status;
  j["ok"] = r.ok;
  return j;
}

inline nlohmann::json sweep_to_json(const std::vector<InstanceReport>& reports) {
  nlohmann::json rows = nlohmann::json::array();
  int ok = 0, violated = 0, skipped = 0;
  for (const auto& r : reports) {
    rows.push_back(report_to_json(r));
    if (r.status == "ok")
      ++ok;
    else if (r.status == "skipped")
      ++skipped;
    else
      ++violated;
  }
  nlohmann::json j;
  j["instances"] = std::move(rows);
  j["summary"] = {{"total", reports.size()},
                  {"ok", ok},
                  {"violated", violated},
                  {"skipped", skipped}};
  return j;
}

inline std::string sweep_to_csv(const std::vector<InstanceReport>& reports) {
  std::ostringstream out;
  out << "id,seed,n,t,max_degree,num_edges,a1,n_forests,"
         "max_root_modulus,bound_8etD,bound_cR,checks,status\n";
  for (const auto& r : reports) {
    out << r.id << ',' << r.seed << ',' << r.n << ',' << r.t << ','
        << r.max_degree << ',' << r.num_edges << ',' << r.a1 << ','
        << r.n_forests << ',' << r.max_root_modulus << ',' << r.bound_8etD
        << ',' << r.bound_cR << ',';
    for (std::size_t i = 0; i < r.checks.size(); ++i) {
      if (i) out << '|';
      out << r.checks[i].first << '=' << r.checks[i].second;
    }
    out << ',' << r.status << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Instance families for sweeps.

inline std::uint64_t instance_sub_seed(std::uint64_t master,
                                       std::uint64_t index) {
  return splitmix64(master + index * 0x9e3779b97f4a7c15ULL);
}

// n, edge size and edge count drawn from the sub-seed; edges picked without
// replacement from all candidate sets of that size.
inline Hypergraph random_instance(std::uint64_t sub_seed, int min_n, int max_n,
                                  const std::vector<int>& edge_sizes,
                                  int max_edges) {
  std::mt19937_64 rng(sub_seed);
  int n = min_n + static_cast<int>(rng() % (max_n - min_n + 1));
  int t = edge_sizes[rng() % edge_sizes.size()];
  std::vector<std::vector<int>> candidates;
  if (n >= t)
    for_each_combination(
        n, t, [&](const std::vector<int>& c) { candidates.push_back(c); });
  std::size_t limit =
      std::min<std::size_t>(max_edges, candidates.size());
  std::size_t count = limit == 0 ? 0 : rng() % (limit + 1);
  std::vector<std::size_t> order(candidates.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::vector<int>> edges;
  for (std::size_t j = 0; j < count; ++j) {
    std::size_t pick = j + rng() % (order.size() - j);
    std::swap(order[j], order[pick]);
    edges.push_back(candidates[order[j]]);
  }
  return Hypergraph(n, std::move(edges));
}

// All edge subsets of the complete t-uniform hypergraph on n vertices; the
// instance id is the subset mask.
inline std::vector<InstanceRecord> exhaustive_uniform_family(
    int n, int t, const Caps& caps = {}) {
  Hypergraph full = complete_uniform(n, t);
  check_edge_subset_cap(full, caps);
  std::vector<InstanceRecord> out;
  std::uint64_t count = std::uint64_t{1} << full.num_edges();
  out.reserve(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    std::vector<std::vector<int>> edges;
    for (std::uint64_t rest = mask; rest; rest &= rest - 1)
      edges.push_back(full.edge(std::countr_zero(rest)));
    out.push_back(
        {static_cast<int>(mask), 0, Hypergraph(n, std::move(edges))});
  }
  return out;
}

inline std::vector<InstanceRecord> exhaustive_graph_family(
    int max_n, const Caps& caps = {}) {
  std::vector<InstanceRecord> out;
  int id = 0;
  for (int n = 1; n <= max_n; ++n) {
    if (n < 2) {
      out.push_back({id++, 0, Hypergraph(n, {})});
      continue;
    }
    for (auto& rec : exhaustive_uniform_family(n, 2, caps))
      out.push_back({id++, 0, std::move(rec.h)});
  }
  return out;
}

inline std::vector<InstanceRecord> random_mixed_family(int count,
                                                       std::uint64_t seed) {
  std::vector<InstanceRecord> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    std::uint64_t sub = instance_sub_seed(seed, i);
    out.push_back({i, sub, random_instance(sub, 1, 7, {2, 3, 4}, 10)});
  }
  return out;
}

// Smaller instances sized for the equivalence-class machinery.
inline std::vector<InstanceRecord> random_structure_family(
    int count, std::uint64_t seed) {
  std::vector<InstanceRecord> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    std::uint64_t sub = instance_sub_seed(seed, i);
    out.push_back({i, sub, random_instance(sub, 3, 6, {2, 3}, 8)});
  }
  return out;
}

// Dense and cyclic instances where the root bound is most strained.
inline std::vector<InstanceRecord> root_bound_family() {
  std::vector<InstanceRecord> out;
  int id = 0;
  for (int n = 3; n <= 7; ++n) out.push_back({id++, 0, complete_uniform(n, 3)});
  for (int n = 3; n <= 12; ++n) out.push_back({id++, 0, tight_cycle(n, 2)});
  for (int n = 4; n <= 12; ++n) out.push_back({id++, 0, tight_cycle(n, 3)});
  return out;
}

}  // namespace hychrom
