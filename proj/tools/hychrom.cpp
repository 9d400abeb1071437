#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hychrom/chromatic.hpp"
#include "hychrom/errors.hpp"
#include "hychrom/generators.hpp"
#include "hychrom/hypergraph.hpp"
#include "hychrom/matroid.hpp"
#include "hychrom/partition.hpp"
#include "hychrom/polynomial.hpp"
#include "hychrom/roots.hpp"
#include "hychrom/verify.hpp"

using namespace hychrom;

namespace {

Hypergraph load_input(const std::string& path) {
  if (path.empty() || path == "-") return parse_hypergraph(std::cin);
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open input: " + path);
  return parse_hypergraph(in);
}

void emit(const std::string& path, std::string text) {
  if (!text.empty() && text.back() != '\n') text += '\n';
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open output: " + path);
  out << text;
}

int run_chrom(const Hypergraph& h, const Caps& caps, const std::string& format,
              const std::string& out_path) {
  IntPolynomial p = chromatic_polynomial_auto(h, caps);
  std::vector<Int> counts = to_falling_factorial(p);
  if (format == "csv") {
    std::ostringstream os;
    os << "power,coefficient,falling_factorial_count\n";
    for (int i = 0; i <= p.degree(); ++i)
      os << i << ',' << to_decimal(p.coefficient(i)) << ','
         << to_decimal(counts[i]) << '\n';
    emit(out_path, os.str());
    return 0;
  }
  nlohmann::json j;
  j["num_vertices"] = h.num_vertices();
  j["num_edges"] = h.num_edges();
  j["degree"] = p.degree();
  j["coefficients"] = polynomial_to_json(p);
  nlohmann::json ff = nlohmann::json::array();
  for (const Int& c : counts) ff.push_back(to_decimal(c));
  j["falling_factorial_counts"] = std::move(ff);
  j["a1"] = to_decimal(p.coefficient(1));
  emit(out_path, j.dump(2));
  return 0;
}

int run_roots(const Hypergraph& h, const Caps& caps, const std::string& format,
              const std::string& out_path) {
  RootBoundReport rb = root_bound_check(h, caps);
  if (format == "csv") {
    std::ostringstream os;
    os << "index,re,im,modulus,residual\n";
    for (std::size_t i = 0; i < rb.roots.roots.size(); ++i) {
      const Complex& z = rb.roots.roots[i];
      os << i << ',' << to_decimal(z.real()) << ',' << to_decimal(z.imag())
         << ',' << to_decimal(abs(z)) << ',' << to_decimal(rb.roots.residuals[i])
         << '\n';
    }
    emit(out_path, os.str());
  } else {
    nlohmann::json j;
    j["degree"] = rb.degree;
    j["zero_multiplicity"] = rb.roots.zero_multiplicity;
    nlohmann::json roots = nlohmann::json::array();
    for (std::size_t i = 0; i < rb.roots.roots.size(); ++i) {
      const Complex& z = rb.roots.roots[i];
      roots.push_back({{"re", to_decimal(z.real())},
                       {"im", to_decimal(z.imag())},
                       {"residual", to_decimal(rb.roots.residuals[i])}});
    }
    j["roots"] = std::move(roots);
    j["max_modulus"] = to_decimal(rb.roots.max_modulus);
    j["max_residual"] = to_decimal(rb.roots.max_residual);
    j["bound_8etD"] = to_decimal(rb.bound_eight);
    j["bound_cR"] = to_decimal(rb.bound_c);
    j["ok_8etD"] = rb.within_eight;
    j["ok_cR"] = rb.within_c;
    j["rhs_digits"] = kRealDigits;
    emit(out_path, j.dump(2));
  }
  return rb.within_eight && rb.within_c ? 0 : 2;
}

int run_decompose(const Hypergraph& h, const Caps& caps,
                  const std::string& out_path) {
  nlohmann::json j;
  j["num_vertices"] = h.num_vertices();
  j["num_edges"] = h.num_edges();
  j["rank"] = rank(h, full_edge_mask(h), caps).value;
  auto bad = maximal_bad_partition(h, caps);
  j["partition_connected"] = !bad.has_value();
  if (bad) {
    j["maximal_bad_partition"] = partition_to_json(bad->part_masks);
    j["score"] = bad->score.str();
    j["crossing_edges"] = bad->crossing_count;
  } else {
    j["maximal_bad_partition"] = nullptr;
  }
  j["decomposition"] =
      partition_to_json(partition_connected_decomposition(h, caps));
  emit(out_path, j.dump(2));
  return 0;
}

std::vector<InstanceRecord> build_family(const std::string& family,
                                         const FamilyParams& params, int count,
                                         const Caps& caps) {
  if (family == "exhaustive")
    return exhaustive_uniform_family(params.n, params.t, caps);
  if (family == "graphs") return exhaustive_graph_family(params.n, caps);
  if (family == "random") return random_mixed_family(count, params.seed);
  if (family == "structure")
    return random_structure_family(count, params.seed);
  if (family == "roots") return root_bound_family();
  return {{0, family == "random_uniform" ? params.seed : 0,
           generate(family, params)}};
}

int run_verify(const std::vector<InstanceRecord>& instances,
               const std::vector<std::string>& names, const Caps& caps,
               int workers, const std::string& format,
               const std::string& out_path) {
  auto reports = run_sweep(instances, names, caps, workers);
  emit(out_path, format == "csv" ? sweep_to_csv(reports)
                                 : sweep_to_json(reports).dump(2));
  if (!sweep_all_ok(reports)) return 2;
  if (reports.size() == 1 && reports[0].status == "skipped") return 3;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact hypergraph coloring polynomials, hypergraphic-matroid "
               "decompositions and bound verification"};
  app.require_subcommand(1);

  std::string input_path;
  std::string out_path;
  std::string format = "json";
  std::string family;
  FamilyParams params;
  int count = 100;
  int workers = 1;
  std::vector<std::string> check_names = {"all"};
  Caps caps;

  auto add_io = [&](CLI::App* cmd, bool with_input) {
    if (with_input)
      cmd->add_option("--input", input_path,
                      "input hypergraph JSON file ('-' or empty for stdin)");
    cmd->add_option("--out", out_path, "output file (default stdout)");
    cmd->add_option("--cap-edges", caps.subset_edges,
                    "max |E| for 2^|E| enumerations");
    cmd->add_option("--cap-partition", caps.partition_vertices,
                    "max n for set-partition enumerations");
  };
  auto add_family = [&](CLI::App* cmd) {
    cmd->add_option("--family", family, "instance family");
    cmd->add_option("--n", params.n, "vertex count");
    cmd->add_option("--t", params.t, "edge size");
    cmd->add_option("--k", params.k, "edge count (loose_path)");
    cmd->add_option("--p", params.p, "edge probability (random_uniform)");
    cmd->add_option("--seed", params.seed, "master seed");
    cmd->add_option("--count", count, "instance count for random families");
  };

  auto* gen = app.add_subcommand("gen", "generate an instance as JSON");
  add_family(gen);
  gen->add_option("--out", out_path, "output file (default stdout)");

  auto* chrom = app.add_subcommand(
      "chrom", "coloring polynomial in power and falling-factorial form");
  add_io(chrom, true);
  chrom->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* roots = app.add_subcommand("roots",
                                   "polynomial roots and modulus bounds");
  add_io(roots, true);
  roots->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* decompose = app.add_subcommand(
      "decompose", "maximal bad partition and connected decomposition");
  add_io(decompose, true);

  auto* verify = app.add_subcommand(
      "verify", "run checks over one instance or a family sweep");
  add_io(verify, true);
  add_family(verify);
  verify->add_option("--check", check_names,
                     "check name or 'all' (repeatable)");
  verify->add_option("--workers", workers, "worker thread count")
      ->check(CLI::PositiveNumber);
  verify->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*gen) {
      if (family.empty()) throw ParseError("gen requires --family");
      emit(out_path, hypergraph_to_json(generate(family, params)).dump(2));
      return 0;
    }
    if (*chrom) return run_chrom(load_input(input_path), caps, format, out_path);
    if (*roots) return run_roots(load_input(input_path), caps, format, out_path);
    if (*decompose) return run_decompose(load_input(input_path), caps, out_path);

    std::vector<std::string> names;
    for (const auto& name : check_names) {
      if (name == "all") {
        names = all_check_names();
        break;
      }
      if (std::find(all_check_names().begin(), all_check_names().end(),
                    name) == all_check_names().end())
        throw ParseError("unknown check: " + name);
      names.push_back(name);
    }
    std::vector<InstanceRecord> instances;
    if (!family.empty())
      instances = build_family(family, params, count, caps);
    else
      instances = {{0, 0, load_input(input_path)}};
    return run_verify(instances, names, caps, workers, format, out_path);
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const TheoremViolation& e) {
    std::cerr << "violation: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
