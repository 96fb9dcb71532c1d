#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "chrombound/chromatic.hpp"
#include "chrombound/enumerator.hpp"
#include "chrombound/errors.hpp"
#include "chrombound/families.hpp"
#include "chrombound/graph6.hpp"
#include "chrombound/parallel.hpp"
#include "chrombound/report.hpp"
#include "chrombound/verifier.hpp"

using namespace chrombound;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIntegrity = 3;

struct RunConfig {
  std::string input;
  std::string enum_class;
  std::string suite;
  int n = 0;
  std::optional<int> k;
  std::optional<int> n_max;
  std::vector<long> xs;
  std::optional<long> x_max;
  std::string format = "json";
  std::string out;
  int threads = default_thread_count();
  std::uint64_t seed = 1;
  int samples = 1000;
  bool stats = false;
  bool full = false;
};

struct Named {
  std::string label;
  Graph graph;
};

std::vector<Named> read_poly_inputs(const std::string& input) {
  std::vector<Named> out;
  if (input == "-") {
    std::string line;
    while (std::getline(std::cin, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      Graph g = from_graph6(line);
      out.push_back({to_graph6(g), std::move(g)});
    }
  } else if (input.find(':') != std::string::npos) {
    for (auto& f : families::parse_family(input)) out.push_back({f.name, std::move(f.graph)});
  } else {
    Graph g = from_graph6(input);
    out.push_back({to_graph6(g), std::move(g)});
  }
  return out;
}

int cmd_poly(const RunConfig& cfg) {
  MemoCache cache;
  for (const auto& [label, g] : read_poly_inputs(cfg.input)) {
    const IntPoly p = chromatic_polynomial(g, cache);
    std::cout << label << " (n=" << g.order() << ", m=" << g.size() << ")\n";
    std::cout << "  coefficients: " << coefficient_list(p) << "\n";
    std::cout << "  polynomial: " << to_string(p) << "\n";
    if (auto form = match_falling_power(p)) std::cout << "  factored: " << to_string(*form) << "\n";
    for (long x : cfg.xs) std::cout << "  pi(" << x << ") = " << p.eval_at(x) << "\n";
  }
  return kExitOk;
}

int cmd_enumerate(const RunConfig& cfg) {
  EnumerationOptions opts;
  opts.threads = cfg.threads;
  GraphStream graphs;
  if (cfg.enum_class == "all") {
    graphs = all_graphs(cfg.n, opts);
  } else if (cfg.enum_class == "trianglefree") {
    graphs = triangle_free_graphs(cfg.n, opts);
  } else if (cfg.enum_class == "alpha2conn") {
    graphs = alpha_le2_connected(cfg.n, opts);
  } else {
    if (!cfg.k) throw InvalidArgument("ck-alpha2 needs --k");
    graphs = ck_alpha_le2(cfg.n, *cfg.k, opts);
  }
  for (const auto& g : graphs) std::cout << to_graph6(g) << "\n";
  return kExitOk;
}

std::vector<long> x_set_for(const RunConfig& cfg, int floor) {
  if (!cfg.xs.empty()) return cfg.xs;
  if (cfg.x_max) {
    if (*cfg.x_max < floor) throw InvalidArgument("--x-max is below the smallest admissible x");
    std::vector<long> xs;
    for (long x = floor; x <= *cfg.x_max; ++x) xs.push_back(x);
    return xs;
  }
  return default_x_set(floor);
}

VerifyReport run_suite(const RunConfig& cfg) {
  VerifyOptions opts;
  opts.threads = cfg.threads;
  opts.keep_checks = cfg.full;
  opts.stats = cfg.stats;
  const int k = cfg.k.value_or(4);
  const std::string& s = cfg.suite;
  if (s == "main") {
    if (k < 4) throw InvalidArgument("k must be >= 4 for the main bound");
    return verify_theorem_main(cfg.n_max.value_or(8), k, x_set_for(cfg, k), opts);
  }
  if (s == "k2k3") return verify_k2_k3(cfg.n_max.value_or(8), x_set_for(cfg, 3), opts);
  if (s == "lemma-clique" || s == "universal") {
    const int n_max = cfg.n_max.value_or(k + 3);
    if (n_max < k) throw InvalidArgument("--n-max must be at least k");
    const auto xs = x_set_for(cfg, k);
    VerifyReport report;
    for (int n = k; n <= n_max; ++n) {
      append_report(report, s == "universal" ? verify_universal(n, k, xs, opts)
                                             : verify_lemma_clique(n, k, xs, opts));
    }
    return report;
  }
  if (s == "prop3") return verify_prop3(cfg.n_max.value_or(8), opts);
  if (s == "lemma5") return verify_lemma5_structure(k, x_set_for(cfg, k), opts);
  if (s == "decomposition") return verify_decomposition(cfg.n_max.value_or(7), opts);
  return verify_identities(cfg.samples, cfg.seed, opts);
}

int cmd_verify(const RunConfig& cfg) {
  const ReportFormat format = parse_format(cfg.format);
  const VerifyReport report = run_suite(cfg);
  const std::string text = emit_report(report, format);
  if (cfg.out.empty()) {
    std::cout << text;
    std::cerr << summary_line(report) << "\n";
  } else {
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file) throw InvalidArgument("cannot open " + cfg.out + " for writing");
    file << text;
    if (!file.flush()) throw InvalidArgument("failed writing " + cfg.out);
    std::cout << summary_line(report) << "\n";
  }
  return report.ok() ? kExitOk : kExitViolations;
}

int cmd_oracle(const RunConfig& cfg) {
  const int n_max = cfg.n_max.value_or(6);
  const long x_max = cfg.x_max.value_or(4);
  if (n_max < 1) throw InvalidArgument("--n-max must be positive");
  if (x_max < 0) throw InvalidArgument("--x-max must be non-negative");
  EnumerationOptions opts;
  opts.threads = cfg.threads;
  if (n_max > opts.all_graphs_max_order) {
    throw SizeGuardError("oracle: order " + std::to_string(n_max) + " exceeds the configured limit " +
                         std::to_string(opts.all_graphs_max_order));
  }
  // Brute-force budget, checked before any work.
  if (x_max >= 2) {
    BigInt leaves = 1;
    for (int i = 0; i < n_max; ++i) leaves *= x_max;
    if (leaves > (BigInt(1) << 30)) throw SizeGuardError("oracle: x-max^n-max exceeds the brute-force budget");
  }
  const auto start = std::chrono::steady_clock::now();
  std::size_t graphs = 0;
  std::size_t evaluations = 0;
  std::size_t mismatches = 0;
  for (int n = 1; n <= n_max; ++n) {
    const GraphStream stream = all_graphs(n, opts);
    std::vector<std::size_t> bad(stream.size(), 0);
    std::vector<MemoCache> caches(static_cast<std::size_t>(std::max(1, cfg.threads)));
    parallel_for(stream.size(), cfg.threads, [&](std::size_t i, int w) {
      const IntPoly p = chromatic_polynomial(stream[i], caches[static_cast<std::size_t>(w)]);
      for (long x = 0; x <= x_max; ++x) {
        if (p.eval_at(x) != count_colorings_bruteforce(stream[i], static_cast<unsigned>(x))) {
          ++bad[i];
        }
      }
    });
    for (std::size_t i = 0; i < stream.size(); ++i) {
      if (bad[i]) std::cerr << "mismatch: " << to_graph6(stream[i]) << "\n";
      mismatches += bad[i];
    }
    graphs += stream.size();
    evaluations += stream.size() * static_cast<std::size_t>(x_max + 1);
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  std::cout << "oracle: " << graphs << " graphs, " << evaluations << " evaluations, " << mismatches
            << " mismatches, " << ms << " ms\n";
  return mismatches == 0 ? kExitOk : kExitViolations;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact chromatic polynomials and bound verification for small graphs"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_threads = [&](CLI::App* sub) {
    sub->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);
  };

  auto* poly = app.add_subcommand("poly", "Chromatic polynomial of a graph6 string, family or stdin (-)");
  poly->add_option("input", cfg.input, "graph6, name:params, or - for graph6 lines on stdin")->required();
  poly->add_option("--x", cfg.xs, "Evaluate at x (repeatable)");

  auto* enumerate = app.add_subcommand("enumerate", "Canonical graph6 of every class member");
  enumerate->add_option("class", cfg.enum_class, "Graph class")
      ->required()
      ->check(CLI::IsMember({"all", "trianglefree", "alpha2conn", "ck-alpha2"}));
  enumerate->add_option("n", cfg.n, "Order")->required();
  enumerate->add_option("--k", cfg.k, "Chromatic number for ck-alpha2");
  add_threads(enumerate);

  auto* verify = app.add_subcommand("verify", "Run a verification suite and write a report");
  verify->add_option("suite", cfg.suite, "Suite")
      ->required()
      ->check(CLI::IsMember({"main", "k2k3", "lemma-clique", "prop3", "lemma5", "universal",
                             "identities", "decomposition"}));
  verify->add_option("--k", cfg.k, "Chromatic number");
  verify->add_option("--n-max", cfg.n_max, "Largest order");
  verify->add_option("--x", cfg.xs, "Sample point (repeatable)");
  verify->add_option("--x-max", cfg.x_max, "Sample every x from the minimum up to this value");
  verify->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  verify->add_option("--out", cfg.out, "Report path (stdout if omitted)");
  verify->add_option("--seed", cfg.seed, "Seed for the identities suite");
  verify->add_option("--samples", cfg.samples, "Instances per identity")->check(CLI::PositiveNumber);
  verify->add_flag("--stats", cfg.stats, "Include elapsed time and cache statistics");
  verify->add_flag("--full", cfg.full, "Include every bound check in the report");
  add_threads(verify);

  auto* oracle = app.add_subcommand("oracle", "Engine against brute-force colouring counts");
  oracle->add_option("--n-max", cfg.n_max, "Largest order");
  oracle->add_option("--x-max", cfg.x_max, "Largest x");
  add_threads(oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*poly) return cmd_poly(cfg);
    if (*enumerate) return cmd_enumerate(cfg);
    if (*verify) return cmd_verify(cfg);
    return cmd_oracle(cfg);
  } catch (const IntegrityError& e) {
    std::cerr << "integrity error: " << e.what() << "\n";
    return kExitIntegrity;
  } catch (const DivisibilityError& e) {
    std::cerr << "integrity error: " << e.what() << "\n";
    return kExitIntegrity;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
