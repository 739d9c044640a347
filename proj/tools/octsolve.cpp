// Command line front end: solve / verify / gen / bench over DIMACS-style
// instance files. Exit codes: 0 = YES (or success), 1 = NO, 2 = error.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "oct/dimacs.hpp"
#include "oct/oracle.hpp"
#include "oct/report.hpp"
#include "oct/solver.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

unsigned default_thread_count() {
  if (const char* env = std::getenv("OCTSOLVE_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 2;
}

struct SolveArgs {
  std::string file;
  int k = 0;
  bool minimize = false;
  bool parallel = false;
  bool deterministic = false;
  bool canonical = true;
  unsigned threads = 0;
  bool stats = false;
};

oct::SolveOptions solve_options(const SolveArgs& a) {
  oct::SolveOptions opts;
  if (a.parallel) {
    opts.threads = a.threads ? a.threads : default_thread_count();
    opts.canonical = a.canonical;
  }
  return opts;
}

int run_solve(const SolveArgs& a, bool k_given) {
  if (!a.minimize && !k_given) throw std::runtime_error("either -k or --minimize is required");
  const auto inst = oct::parse_instance(slurp(a.file));

  const auto start = std::chrono::steady_clock::now();
  const oct::SolveResult result = a.minimize ? oct::minimize_oct(inst.graph, solve_options(a))
                                             : oct::solve_oct(inst.graph, a.k, solve_options(a));
  const double elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  oct::RunReport report;
  report.yes = result.found();
  if (report.yes) {
    if (!oct::is_oct(inst.graph, *result.transversal))
      throw std::logic_error("internal error: witness failed verification");
    for (int v : result.transversal->members()) report.witness.push_back(inst.labels[v]);
  }
  report.k = a.minimize ? (report.yes ? result.transversal->size() : 0) : a.k;
  report.elapsed_ms = elapsed_ms;
  report.stats = result.stats;
  std::cout << report.render(a.stats);
  return report.yes ? 0 : 1;
}

int run_verify(const std::string& file, const std::vector<std::string>& vertices) {
  const auto inst = oct::parse_instance(slurp(file));
  std::vector<int> ids;
  for (const auto& name : vertices) {
    const auto id = inst.find_label(name);
    if (!id) throw std::runtime_error("unknown vertex label '" + name + "'");
    ids.push_back(*id);
  }
  const bool ok = oct::is_oct(inst.graph, oct::VertexSet{std::move(ids)});
  std::cout << (ok ? "YES\n" : "NO\n");
  return ok ? 0 : 1;
}

struct GenArgs {
  int n = 0;
  double edge_prob = 0.0;
  std::optional<int> edges;
  std::optional<int> planted;
  std::uint64_t seed = 0;
};

int run_gen(const GenArgs& a) {
  oct::GenSpec spec{a.n, a.edge_prob, a.edges, a.planted, a.seed};
  const oct::Graph g = oct::random_graph(spec);
  std::cout << "c octsolve gen n=" << a.n;
  if (a.edges)
    std::cout << " edges=" << *a.edges;
  else
    std::cout << " p=" << a.edge_prob;
  if (a.planted) std::cout << " planted=" << *a.planted;
  std::cout << " seed=" << a.seed << '\n';
  std::cout << oct::render_instance(g);
  return 0;
}

struct BenchArgs {
  std::string dir;
  std::string sweep;
  int k = -1;
  int n = 40;
  std::optional<int> edges;
  double edge_prob = 0.25;
  std::uint64_t seed = 0;
  bool parallel = false;
  unsigned threads = 0;
};

struct BenchRow {
  std::string name;
  oct::Graph graph;
  int k = 0;
};

int run_bench(const BenchArgs& a) {
  std::vector<BenchRow> rows;
  if (!a.dir.empty()) {
    if (a.k < 0) throw std::runtime_error("--k is required with --dir");
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(a.dir))
      if (entry.is_regular_file()) files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files)
      rows.push_back({f.filename().string(), oct::parse_instance(slurp(f.string())).graph, a.k});
  } else {
    int lo = 0;
    int hi = -1;
    const auto colon = a.sweep.find(':');
    if (colon == std::string::npos) throw std::runtime_error("--sweep expects '<kmin>:<kmax>'");
    try {
      lo = std::stoi(a.sweep.substr(0, colon));
      hi = std::stoi(a.sweep.substr(colon + 1));
    } catch (...) {
      throw std::runtime_error("--sweep expects '<kmin>:<kmax>'");
    }
    if (lo < 0 || hi < lo) throw std::runtime_error("--sweep expects 0 <= kmin <= kmax");
    for (int k = lo; k <= hi; ++k) {
      oct::GenSpec spec{a.n, a.edge_prob, a.edges, k, a.seed + static_cast<std::uint64_t>(k)};
      rows.push_back({"planted_k" + std::to_string(k), oct::random_graph(spec), k});
    }
  }

  oct::SolveOptions opts;
  if (a.parallel) opts.threads = a.threads ? a.threads : default_thread_count();

  // assignments_enumerated reports the largest single compression, the
  // quantity the 3^|s| bound applies to
  std::cout << "n,m,k,answer,time_ms,assignments_enumerated,bound_3_pow_s\n";
  for (const auto& row : rows) {
    const auto start = std::chrono::steady_clock::now();
    const auto result = oct::solve_oct(row.graph, row.k, opts);
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::cout << row.graph.vertex_count() << ',' << row.graph.edge_count() << ',' << row.k << ','
              << (result.found() ? "YES" : "NO") << ',' << std::fixed << std::setprecision(3)
              << ms << ',' << result.stats.max_assignments_per_compress << ','
              << oct::pow3_saturating(row.k + 1) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact odd cycle transversal solver"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "decide whether a transversal of size <= k exists");
  solve->add_option("file", solve_args.file, "instance file")->required();
  auto* k_opt = solve->add_option("-k,--k", solve_args.k, "transversal budget")
                    ->check(CLI::NonNegativeNumber);
  solve->add_flag("--minimize", solve_args.minimize, "search the minimum size instead of a budget");
  auto* par = solve->add_flag("--parallel", solve_args.parallel, "scan side assignments in parallel");
  solve->add_flag("--deterministic", solve_args.deterministic, "sequential scan (default)")
      ->excludes(par);
  solve->add_flag("--canonical,!--no-canonical", solve_args.canonical,
                  "resolve parallel races toward the sequential answer (default on)");
  solve->add_option("--threads", solve_args.threads, "worker count for --parallel");
  solve->add_flag("--stats", solve_args.stats, "emit counters as 'c' lines");

  std::string verify_file;
  std::vector<std::string> verify_vertices;
  auto* verify = app.add_subcommand("verify", "check that a vertex set is a transversal");
  verify->add_option("file", verify_file, "instance file")->required();
  verify->add_option("vertices", verify_vertices, "vertex labels of the candidate set");

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "emit a seeded random instance");
  gen->add_option("--n", gen_args.n, "vertex count")->required();
  gen->add_option("--edge-prob", gen_args.edge_prob, "edge probability");
  gen->add_option("--edges", gen_args.edges, "exact edge count (overrides --edge-prob)");
  gen->add_option("--planted", gen_args.planted, "plant a transversal of this size");
  gen->add_option("--seed", gen_args.seed, "generator seed");

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "CSV timing table over a directory or a planted sweep");
  auto* dir_opt = bench->add_option("--dir", bench_args.dir, "directory of instance files");
  bench->add_option("--sweep", bench_args.sweep, "planted sweep '<kmin>:<kmax>'")->excludes(dir_opt);
  bench->add_option("-k,--k", bench_args.k, "budget for --dir mode");
  bench->add_option("--n", bench_args.n, "vertex count for sweep instances");
  bench->add_option("--edges", bench_args.edges, "exact edge count for sweep instances");
  bench->add_option("--edge-prob", bench_args.edge_prob, "edge probability for sweep instances");
  bench->add_option("--seed", bench_args.seed, "base seed for sweep instances");
  bench->add_flag("--parallel", bench_args.parallel, "scan side assignments in parallel");
  bench->add_option("--threads", bench_args.threads, "worker count for --parallel");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (solve->parsed()) return run_solve(solve_args, k_opt->count() > 0);
    if (verify->parsed()) return run_verify(verify_file, verify_vertices);
    if (gen->parsed()) return run_gen(gen_args);
    if (bench->parsed()) {
      if (bench_args.dir.empty() && bench_args.sweep.empty())
        throw std::runtime_error("bench needs --dir or --sweep");
      return run_bench(bench_args);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
