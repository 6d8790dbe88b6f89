#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kforest/generate.hpp"
#include "kforest/io.hpp"
#include "kforest/kforest_exact.hpp"
#include "kforest/solver.hpp"

namespace {

using nlohmann::json;

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw kforest::input_error("cannot open output file: " + path);
  return out;
}

kforest::MultiGraph make_graph(const std::string& model, int n, int m, int k,
                               std::uint64_t seed) {
  if (model == "gnm") return kforest::generate_gnm(n, m, seed);
  if (model == "ktrees") return kforest::generate_ktrees(n, k, seed);
  throw kforest::input_error("unknown model '" + model + "' (gnm|ktrees)");
}

json stats_json(const kforest::SolveStats& stats, int self_loops_dropped) {
  json trace = json::array();
  for (const auto& it : stats.iterations) {
    trace.push_back({{"f_before", it.f_before},
                     {"p", it.p_size},
                     {"h", it.h_size},
                     {"clump_edges", it.clump_edges},
                     {"components_contracted", it.components_contracted},
                     {"cumulative", it.cumulative_after}});
  }
  return {{"size", stats.total_size},
          {"iterations", stats.iteration_count},
          {"flow_calls", stats.flow_calls},
          {"self_loops_dropped", self_loops_dropped},
          {"cumulative_trace", stats.cumulative_trace},
          {"trace", trace}};
}

int run_solve(const std::string& in_path, const std::string& out_path,
              const std::string& stats_path) {
  kforest::ParsedGraph pg = kforest::parse_graph_file(in_path);
  for (const std::string& w : pg.warnings) std::cerr << "warning: " << w << "\n";

  auto [fam, stats] = kforest::forests(pg.graph, pg.k);

  if (out_path == "-") {
    kforest::emit_solution(std::cout, fam);
  } else {
    auto out = open_out(out_path);
    kforest::emit_solution(out, fam);
  }
  if (!stats_path.empty()) {
    auto out = open_out(stats_path);
    out << stats_json(stats, pg.self_loops_dropped).dump(2) << "\n";
  }
  return 0;
}

int run_verify(const std::string& graph_path, const std::string& sol_path,
               bool check_optimal) {
  kforest::ParsedGraph pg = kforest::parse_graph_file(graph_path);
  kforest::ForestFamily fam =
      kforest::parse_solution_file(sol_path, pg.graph, pg.k);
  kforest::VerifyReport report =
      kforest::verify_solution(pg.graph, fam, pg.k, check_optimal);

  std::cout << "size " << report.size << "\n";
  if (report.optimal) std::cout << "optimum " << *report.optimal << "\n";
  if (report.ok) {
    std::cout << "verify: OK\n";
    return 0;
  }
  for (const std::string& f : report.failures)
    std::cout << "verify: FAIL " << f << "\n";
  return 1;
}

int run_oracle(const std::string& in_path, const std::string& method) {
  kforest::ParsedGraph pg = kforest::parse_graph_file(in_path);
  if (method == "partition") {
    kforest::PartitionCertificate cert =
        kforest::partition_opt_certificate(pg.graph, pg.k);
    std::cout << cert.value << "\n";
    for (const auto& part : cert.witness) {
      std::cout << "partition:";
      for (kforest::Vertex v : part) std::cout << " " << (v + 1);
      std::cout << "\n";
    }
  } else if (method == "augment") {
    std::cout << kforest::solve_kforest(pg.graph, pg.k).size() << "\n";
  } else {
    throw kforest::input_error("unknown oracle method '" + method +
                               "' (partition|augment)");
  }
  return 0;
}

int run_gen(const std::string& model, int n, int m, int k, std::uint64_t seed,
            const std::string& out_path) {
  kforest::MultiGraph g = make_graph(model, n, m, k, seed);
  std::ostringstream comment;
  comment << model << " n=" << n << (model == "gnm" ? " m=" : " trees=")
          << (model == "gnm" ? m : k) << " seed=" << seed;
  if (out_path == "-") {
    kforest::emit_graph(std::cout, g, k, {comment.str()});
  } else {
    auto out = open_out(out_path);
    kforest::emit_graph(out, g, k, {comment.str()});
  }
  return 0;
}

int run_bench(const std::string& model, const std::vector<int>& sizes, int k,
              std::uint64_t seed, double edge_factor,
              const std::string& out_path) {
  std::ostream* os = &std::cout;
  std::ofstream file;
  if (out_path != "-") {
    file = open_out(out_path);
    os = &file;
  }
  *os << "n,m,k,seed,size,iterations,flow_calls,millis\n";
  for (int n : sizes) {
    int m = model == "gnm" ? static_cast<int>(n * edge_factor) : k * (n - 1);
    kforest::MultiGraph g = make_graph(model, n, m, k, seed);

    auto t0 = std::chrono::steady_clock::now();
    auto [fam, stats] = kforest::forests(g, k);
    auto t1 = std::chrono::steady_clock::now();
    auto millis =
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();

    kforest::VerifyReport rep = kforest::verify_solution(g, fam, k, false);
    if (!rep.ok) throw kforest::internal_error("bench solve failed verification");

    *os << n << "," << g.live_edge_count() << "," << k << "," << seed << ","
        << stats.total_size << "," << stats.iteration_count << ","
        << stats.flow_calls << "," << millis << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact k-forest solver (k edge-disjoint forests of maximum total size)"};
  app.require_subcommand(1);

  std::string in_path, out_path = "-", stats_path;
  auto* solve = app.add_subcommand("solve", "solve a graph file");
  solve->add_option("--in", in_path, "input graph file")->required();
  solve->add_option("--out", out_path, "solution file ('-' for stdout)");
  solve->add_option("--stats", stats_path, "write solver statistics (JSON)");

  std::string graph_path, sol_path;
  bool check_optimal = false;
  auto* verify = app.add_subcommand("verify", "verify a solution file");
  verify->add_option("--graph", graph_path, "graph file")->required();
  verify->add_option("--solution", sol_path, "solution file")->required();
  verify->add_flag("--check-optimal", check_optimal,
                   "also compare the size against an independent optimum");

  std::string oracle_in, method = "augment";
  auto* oracle = app.add_subcommand("oracle", "print the optimal value");
  oracle->add_option("--in", oracle_in, "input graph file")->required();
  oracle->add_option("--method", method, "partition|augment");

  std::string model = "gnm", gen_out = "-";
  int gen_n = 0, gen_m = 0, gen_k = 1;
  std::uint64_t seed = 1;
  auto* gen = app.add_subcommand("gen", "generate a random instance");
  gen->add_option("--model", model, "gnm|ktrees")->required();
  gen->add_option("--n", gen_n, "vertex count")->required();
  gen->add_option("--m", gen_m, "edge count (gnm)");
  gen->add_option("--k", gen_k, "forest count");
  gen->add_option("--seed", seed, "RNG seed");
  gen->add_option("--out", gen_out, "output file ('-' for stdout)");

  std::vector<int> sizes;
  double edge_factor = 10.0;
  std::string bench_out = "-";
  auto* bench = app.add_subcommand("bench", "time solves over generated instances (CSV)");
  bench->add_option("--model", model, "gnm|ktrees");
  bench->add_option("--sizes", sizes, "vertex counts")->required()->delimiter(',');
  bench->add_option("--k", gen_k, "forest count");
  bench->add_option("--seed", seed, "RNG seed");
  bench->add_option("--edge-factor", edge_factor, "gnm edges per vertex");
  bench->add_option("--out", bench_out, "CSV file ('-' for stdout)");

  try {
    app.parse(argc, argv);
    if (solve->parsed()) return run_solve(in_path, out_path, stats_path);
    if (verify->parsed()) return run_verify(graph_path, sol_path, check_optimal);
    if (oracle->parsed()) return run_oracle(oracle_in, method);
    if (gen->parsed()) return run_gen(model, gen_n, gen_m, gen_k, seed, gen_out);
    if (bench->parsed())
      return run_bench(model, sizes, gen_k, seed, edge_factor, bench_out);
    return 2;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const kforest::input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const kforest::internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
