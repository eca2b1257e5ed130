#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "geoprove/parser.hpp"
#include "geoprove/runner.hpp"

#ifndef GEOPROVE_DEFAULT_RULES
#define GEOPROVE_DEFAULT_RULES "data/rules.txt"
#endif

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"geoprover: algebraic and synthetic plane-geometry prover"};
  app.require_subcommand(1);

  std::string rules_path = GEOPROVE_DEFAULT_RULES;
  app.add_option("--rules", rules_path, "rule file for the DD engine");

  // prove
  auto* prove_cmd = app.add_subcommand("prove", "prove a single .geo problem");
  std::string prove_file, method_name = "ensemble", report_path;
  std::int64_t timeout_ms = 300000, term_ceiling = 2000000;
  std::uint64_t seed = 0;
  bool verbose = false;
  prove_cmd->add_option("file", prove_file, "problem file")->required();
  prove_cmd->add_option("--method", method_name, "wu | ddar | ensemble");
  prove_cmd->add_option("--timeout-ms", timeout_ms, "wall clock budget per method");
  prove_cmd->add_option("--term-ceiling", term_ceiling, "live polynomial term ceiling");
  prove_cmd->add_option("--seed", seed, "diagram / sampling seed");
  prove_cmd->add_option("--report", report_path, "write a JSON report here");
  prove_cmd->add_flag("-v,--verbose", verbose, "print the full engine report");

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "run a corpus benchmark");
  std::string bench_dir, methods_arg = "wu,ddar,ensemble", csv_path, json_path;
  std::int64_t b_timeout_ms = 300000, b_term_ceiling = 2000000;
  std::uint64_t b_seed = 0;
  bench_cmd->add_option("dir", bench_dir, "corpus directory with manifest.json")
      ->required();
  bench_cmd->add_option("--methods", methods_arg, "comma-separated methods");
  bench_cmd->add_option("--timeout-ms", b_timeout_ms, "wall clock budget per method");
  bench_cmd->add_option("--term-ceiling", b_term_ceiling, "term ceiling");
  bench_cmd->add_option("--seed", b_seed, "benchmark seed");
  bench_cmd->add_option("--csv", csv_path, "write per-problem CSV here");
  bench_cmd->add_option("--json", json_path, "write the JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    geo::RunnerOptions opt;
    opt.rules = geo::load_rules_file(rules_path);

    if (*prove_cmd) {
      auto method = geo::method_from_string(method_name);
      if (!method) {
        std::cerr << "unknown method '" << method_name << "'\n";
        return 2;
      }
      opt.budget.wall_clock_ms = timeout_ms;
      opt.budget.term_ceiling = term_ceiling;
      opt.seed = seed;

      geo::ProblemStatement p = geo::parse_problem(read_file(prove_file));
      geo::MethodResult r = geo::run_method(p, *method, opt);

      std::cout << r.problem << ": " << geo::to_string(r.verdict) << " ("
                << geo::to_string(r.method)
                << (r.winner.empty() ? "" : ", winner " + r.winner) << ", "
                << r.elapsed_ms << " ms)\n";
      if (verbose) {
        if (r.wu_outcome) std::cout << geo::wu_report(p, *r.wu_outcome);
        if (r.ddar_detail && !r.ddar_detail->proof_text.empty())
          std::cout << r.ddar_detail->proof_text;
      }
      if (!report_path.empty())
        write_file(report_path, geo::method_result_to_json(r));
      return r.verdict == geo::Verdict::proved ? 0 : 1;
    }

    if (*bench_cmd) {
      std::vector<geo::MethodKind> methods;
      std::stringstream ms(methods_arg);
      std::string tok;
      while (std::getline(ms, tok, ',')) {
        auto m = geo::method_from_string(tok);
        if (!m) {
          std::cerr << "unknown method '" << tok << "'\n";
          return 2;
        }
        methods.push_back(*m);
      }
      opt.budget.wall_clock_ms = b_timeout_ms;
      opt.budget.term_ceiling = b_term_ceiling;
      opt.seed = b_seed;

      geo::BenchmarkReport report = geo::run_benchmark(bench_dir, methods, opt);
      std::cout << geo::benchmark_summary(report);
      if (!csv_path.empty()) write_file(csv_path, geo::benchmark_to_csv(report));
      if (!json_path.empty())
        write_file(json_path, geo::benchmark_to_json(report));
      return 0;
    }
  } catch (const geo::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
