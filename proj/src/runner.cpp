#include "geoprove/runner.hpp"

#include <json.hpp>

#include <chrono>
#include <fstream>
#include <sstream>
#include <thread>

#include "geoprove/artable.hpp"
#include "geoprove/parser.hpp"

namespace geo {

using nlohmann::json;

const char* to_string(MethodKind m) {
  switch (m) {
    case MethodKind::wu:
      return "wu";
    case MethodKind::ddar:
      return "ddar";
    case MethodKind::ensemble:
      return "ensemble";
  }
  return "?";
}

std::optional<MethodKind> method_from_string(const std::string& s) {
  if (s == "wu") return MethodKind::wu;
  if (s == "ddar") return MethodKind::ddar;
  if (s == "ensemble") return MethodKind::ensemble;
  return std::nullopt;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::proved:
      return "proved";
    case Verdict::not_proved:
      return "not_proved";
    case Verdict::timeout:
      return "timeout";
    case Verdict::memory_exceeded:
      return "memory_exceeded";
    case Verdict::untranslatable:
      return "untranslatable";
  }
  return "?";
}

int verdict_strength(Verdict v) {
  switch (v) {
    case Verdict::proved:
      return 4;
    case Verdict::timeout:
      return 3;
    case Verdict::memory_exceeded:
      return 2;
    case Verdict::not_proved:
      return 1;
    case Verdict::untranslatable:
      return 0;
  }
  return -1;
}

std::vector<std::pair<Fact, std::vector<Fact>>> ArBridge::derive(
    const FactBase& fb) {
  LinearTable table;
  std::vector<std::pair<PointId, PointId>> keys;
  auto add_key = [&](PointId a, PointId b) {
    if (a == b) return;
    auto mm = std::minmax(a, b);
    std::pair<PointId, PointId> k{mm.first, mm.second};
    if (std::find(keys.begin(), keys.end(), k) == keys.end()) keys.push_back(k);
  };

  for (auto& f : fb.all()) {
    switch (f.kind) {
      case PredicateKind::parallel:
      case PredicateKind::perpendicular:
      case PredicateKind::cong:
        add_key(f.args[0], f.args[1]);
        add_key(f.args[2], f.args[3]);
        break;
      case PredicateKind::eqangle:
      case PredicateKind::eqratio:
        for (int i = 0; i < 4; ++i) add_key(f.args[2 * i], f.args[2 * i + 1]);
        break;
      case PredicateKind::midpoint:
      case PredicateKind::collinear:
        add_key(f.args[0], f.args[1]);
        add_key(f.args[0], f.args[2]);
        add_key(f.args[1], f.args[2]);
        break;
      case PredicateKind::circle_center:
        add_key(f.args[0], f.args[1]);
        add_key(f.args[0], f.args[2]);
        break;
      default:
        break;
    }
    if (!ar_supports(f.kind)) continue;
    for (auto& eq : fact_to_equations(f)) {
      try {
        table.add_equation(eq);
      } catch (const InconsistentEquation&) {
        // Mod-1 normalization of scaled direction rows can raise false
        // alarms; the offending equation is dropped, not fatal.
        saw_inconsistency_ = true;
      }
    }
  }
  auto derived = derive_atoms(table, keys);
  std::vector<std::pair<Fact, std::vector<Fact>>> fresh;
  for (auto& [fact, sources] : derived) {
    if (!fb.contains(fact)) fresh.emplace_back(fact, sources);
  }
  return fresh;
}

namespace {

Verdict verdict_from_wu(WuVerdict v) {
  switch (v) {
    case WuVerdict::proved_generic:
      return Verdict::proved;
    case WuVerdict::not_proved:
      return Verdict::not_proved;
    case WuVerdict::timeout:
      return Verdict::timeout;
    case WuVerdict::memory_exceeded:
      return Verdict::memory_exceeded;
  }
  return Verdict::not_proved;
}

MethodResult run_wu(const ProblemStatement& p, const RunnerOptions& opt,
                    ExecControl* external) {
  MethodResult r;
  r.problem = p.name;
  r.method = MethodKind::wu;
  WuOutcome out = prove(p, opt.budget, external);
  r.verdict = verdict_from_wu(out.verdict);
  r.elapsed_ms = out.stats.elapsed_ms;
  r.detail = out.detail;
  r.wu_outcome = std::move(out);
  return r;
}

MethodResult run_ddar(const ProblemStatement& p, const RunnerOptions& opt,
                      ExecControl* external) {
  auto t0 = std::chrono::steady_clock::now();
  MethodResult r;
  r.problem = p.name;
  r.method = MethodKind::ddar;
  auto finish = [&](Verdict v) {
    r.verdict = v;
    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
    return r;
  };

  NumericDiagram d;
  try {
    d = build_diagram(p, opt.seed);
  } catch (const DiagramError& e) {
    r.detail = e.what();
    return finish(Verdict::not_proved);
  }

  PointTable table(p.points);
  std::vector<Fact> hyps = facts_from_construction(p, table);

  std::optional<ExecControl> own;
  ExecControl* control = external;
  if (!control) {
    own.emplace(opt.budget);
    control = &*own;
  }

  ArBridge bridge;
  FactBase fb = saturate(hyps, opt.rules, d, table, opt.budget, control,
                         opt.use_ar ? &bridge : nullptr);

  DdarDetail detail;
  detail.complete = fb.complete;
  detail.rounds = fb.rounds;
  detail.fact_count = fb.size();

  auto goal = query(fb, p.goal);
  if (goal) {
    detail.proof = trace_proof(fb, *goal);
    detail.proof_text = proof_to_string(detail.proof, table);
    r.ddar_detail = std::move(detail);
    return finish(Verdict::proved);
  }
  r.ddar_detail = std::move(detail);
  if (!fb.complete) {
    r.detail = control->cancel_requested() ? "cancelled" : "budget exhausted";
    return finish(Verdict::timeout);
  }
  r.detail = "fixpoint reached without the goal";
  return finish(Verdict::not_proved);
}

}  // namespace

MethodResult run_method(const ProblemStatement& p, MethodKind m,
                        const RunnerOptions& opt, ExecControl* external) {
  if (m == MethodKind::ensemble) return run_ensemble(p, opt);

  auto rep = validate_problem(p);
  if (!rep.translatable()) {
    MethodResult r;
    r.problem = p.name;
    r.method = m;
    r.verdict = Verdict::untranslatable;
    r.elapsed_ms = 0;
    for (auto& f : rep.findings)
      if (f.code == Finding::unsupported_construction) {
        r.detail = f.message;
        break;
      }
    return r;
  }
  return m == MethodKind::wu ? run_wu(p, opt, external)
                             : run_ddar(p, opt, external);
}

MethodResult run_ensemble(const ProblemStatement& p, const RunnerOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();

  ExecControl wu_control(opt.budget);
  ExecControl ddar_control(opt.budget);

  MethodResult wu_result, ddar_result;
  std::thread wu_thread([&] {
    wu_result = run_method(p, MethodKind::wu, opt, &wu_control);
    if (wu_result.verdict == Verdict::proved) ddar_control.request_cancel();
  });
  std::thread ddar_thread([&] {
    ddar_result = run_method(p, MethodKind::ddar, opt, &ddar_control);
    if (ddar_result.verdict == Verdict::proved) wu_control.request_cancel();
  });
  wu_thread.join();
  ddar_thread.join();

  MethodResult r;
  r.problem = p.name;
  r.method = MethodKind::ensemble;
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - t0)
                     .count();

  const MethodResult* pick = nullptr;
  if (wu_result.verdict == Verdict::proved &&
      ddar_result.verdict == Verdict::proved) {
    pick = wu_result.elapsed_ms <= ddar_result.elapsed_ms ? &wu_result
                                                          : &ddar_result;
  } else if (wu_result.verdict == Verdict::proved) {
    pick = &wu_result;
  } else if (ddar_result.verdict == Verdict::proved) {
    pick = &ddar_result;
  }
  if (pick) {
    r.verdict = Verdict::proved;
    r.winner = to_string(pick->method);
    r.detail = pick->detail;
    r.wu_outcome = pick->wu_outcome;
    r.ddar_detail = pick->ddar_detail;
    return r;
  }
  // Strongest non-proof; cancellation artifacts rank below genuine timeouts.
  const MethodResult& strongest =
      verdict_strength(wu_result.verdict) >= verdict_strength(ddar_result.verdict)
          ? wu_result
          : ddar_result;
  r.verdict = strongest.verdict;
  r.detail = strongest.detail;
  r.wu_outcome = strongest.wu_outcome;
  r.ddar_detail = strongest.ddar_detail;
  return r;
}

std::vector<CorpusEntry> load_manifest(const std::string& corpus_dir) {
  std::ifstream in(corpus_dir + "/manifest.json");
  if (!in)
    throw std::runtime_error("cannot open manifest: " + corpus_dir +
                             "/manifest.json");
  json j = json::parse(in);
  std::vector<CorpusEntry> entries;
  for (auto& e : j.at("problems")) {
    CorpusEntry entry;
    entry.file = e.at("file").get<std::string>();
    entry.name = e.at("name").get<std::string>();
    entry.group = e.value("group", "");
    entry.source = e.value("source", "");
    entry.untranslatable = e.value("untranslatable", false);
    entry.expect_wu = e.value("expect_wu", "");
    if (e.contains("system_counts"))
      for (auto& [k, v] : e.at("system_counts").items())
        entry.system_counts[k] = v.get<int>();
    entries.push_back(std::move(entry));
  }
  return entries;
}

BenchmarkReport run_benchmark(const std::string& corpus_dir,
                              const std::vector<MethodKind>& methods,
                              const RunnerOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  BenchmarkReport report;
  std::ostringstream env;
  env << "threads=" << std::thread::hardware_concurrency()
      << " timeout_ms=" << opt.budget.wall_clock_ms
      << " term_ceiling=" << opt.budget.term_ceiling << " seed=" << opt.seed;
  report.environment = env.str();

  for (auto m : methods) report.solved_counts[to_string(m)] = 0;

  auto entries = load_manifest(corpus_dir);
  for (auto& entry : entries) {
    std::ifstream in(corpus_dir + "/" + entry.file);
    if (!in)
      throw std::runtime_error("corpus file missing: " + entry.file);
    std::ostringstream ss;
    ss << in.rdbuf();
    ProblemStatement p = parse_problem(ss.str());
    if (p.name != entry.name)
      throw std::runtime_error("manifest/problem name mismatch for " +
                               entry.file);
    // Per-problem sub-seed keeps diagrams independent across the corpus.
    RunnerOptions per = opt;
    std::uint64_t s = opt.seed;
    for (char c : entry.name) s = s * 1099511628211ull + static_cast<unsigned char>(c);
    per.seed = s;

    for (auto m : methods) {
      MethodResult r = run_method(p, m, per);
      if (r.verdict == Verdict::proved) report.solved_counts[to_string(m)]++;
      report.per_problem.push_back(std::move(r));
    }
  }
  report.wall_clock_total_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - t0)
          .count();
  return report;
}

namespace {

json result_to_json_obj(const MethodResult& r) {
  json j;
  j["problem"] = r.problem;
  j["method"] = to_string(r.method);
  j["verdict"] = to_string(r.verdict);
  j["elapsed_ms"] = r.elapsed_ms;
  if (!r.winner.empty()) j["winner"] = r.winner;
  if (!r.detail.empty()) j["detail"] = r.detail;
  if (r.wu_outcome) {
    json w;
    w["verdict"] = to_string(r.wu_outcome->verdict);
    w["prem_count"] = r.wu_outcome->stats.prem_count;
    w["peak_terms"] = r.wu_outcome->stats.peak_term_count;
    w["max_coeff_bits"] = r.wu_outcome->stats.max_coeff_bits;
    json ndgs = json::array();
    for (auto& n : r.wu_outcome->ndgs) ndgs.push_back(n.poly.to_string());
    w["ndg_conditions"] = ndgs;
    if (r.wu_outcome->chain) {
      json chain = json::array();
      for (auto& e : r.wu_outcome->chain->elems) {
        json el;
        el["main"] = r.wu_outcome->chain->order->name(e.main);
        el["poly"] = e.poly.to_string();
        chain.push_back(el);
      }
      w["chain"] = chain;
    }
    if (r.wu_outcome->final_remainder)
      w["final_remainder"] = r.wu_outcome->final_remainder->to_string();
    j["wu"] = w;
  }
  if (r.ddar_detail) {
    json d;
    d["complete"] = r.ddar_detail->complete;
    d["rounds"] = r.ddar_detail->rounds;
    d["fact_count"] = r.ddar_detail->fact_count;
    if (!r.ddar_detail->proof_text.empty())
      d["proof"] = r.ddar_detail->proof_text;
    j["ddar"] = d;
  }
  return j;
}

}  // namespace

std::string method_result_to_json(const MethodResult& r) {
  json j;
  j["schema_version"] = 1;
  j["result"] = result_to_json_obj(r);
  return j.dump(2) + "\n";
}

std::string benchmark_to_json(const BenchmarkReport& r) {
  json j;
  j["schema_version"] = 1;
  j["environment"] = r.environment;
  j["wall_clock_total_ms"] = r.wall_clock_total_ms;
  j["solved_counts"] = r.solved_counts;
  json results = json::array();
  for (auto& p : r.per_problem) results.push_back(result_to_json_obj(p));
  j["results"] = results;
  return j.dump(2) + "\n";
}

std::string benchmark_to_csv(const BenchmarkReport& r) {
  std::ostringstream os;
  os << "problem,method,verdict,elapsed_ms\n";
  for (auto& p : r.per_problem)
    os << p.problem << "," << to_string(p.method) << "," << to_string(p.verdict)
       << "," << p.elapsed_ms << "\n";
  return os.str();
}

std::string benchmark_summary(const BenchmarkReport& r) {
  std::ostringstream os;
  std::size_t n_problems =
      r.solved_counts.empty()
          ? 0
          : r.per_problem.size() / r.solved_counts.size();
  os << "problems: " << n_problems << "\n";
  for (auto& [method, count] : r.solved_counts)
    os << "  " << method << " solved " << count << "\n";
  os << "total wall clock: " << r.wall_clock_total_ms << " ms\n";
  return os.str();
}

}  // namespace geo
