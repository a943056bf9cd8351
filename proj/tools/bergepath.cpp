// bergepath: command-line front end for the Berge-path toolkit.
//
// Exit codes: 0 success / found / proved / all matched, 1 not found or
// mismatch, 2 invalid input or parameters, 3 budget exhausted or
// inconclusive.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "bergepath/berge.hpp"
#include "bergepath/extremal.hpp"
#include "bergepath/io.hpp"
#include "bergepath/report.hpp"
#include "bergepath/search.hpp"
#include "bergepath/structure.hpp"

namespace bp = bergepath;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitError = 2;
constexpr int kExitBudget = 3;

struct Common {
  bool json = false;
  std::uint64_t max_nodes = 100'000'000;
  std::int64_t max_ms = 60'000;
  int threads = 1;

  bp::Budget budget() const {
    bp::Budget b;
    b.max_nodes = max_nodes;
    b.max_time = std::chrono::milliseconds(max_ms);
    return b;
  }
};

void add_budget_flags(CLI::App* cmd, Common& c) {
  cmd->add_option("--max-nodes", c.max_nodes, "Search node budget")->check(CLI::PositiveNumber);
  cmd->add_option("--max-ms", c.max_ms, "Wall-clock budget in milliseconds")->check(CLI::PositiveNumber);
}

std::string edges_line(const bp::BergeWitness& w) {
  std::string out;
  for (const auto& e : w.edges) out += (out.empty() ? "" : " ") + bp::to_string(e);
  return out;
}

std::string set_text(const std::vector<bp::VertexId>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

class Runner {
 public:
  explicit Runner(const Common& c) : common_(c), start_(bp::Clock::now()) {}

  int finish(bp::RunReport& rep, int code) {
    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(bp::Clock::now() - start_).count();
    if (common_.json) std::cout << rep.to_json().dump(2) << "\n";
    return code;
  }

  int fail(bp::RunReport& rep, const std::string& code, const std::string& message) {
    rep.result = {{"error", {{"code", code}, {"message", message}}}};
    if (!common_.json) std::cerr << "error: " << message << "\n";
    return finish(rep, kExitError);
  }

  bool human() const { return !common_.json; }

 private:
  const Common& common_;
  bp::Clock::time_point start_;
};

int cmd_formula(const Common& c, int n, int r, int k) {
  Runner run(c);
  bp::RunReport rep{"formula", {{"n", n}, {"r", r}, {"k", k}}};
  bp::TuranParams p(n, r, k);
  const auto value = bp::turan_formula(p);
  const auto regime = bp::to_string(bp::turan_regime(p));
  rep.result = {{"value", value},
                {"regime", std::string(regime)},
                {"p", p.p()},
                {"q", p.q()},
                {"outside_proven_range", bp::outside_proven_range(p)}};
  if (run.human()) {
    std::cout << "ex_" << r << "(" << n << ", Berge-P_" << k << ") = " << value << "\n"
              << "regime  " << regime << "\n"
              << "p, q    " << p.p() << ", " << p.q() << "\n";
    if (bp::outside_proven_range(p)) std::cout << "note    r < 3 is outside the proven range\n";
  }
  return run.finish(rep, kExitOk);
}

int cmd_construct(const Common& c, int n, int r, int k, const std::string& out_path) {
  Runner run(c);
  bp::RunReport rep{"construct", {{"n", n}, {"r", r}, {"k", k}, {"output", out_path.empty() ? bp::json(nullptr) : bp::json(out_path)}}};
  bp::TuranParams p(n, r, k);
  const bp::Hypergraph h = k > r ? bp::construct_extremal(p) : bp::construct_small_k(p);
  // Detection runs in the bitset regime only.
  const bool checked = h.n() <= bp::kMaskVertices;
  const bool free = checked && !bp::find_berge_path(h, k).has_value();
  const char* verdict = !checked ? "skipped" : free ? "pass" : "fail";
  const auto formula = bp::turan_formula(p);
  if (!out_path.empty()) bp::write_file(out_path, bp::to_text(h));
  rep.result = {{"edge_count", h.edge_count()},
                {"formula_value", formula},
                {"self_check", verdict},
                {"hypergraph", bp::to_json_value(h)}};
  if (run.human()) {
    if (out_path.empty()) std::cout << bp::to_text(h);
    std::cout << "edges       " << h.edge_count() << " (formula " << formula << ")\n"
              << "self-check  " << verdict << " (no Berge-P_" << k << ")\n";
    if (!out_path.empty()) std::cout << "written     " << out_path << "\n";
  }
  return run.finish(rep, !checked || free ? kExitOk : kExitNegative);
}

int cmd_detect(const Common& c, const std::string& input, int k, const std::string& kind) {
  Runner run(c);
  bp::RunReport rep{"detect", {{"input", input}, {"k", k}, {"kind", kind}}};
  const auto h = bp::parse_hypergraph(bp::read_file(input));
  const auto walk = kind == "path" ? bp::WalkKind::path : bp::WalkKind::cycle;
  auto res = bp::search_berge_walk(h, walk, k, ~bp::VertexMask{0}, c.budget());
  const char* status = res.found() ? "found" : res.status == bp::SearchStatus::not_found ? "not_found" : "budget_exhausted";
  rep.result = {{"status", status},
                {"witness", res.witness ? bp::to_json_value(*res.witness) : bp::json(nullptr)},
                {"nodes_explored", res.nodes}};
  if (run.human()) {
    std::cout << "Berge-" << (walk == bp::WalkKind::path ? "P_" : "C_") << k << ": " << status << "\n";
    if (res.witness)
      std::cout << "vertices  " << set_text(res.witness->vertices) << "\n"
                << "edges     " << edges_line(*res.witness) << "\n";
  }
  const int code = res.found() ? kExitOk : res.status == bp::SearchStatus::not_found ? kExitNegative : kExitBudget;
  return run.finish(rep, code);
}

int cmd_goodsets(const Common& c, const std::string& input, int max_size) {
  Runner run(c);
  bp::RunReport rep{"goodsets", {{"input", input}, {"max_size", max_size}}};
  const auto h = bp::parse_hypergraph(bp::read_file(input));
  const auto longest = bp::longest_berge_path(h, c.budget());
  if (longest.status == bp::SearchStatus::budget_exhausted) {
    rep.result = {{"error", {{"code", "budget-exhausted"}, {"message", "longest Berge path not determined"}}}};
    if (run.human()) std::cerr << "budget exhausted while computing the longest Berge path\n";
    return run.finish(rep, kExitBudget);
  }
  const int ell = longest.length;
  if (ell <= h.r())
    return run.fail(rep, std::string(bp::to_string(bp::errc::precondition_violation)),
                    "good sets need longest Berge path l > r; here l = " + std::to_string(ell) +
                        ", r = " + std::to_string(h.r()));
  const auto good = bp::find_good_sets(h, max_size, ell);
  bp::json good_json = bp::json::array(), very_good = bp::json::array();
  for (const auto& g : good) good_json.push_back(bp::to_json_value(g));
  bp::detail::for_each_subset(h.n(), 2, [&](std::span<const bp::VertexId> s) {
    auto v = bp::is_very_good_pair(h, s, ell);
    if (v.verdict == bp::GoodVerdict::very_good) very_good.push_back(bp::to_json_value(v));
    return true;
  });
  const auto disj = bp::check_good_set_disjunction(h, ell);
  rep.result = {{"ell", ell}, {"good_sets", good_json}, {"very_good_pairs", very_good}, {"disjunction", bp::to_json_value(disj)}};
  if (run.human()) {
    std::cout << "longest Berge path l = " << ell << "\n\n"
              << "good set        |N(S)|  threshold\n";
    for (const auto& g : good)
      std::cout << set_text(g.subset) << std::string(16 - std::min<std::size_t>(15, set_text(g.subset).size()), ' ')
                << g.incident_count << "       " << g.threshold_numerator << "/" << g.threshold_denominator << "\n";
    if (good.empty()) std::cout << "(none)\n";
    std::cout << "\nvery good pairs: " << very_good.size() << "\n"
              << "disjunction: " << (disj.holds ? "holds" : "fails") << ", bullets";
    for (int a : disj.alternatives) std::cout << " " << a;
    if (disj.alternatives.empty()) std::cout << " none";
    std::cout << "\n";
  }
  return run.finish(rep, kExitOk);
}

int cmd_oracle(const Common& c, const std::string& regime, int n, int r, int k, bool no_seed) {
  Runner run(c);
  bp::RunReport rep{"oracle", {{"regime", regime}, {"n", n}, {"r", r}, {"k", k}, {"threads", c.threads}}};
  bp::OracleOptions opts;
  opts.budget = c.budget();
  opts.threads = c.threads;
  opts.seed_incumbent = !no_seed;
  const auto res = regime == "hypergraph" ? bp::turan_oracle(bp::TuranParams(n, r, k), opts)
                   : regime == "cliques"  ? bp::graph_kr_oracle(n, k, r, opts)
                                          : bp::redblue_g_oracle(n, k, r, opts);
  rep.result = bp::to_json_value(res);
  if (run.human()) {
    std::cout << "regime    " << regime << "\n"
              << "best      " << res.best_value << "\n"
              << "status    " << bp::to_string(res.status) << "\n"
              << "nodes     " << res.nodes << "\n"
              << "elapsed   " << res.elapsed.count() << " ms\n"
              << "threads   " << res.threads << "\n\nwitness:\n";
    std::visit([](const auto& g) { std::cout << bp::to_text(g); }, res.witness);
  }
  return run.finish(rep, res.status == bp::OracleStatus::proved ? kExitOk : kExitBudget);
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw bp::error(bp::errc::invalid_parameter, "expected --n <a>..<b>, got '" + text + "'");
  }
}

int cmd_verify(const Common& c, const std::string& regime, int r, int k, const std::string& range) {
  Runner run(c);
  bp::RunReport rep{"verify", {{"regime", regime}, {"r", r}, {"k", k}, {"n", range}, {"threads", c.threads}}};
  auto [lo, hi] = parse_range(range);
  if (lo < 1 || hi < lo) throw bp::error(bp::errc::invalid_parameter, "empty or invalid n range '" + range + "'");
  bp::OracleOptions opts;
  opts.budget = c.budget();
  opts.threads = c.threads;
  const auto reg = regime == "formula" ? bp::VerifyRegime::formula
                   : regime == "cliques" ? bp::VerifyRegime::cliques
                                         : bp::VerifyRegime::redblue;
  const auto res = bp::verify_range(reg, {r, k, lo, hi}, opts);
  rep.result = bp::to_json_value(res);
  if (run.human()) {
    std::printf("%4s %8s %8s %-17s %s\n", "n", "formula", "oracle", "status", "match");
    for (const auto& cell : res.cells) {
      const bool proved = cell.oracle.status == bp::OracleStatus::proved;
      std::printf("%4d %8llu %8llu %-17s %s%s\n", cell.oracle.params.n(),
                  static_cast<unsigned long long>(cell.formula_value),
                  static_cast<unsigned long long>(cell.oracle.best_value),
                  std::string(bp::to_string(cell.oracle.status)).c_str(),
                  proved ? (cell.match ? "yes" : "NO") : "-", cell.formula_claimed ? "" : "  (outside proof range)");
    }
    std::cout << "verdict: " << bp::to_string(res.verdict) << "\n";
  }
  const int code = res.verdict == bp::VerifyVerdict::pass       ? kExitOk
                   : res.verdict == bp::VerifyVerdict::mismatch ? kExitNegative
                                                                : kExitBudget;
  return run.finish(rep, code);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Berge paths in uniform hypergraphs: formulas, constructions, detection, oracles"};
  app.require_subcommand(1);
  Common common;
  int n = 0, r = 0, k = 0, max_size = 3;
  std::string out_path, input, kind = "path", regime, range;
  bool no_seed = false;

  auto add_nrk = [&](CLI::App* cmd, bool need_n) {
    if (need_n) cmd->add_option("-n,--n", n, "Number of vertices")->required();
    cmd->add_option("-r,--r", r, "Uniformity")->required();
    cmd->add_option("-k,--k", k, "Path length")->required();
    cmd->add_flag("--json", common.json, "Emit the JSON report");
  };

  auto* formula = app.add_subcommand("formula", "Exact Turan number of the Berge path");
  add_nrk(formula, true);

  auto* construct = app.add_subcommand("construct", "Extremal construction");
  add_nrk(construct, true);
  construct->add_option("-o,--output", out_path, "Write the hypergraph file here");

  auto* detect = app.add_subcommand("detect", "Find a Berge path or cycle of length k");
  detect->add_option("input", input, "Hypergraph file")->required();
  detect->add_option("-k,--k", k, "Length")->required();
  detect->add_option("--kind", kind, "path or cycle")->check(CLI::IsMember({"path", "cycle"}));
  detect->add_flag("--json", common.json, "Emit the JSON report");
  add_budget_flags(detect, common);

  auto* goodsets = app.add_subcommand("goodsets", "Good sets and the good-set disjunction");
  goodsets->add_option("input", input, "Hypergraph file")->required();
  goodsets->add_option("--max-size", max_size, "Largest subset size")->check(CLI::Range(1, 8));
  goodsets->add_flag("--json", common.json, "Emit the JSON report");
  add_budget_flags(goodsets, common);

  auto* oracle = app.add_subcommand("oracle", "Exact extremal value by branch and bound");
  oracle->add_option("--regime", regime, "hypergraph, cliques or redblue")
      ->required()
      ->check(CLI::IsMember({"hypergraph", "cliques", "redblue"}));
  add_nrk(oracle, true);
  add_budget_flags(oracle, common);
  oracle->add_option("--threads", common.threads, "Worker threads")->check(CLI::Range(1, 256));
  oracle->add_flag("--no-seed", no_seed, "Start from the empty structure instead of the construction");

  auto* verify = app.add_subcommand("verify", "Compare oracle values with the closed forms over a range of n");
  verify->add_option("--regime", regime, "formula, cliques or redblue")
      ->required()
      ->check(CLI::IsMember({"formula", "cliques", "redblue"}));
  add_nrk(verify, false);
  verify->add_option("--n", range, "Vertex range a..b")->required();
  add_budget_flags(verify, common);
  verify->add_option("--threads", common.threads, "Worker threads")->check(CLI::Range(1, 256));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (command == "formula") return cmd_formula(common, n, r, k);
    if (command == "construct") return cmd_construct(common, n, r, k, out_path);
    if (command == "detect") return cmd_detect(common, input, k, kind);
    if (command == "goodsets") return cmd_goodsets(common, input, max_size);
    if (command == "oracle") return cmd_oracle(common, regime, n, r, k, no_seed);
    return cmd_verify(common, regime, r, k, range);
  } catch (const bp::error& e) {
    Runner run(common);
    bp::RunReport rep{command};
    return run.fail(rep, std::string(bp::to_string(e.code())), e.what());
  }
}
