#pragma once

// JSON forms of every result type. Needs nlohmann/json (vendored as json.hpp).

#include <json.hpp>

#include <string>
#include <variant>

#include "bergepath/berge.hpp"
#include "bergepath/extremal.hpp"
#include "bergepath/graph.hpp"
#include "bergepath/hypergraph.hpp"
#include "bergepath/search.hpp"
#include "bergepath/structure.hpp"

namespace bergepath {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

inline json to_json_value(const Hyperedge& e) { return json(e.vertices()); }

inline json to_json_value(const Hypergraph& h) {
  json edges = json::array();
  for (const auto& e : h.edges()) edges.push_back(to_json_value(e));
  return {{"type", "hypergraph"}, {"n", h.n()}, {"r", h.r()}, {"edges", std::move(edges)}};
}

namespace detail {

inline json pair_list(const Graph& g) {
  json out = json::array();
  for (auto [u, v] : g.edges()) out.push_back({u, v});
  return out;
}

}  // namespace detail

inline json to_json_value(const Graph& g) { return {{"type", "graph"}, {"n", g.n()}, {"edges", detail::pair_list(g)}}; }

inline json to_json_value(const RedBlueGraph& g) {
  return {{"type", "redblue"}, {"n", g.n()}, {"red", detail::pair_list(g.red())}, {"blue", detail::pair_list(g.blue())}};
}

inline json to_json_value(const OracleWitness& w) {
  return std::visit([](const auto& g) { return to_json_value(g); }, w);
}

inline json to_json_value(const BergeWitness& w) {
  json edges = json::array();
  for (const auto& e : w.edges) edges.push_back(to_json_value(e));
  return {{"kind", std::string(to_string(w.kind))}, {"length", w.length()}, {"vertices", w.vertices}, {"edges", edges}};
}

inline json to_json_value(const TuranParams& p) { return {{"n", p.n()}, {"r", p.r()}, {"k", p.k()}}; }

inline json to_json_value(const GoodSetReport& g) {
  return {{"subset", g.subset},
          {"incident_count", g.incident_count},
          {"threshold", {{"numerator", g.threshold_numerator}, {"denominator", g.threshold_denominator}}},
          {"verdict", std::string(to_string(g.verdict))},
          {"ell", g.ell}};
}

inline json to_json_value(const LemmaReport& rep) {
  json walks = json::array();
  for (const auto& w : rep.witness_walks) walks.push_back(to_json_value(w));
  json out = {{"lemma", std::string(to_string(rep.lemma))},
              {"precondition_ok", rep.precondition_ok},
              {"holds", rep.holds},
              {"alternatives", rep.alternatives},
              {"witness_sets", rep.witness_sets},
              {"witness_walks", std::move(walks)},
              {"detail", rep.detail},
              {"ell", rep.ell},
              {"edge_bound", nullptr}};
  if (rep.edge_bound)
    out["edge_bound"] = {{"lhs", rep.edge_bound->lhs}, {"rhs", rep.edge_bound->rhs}, {"holds", rep.edge_bound->holds}};
  return out;
}

inline json to_json_value(const OracleResult& res) {
  return {{"params", to_json_value(res.params)},
          {"best_value", res.best_value},
          {"witness", to_json_value(res.witness)},
          {"status", std::string(to_string(res.status))},
          {"nodes_explored", res.nodes},
          {"elapsed_ms", res.elapsed.count()},
          {"threads", res.threads}};
}

inline json to_json_value(const VerifyReport& rep) {
  json cells = json::array();
  for (const auto& c : rep.cells)
    cells.push_back({{"n", c.oracle.params.n()},
                     {"formula_value", c.formula_value},
                     {"oracle_value", c.oracle.best_value},
                     {"status", std::string(to_string(c.oracle.status))},
                     {"match", c.oracle.status == OracleStatus::proved ? json(c.match) : json(nullptr)},
                     {"formula_claimed", c.formula_claimed},
                     {"nodes_explored", c.oracle.nodes},
                     {"elapsed_ms", c.oracle.elapsed.count()}});
  return {{"regime", std::string(to_string(rep.regime))},
          {"grid", {{"r", rep.grid.r}, {"k", rep.grid.k}, {"n_min", rep.grid.n_min}, {"n_max", rep.grid.n_max}}},
          {"cells", std::move(cells)},
          {"verdict", std::string(to_string(rep.verdict))}};
}

/// Envelope shared by all CLI commands.
struct RunReport {
  std::string command;
  json params = json::object();
  json result = json::object();
  std::int64_t elapsed_ms = 0;

  json to_json() const {
    return {{"schema_version", kSchemaVersion},
            {"command", command},
            {"params", params},
            {"result", result},
            {"elapsed_ms", elapsed_ms}};
  }
};

}  // namespace bergepath
