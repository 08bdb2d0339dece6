#pragma once

#include <string>

#include <json.hpp> // vendored nlohmann/json

#include "pst/bounds.hpp"
#include "pst/graph.hpp"
#include "pst/steiner.hpp"

namespace pst {

// {"name": str, "vertices": [str], "edges": [[str,str]]}
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);
Graph load_graph_json(const std::string& path);

std::string graph_to_dot(const Graph& g);

// {"terminals": [str], "trees": [{"edges": [[str,str]], "root": str|null}]}
nlohmann::json packing_to_json(const Graph& g, const Packing& p);
Packing packing_from_json(const Graph& g, const nlohmann::json& j);

// {"ok": bool, "violation": str}
nlohmann::json verdict_to_json(const Verdict& v);

nlohmann::json ledger_to_json(const BoundLedger& ledger);
std::string ledger_to_csv(const BoundLedger& ledger);

// DOT rendering of a packing on its host graph (one color class per tree).
std::string packing_to_dot(const Graph& g, const Packing& p);

} // namespace pst
