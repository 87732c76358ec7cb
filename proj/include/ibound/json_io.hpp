#pragma once

#include <string>

#include <json.hpp>

#include "ibound/certify.hpp"
#include "ibound/graph.hpp"
#include "ibound/independence.hpp"
#include "ibound/search.hpp"
#include "ibound/sym_matrix.hpp"

namespace ibound {

// Key order in emitted documents is fixed, so equal values serialize to
// identical bytes.
using Json = nlohmann::ordered_json;

Json graph_to_json(const Graph& g);
// Accepts {"n":..., "edges":[[u,v],...]} or the shorthand {"paley": q};
// normalizes edge order and validates.
Graph graph_from_json(const Json& j);

// "paley:<q>", "paley:<q>-v<k>" (vertex-deleted), or a path to a JSON file.
Graph parse_graph_spec(const std::string& spec);

Json sym_matrix_to_json(const SymMatrix& m);
// {"n":..., "entries":[[i,j,"p/q"],...]} with i<j; diagonal entries rejected.
SymMatrix sym_matrix_from_json(const Json& j);

// Same wire format, entries restricted to the graph's edges.
Json weight_matrix_to_json(const WeightMatrix& w);
WeightMatrix weight_matrix_from_json(const Graph& g, const Json& j);

Json independence_to_json(const IndependenceResult& r);
Json criticality_to_json(const CriticalityReport& r);

Json certificate_to_json(const NonTightnessCertificate& cert);
NonTightnessCertificate certificate_from_json(const Json& j);

Json search_report_to_json(const SearchReport& r);

Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace ibound
