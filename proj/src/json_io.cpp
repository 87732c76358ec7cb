#include "ibound/json_io.hpp"

#include <fstream>

#include "ibound/paley.hpp"

namespace ibound {

namespace {

std::string edge_key(const Edge& e) {
  return std::to_string(e.first) + "-" + std::to_string(e.second);
}

Edge edge_from_key(const std::string& key) {
  const auto dash = key.find('-');
  if (dash == std::string::npos)
    throw std::invalid_argument("expected edge key 'u-v', got '" + key + "'");
  return make_edge(std::stoi(key.substr(0, dash)), std::stoi(key.substr(dash + 1)));
}

int require_int(const Json& j, const char* what) {
  if (!j.is_number_integer())
    throw std::invalid_argument(std::string("expected integer for ") + what);
  return j.get<int>();
}

}  // namespace

Json graph_to_json(const Graph& g) {
  Json j;
  j["n"] = g.vertex_count();
  j["edges"] = Json::array();
  for (const auto& [u, v] : g.edges()) j["edges"].push_back({u, v});
  return j;
}

Graph graph_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("graph: expected a JSON object");
  if (j.contains("paley")) return paley(require_int(j.at("paley"), "paley"));
  if (!j.contains("n") || !j.contains("edges"))
    throw std::invalid_argument("graph: need keys 'n' and 'edges' (or 'paley')");
  const int n = require_int(j.at("n"), "n");
  std::vector<Edge> edges;
  for (const auto& item : j.at("edges")) {
    if (!item.is_array() || item.size() != 2)
      throw std::invalid_argument("graph: each edge must be a pair [u, v]");
    edges.push_back(make_edge(require_int(item[0], "edge endpoint"),
                              require_int(item[1], "edge endpoint")));
  }
  return Graph(n, std::move(edges));
}

Graph parse_graph_spec(const std::string& spec) {
  if (spec.rfind("paley:", 0) == 0) {
    const std::string rest = spec.substr(6);
    const auto dash = rest.find("-v");
    try {
      if (dash == std::string::npos) return paley(std::stoi(rest));
      const int q = std::stoi(rest.substr(0, dash));
      const int v = std::stoi(rest.substr(dash + 2));
      return delete_vertex(paley(q), v).graph;
    } catch (const std::logic_error&) {
      throw std::invalid_argument("cannot parse graph spec '" + spec +
                                  "'; expected paley:<q> or paley:<q>-v<k>");
    }
  }
  return graph_from_json(load_json_file(spec));
}

Json sym_matrix_to_json(const SymMatrix& m) {
  Json j;
  j["n"] = m.order();
  j["entries"] = Json::array();
  for (int i = 0; i < m.order(); ++i)
    for (int k = i; k < m.order(); ++k)
      if (!m.get(i, k).is_zero()) j["entries"].push_back({i, k, m.get(i, k).str()});
  return j;
}

namespace {

template <typename Setter>
void read_entries(const Json& j, Setter&& set) {
  if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
    throw std::invalid_argument("matrix: need keys 'n' and 'entries'");
  for (const auto& item : j.at("entries")) {
    if (!item.is_array() || item.size() != 3)
      throw std::invalid_argument("matrix: each entry must be [i, j, \"p/q\"]");
    const int a = require_int(item[0], "row");
    const int b = require_int(item[1], "column");
    if (!item[2].is_string())
      throw std::invalid_argument("matrix: values must be exact rational strings");
    if (a >= b)
      throw std::invalid_argument("matrix: entries must have i < j (diagonal forbidden)");
    set(a, b, Rational::from_string(item[2].get<std::string>()));
  }
}

}  // namespace

SymMatrix sym_matrix_from_json(const Json& j) {
  SymMatrix m(require_int(j.at("n"), "n"));
  read_entries(j, [&](int a, int b, Rational v) { m.set(a, b, std::move(v)); });
  return m;
}

Json weight_matrix_to_json(const WeightMatrix& w) {
  Json j;
  j["n"] = w.graph().vertex_count();
  j["entries"] = Json::array();
  const auto& edges = w.graph().edges();
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (!w.weight_by_index(static_cast<int>(i)).is_zero())
      j["entries"].push_back({edges[i].first, edges[i].second,
                              w.weight_by_index(static_cast<int>(i)).str()});
  return j;
}

WeightMatrix weight_matrix_from_json(const Graph& g, const Json& j) {
  if (require_int(j.at("n"), "n") != g.vertex_count())
    throw std::invalid_argument("weight matrix: order differs from the graph");
  WeightMatrix w(g);
  read_entries(j, [&](int a, int b, Rational v) { w.set_weight(a, b, std::move(v)); });
  return w;
}

Json independence_to_json(const IndependenceResult& r) {
  Json j;
  j["alpha"] = r.alpha;
  j["witness"] = r.witness;
  return j;
}

Json criticality_to_json(const CriticalityReport& r) {
  Json j;
  j["critical"] = r.is_critical;
  j["witnesses"] = Json::object();
  for (const auto& [edge, witness] : r.per_edge) j["witnesses"][edge_key(edge)] = witness;
  return j;
}

Json certificate_to_json(const NonTightnessCertificate& cert) {
  Json j;
  j["graph"] = graph_to_json(cert.graph);
  j["alpha"] = cert.alpha;
  j["critical_witnesses"] = Json::object();
  for (const auto& [edge, witness] : cert.critical_witnesses)
    j["critical_witnesses"][edge_key(edge)] = witness;
  j["gadgets"] = Json::array();
  for (const auto& gadget : cert.gadgets) {
    Json item;
    item["vertices"] = gadget.image_vertices;
    item["odd_support"] = Json::array();
    for (const auto& [u, v] : gadget.odd_support) item["odd_support"].push_back({u, v});
    item["const_negative"] = gadget.const_negative ? 1 : 0;
    j["gadgets"].push_back(std::move(item));
  }
  j["farkas_rows"] = cert.farkas_rows;
  return j;
}

NonTightnessCertificate certificate_from_json(const Json& j) {
  NonTightnessCertificate cert;
  cert.graph = graph_from_json(j.at("graph"));
  cert.alpha = require_int(j.at("alpha"), "alpha");
  for (const auto& [key, witness] : j.at("critical_witnesses").items())
    cert.critical_witnesses[edge_from_key(key)] = witness.get<std::vector<int>>();
  for (const auto& item : j.at("gadgets")) {
    GadgetCopy gadget;
    gadget.image_vertices = item.at("vertices").get<std::vector<int>>();
    gadget.mapping = gadget.image_vertices;
    for (const auto& e : item.at("odd_support"))
      gadget.odd_support.push_back(make_edge(require_int(e[0], "odd support endpoint"),
                                             require_int(e[1], "odd support endpoint")));
    gadget.const_negative = require_int(item.at("const_negative"), "const_negative") != 0;
    cert.gadgets.push_back(std::move(gadget));
  }
  cert.farkas_rows = j.at("farkas_rows").get<std::vector<int>>();
  return cert;
}

Json search_report_to_json(const SearchReport& r) {
  Json j;
  j["best_gap"] = r.gap;
  j["bound"] = r.bound;
  j["alpha"] = r.alpha;
  j["inertia"] = {r.best_inertia.n_plus, r.best_inertia.n_minus, r.best_inertia.n_zero};
  if (r.weights) {
    Json w = Json::object();
    for (const auto& [cls, weight] : r.weights->weights) w[std::to_string(cls)] = weight;
    j["weights"] = std::move(w);
  }
  if (r.edge_weights) j["matrix"] = *r.edge_weights;
  j["seed"] = r.seed;
  j["iterations"] = r.iterations;
  return j;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument("malformed JSON in '" + path + "': " + e.what());
  }
  return j;
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open file '" + path + "' for writing");
  out << j.dump(2) << "\n";
}

}  // namespace ibound
