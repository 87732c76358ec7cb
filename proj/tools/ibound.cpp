// ibound: inertia bounds, exact inertia, and non-tightness certificates for
// graph independence numbers.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "ibound/certify.hpp"
#include "ibound/edge_polynomial.hpp"
#include "ibound/errors.hpp"
#include "ibound/independence.hpp"
#include "ibound/json_io.hpp"
#include "ibound/paley.hpp"
#include "ibound/search.hpp"
#include "ibound/subgraph.hpp"

namespace {

using namespace ibound;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitBudget = 2;

void emit(const Json& j, bool as_json, const std::string& human) {
  if (as_json) std::cout << j.dump(2) << "\n";
  else std::cout << human << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"Exact inertia bounds and non-tightness certificates"};
  app.require_subcommand(1);
  bool as_json = false;
  int threads = 1;
  app.add_flag("--json", as_json, "machine-readable output");
  app.add_option("--threads", threads, "worker threads for parallel scans")
      ->default_val(1);

  std::string graph_spec, matrix_path, cert_path, out_path;
  int q = 0;

  auto* cmd_paley = app.add_subcommand("paley", "emit the Paley graph P(q) as JSON");
  cmd_paley->add_option("q", q, "prime, q = 1 mod 4")->required();

  auto* cmd_alpha = app.add_subcommand("alpha", "independence number with witness");
  cmd_alpha->add_option("graph", graph_spec)->required();

  auto* cmd_critical = app.add_subcommand("critical", "alpha-criticality report");
  cmd_critical->add_option("graph", graph_spec)->required();

  auto* cmd_inertia = app.add_subcommand("inertia", "exact inertia of a matrix file");
  cmd_inertia->add_option("matrix", matrix_path)->required();

  auto* cmd_bound = app.add_subcommand("bound", "inertia bound of a weight matrix");
  cmd_bound->add_option("graph", graph_spec)->required();
  cmd_bound->add_option("matrix", matrix_path)->required();

  auto* cmd_triangles = app.add_subcommand("triangles", "triangle census");
  cmd_triangles->add_option("graph", graph_spec)->required();

  auto* cmd_gadgets = app.add_subcommand("gadgets", "monomial-determinant gadget scan");
  cmd_gadgets->add_option("graph", graph_spec)->required();

  auto* cmd_certify =
      app.add_subcommand("certify", "decide NOT_TIGHT / UNKNOWN for the inertia bound");
  cmd_certify->add_option("graph", graph_spec)->required();
  cmd_certify->add_option("-o,--output", out_path, "write the certificate JSON here");

  auto* cmd_verify = app.add_subcommand("verify", "re-check a certificate from scratch");
  cmd_verify->add_option("graph", graph_spec)->required();
  cmd_verify->add_option("certificate", cert_path)->required();

  int range_lo = -32, range_hi = 32;
  auto* cmd_grid =
      app.add_subcommand("search-circulant", "exhaustive circulant class weightings");
  cmd_grid->add_option("q", q)->required();
  std::string range_text = "-32..32";
  cmd_grid->add_option("--range", range_text, "weight range lo..hi")
      ->default_val("-32..32");

  long iterations = 10000;
  std::uint64_t seed = 1;
  bool hill_climb = false;
  auto* cmd_random = app.add_subcommand("search-random", "random edge-weight search");
  cmd_random->add_option("graph", graph_spec)->required();
  cmd_random->add_option("--iters", iterations)->default_val(10000);
  cmd_random->add_option("--seed", seed)->default_val(1);
  cmd_random->add_flag("--hill-climb", hill_climb, "greedy single-edge improvement pass");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*cmd_paley) {
      std::cout << graph_to_json(paley(q)).dump(2) << "\n";
      return kExitOk;
    }
    if (*cmd_alpha) {
      const auto result = independence_number(parse_graph_spec(graph_spec));
      emit(independence_to_json(result), as_json,
           "alpha = " + std::to_string(result.alpha) + ", witness " +
               Json(result.witness).dump());
      return kExitOk;
    }
    if (*cmd_critical) {
      const auto report = is_alpha_critical(parse_graph_spec(graph_spec));
      emit(criticality_to_json(report), as_json,
           report.is_critical ? "alpha-critical (witnesses for all edges recorded)"
                              : "not alpha-critical");
      return kExitOk;
    }
    if (*cmd_inertia) {
      const SymMatrix m = sym_matrix_from_json(load_json_file(matrix_path));
      const Inertia in = inertia(m);
      emit(Json{{"inertia", {in.n_plus, in.n_minus, in.n_zero}}}, as_json,
           format_inertia(in));
      return kExitOk;
    }
    if (*cmd_bound) {
      const Graph g = parse_graph_spec(graph_spec);
      const WeightMatrix w = weight_matrix_from_json(g, load_json_file(matrix_path));
      const Inertia in = inertia(w.to_matrix());
      const int bound = bound_from_inertia(in, g.vertex_count());
      emit(Json{{"bound", bound}, {"inertia", {in.n_plus, in.n_minus, in.n_zero}}},
           as_json,
           "bound = " + std::to_string(bound) + "  inertia " + format_inertia(in));
      return kExitOk;
    }
    if (*cmd_triangles) {
      const Graph g = parse_graph_spec(graph_spec);
      const auto tris = triangles(g);
      Json j;
      j["count"] = tris.size();
      j["triangles"] = Json::array();
      for (const auto& t : tris) j["triangles"].push_back({t[0], t[1], t[2]});
      emit(j, as_json, std::to_string(tris.size()) + " triangles");
      return kExitOk;
    }
    if (*cmd_gadgets) {
      const Graph g = parse_graph_spec(graph_spec);
      const int alpha = independence_number(g).alpha;
      const auto gadgets = enumerate_gadgets(g, alpha, threads);
      Json j;
      j["alpha"] = alpha;
      j["count"] = gadgets.size();
      j["gadgets"] = Json::array();
      for (const auto& gadget : gadgets) {
        Json item;
        item["vertices"] = gadget.image_vertices;
        item["odd_support"] = Json::array();
        for (const auto& [u, v] : gadget.odd_support)
          item["odd_support"].push_back({u, v});
        item["const_negative"] = gadget.const_negative ? 1 : 0;
        j["gadgets"].push_back(std::move(item));
      }
      emit(j, as_json,
           std::to_string(gadgets.size()) + " gadgets on 2*" + std::to_string(alpha) +
               "+1 vertices");
      return kExitOk;
    }
    if (*cmd_certify) {
      const Graph g = parse_graph_spec(graph_spec);
      const Verdict verdict = certify_not_tight(g, threads);
      if (verdict.not_tight() && !out_path.empty())
        write_json_file(out_path, certificate_to_json(*verdict.certificate));
      if (as_json) {
        Json j;
        j["verdict"] = verdict.not_tight() ? "NOT_TIGHT" : "UNKNOWN";
        if (!verdict.not_tight()) j["reason"] = verdict.reason;
        if (verdict.certificate) j["certificate"] = certificate_to_json(*verdict.certificate);
        if (verdict.feasible_signs) {
          Json signs = Json::array();
          for (std::size_t i = 0; i < g.edges().size(); ++i)
            signs.push_back({g.edges()[i].first, g.edges()[i].second,
                             verdict.feasible_signs->bits[i] ? -1 : 1});
          j["feasible_sign_class"] = std::move(signs);
        }
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << format_verdict(verdict) << "\n";
        if (verdict.not_tight() && !out_path.empty())
          std::cout << "certificate written to " << out_path << "\n";
      }
      return kExitOk;
    }
    if (*cmd_verify) {
      const Graph g = parse_graph_spec(graph_spec);
      const auto cert = certificate_from_json(load_json_file(cert_path));
      const auto result = verify_certificate(g, cert);
      emit(Json{{"ok", result.ok}, {"reason", result.reason}}, as_json,
           result.ok ? "certificate OK" : "certificate REJECTED: " + result.reason);
      return result.ok ? kExitOk : kExitInputError;
    }
    if (*cmd_grid) {
      const auto dots = range_text.find("..");
      if (dots == std::string::npos)
        throw std::invalid_argument("range must look like lo..hi, got '" + range_text +
                                    "'");
      range_lo = std::stoi(range_text.substr(0, dots));
      range_hi = std::stoi(range_text.substr(dots + 2));
      const PaleyParams params = paley_params(q);
      const GridSearchResult result =
          grid_search_circulant(params, range_lo, range_hi, 20'000'000, threads);
      Json j = search_report_to_json(result.best);
      j["evaluated"] = result.evaluated;
      j["partial"] = result.partial;
      j["argmin_count"] = result.argmin_weightings.size();
      emit(j, as_json,
           "best bound " + std::to_string(result.best.bound) + " (gap " +
               std::to_string(result.best.gap) + ") over " +
               std::to_string(result.evaluated) + " weightings" +
               (result.partial ? " [PARTIAL: budget exceeded]" : ""));
      return result.partial ? kExitBudget : kExitOk;
    }
    if (*cmd_random) {
      const Graph g = parse_graph_spec(graph_spec);
      const int alpha = independence_number(g).alpha;
      const SearchReport report =
          random_edge_search(g, alpha, iterations, seed, hill_climb);
      emit(search_report_to_json(report), as_json,
           "best bound " + std::to_string(report.bound) + " (gap " +
               std::to_string(report.gap) + ") after " + std::to_string(iterations) +
               " iterations");
      return kExitOk;
    }
  } catch (const budget_error& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
