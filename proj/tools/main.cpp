// dense-anchor command line tool. Talks to the library exclusively through
// the C API in dense_anchor.h.
//
// Exit codes: 0 success/feasible, 2 usage error, 3 infeasible, 4 input error.

#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dense_anchor.h"
#include "json.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitInput = 4;

struct GraphDeleter {
  void operator()(da_graph* g) const { da_graph_free(g); }
};
struct ResultDeleter {
  void operator()(da_result* r) const { da_result_free(r); }
};
struct ReportDeleter {
  void operator()(da_report* r) const { da_report_free(r); }
};
using GraphPtr = std::unique_ptr<da_graph, GraphDeleter>;
using ResultPtr = std::unique_ptr<da_result, ResultDeleter>;
using ReportPtr = std::unique_ptr<da_report, ReportDeleter>;

struct WeightFlags {
  bool weighted = false;
  bool unweighted = false;

  da_weight_mode mode() const {
    if (weighted) return DA_WEIGHTS_WEIGHTED;
    if (unweighted) return DA_WEIGHTS_UNWEIGHTED;
    return DA_WEIGHTS_AUTO;
  }
};

void add_weight_flags(CLI::App* cmd, WeightFlags* flags) {
  auto* w = cmd->add_flag("--weighted", flags->weighted,
                          "require a weight column on every edge line");
  auto* u = cmd->add_flag("--unweighted", flags->unweighted,
                          "forbid weight columns; every edge gets weight 1");
  w->excludes(u);
}

GraphPtr load_graph_or_exit(const std::string& path, da_weight_mode mode) {
  da_graph* raw = nullptr;
  if (da_graph_load_path(path.c_str(), mode, &raw) != DA_OK) {
    std::cerr << "error: " << da_last_error() << "\n";
    std::exit(kExitInput);
  }
  GraphPtr graph(raw);
  for (uint32_t i = 0; i < da_graph_warning_count(graph.get()); ++i) {
    std::cerr << "warning: " << da_graph_warning(graph.get(), i) << "\n";
  }
  return graph;
}

std::vector<uint32_t> result_vertices(const da_result* result) {
  std::vector<uint32_t> ids(da_result_size(result));
  if (!ids.empty()) da_result_vertices(result, ids.data(), ids.size());
  return ids;
}

nlohmann::ordered_json vertex_labels(const da_graph* graph,
                                     const std::vector<uint32_t>& ids) {
  nlohmann::ordered_json labels = nlohmann::ordered_json::array();
  for (uint32_t v : ids) labels.push_back(da_graph_vertex_label(graph, v));
  return labels;
}

int run_stats(const std::string& path, const WeightFlags& weights, bool greedy,
              bool json_output) {
  GraphPtr graph = load_graph_or_exit(path, weights.mode());

  da_result* raw_result = nullptr;
  if (da_densest_subgraph(graph.get(), greedy ? 1 : 0, &raw_result) != DA_OK) {
    std::cerr << "error: " << da_last_error() << "\n";
    return kExitInput;
  }
  ResultPtr result(raw_result);
  auto ids = result_vertices(result.get());

  da_report* raw_report = nullptr;
  if (da_report_compute(graph.get(), ids.data(), ids.size(), &raw_report) != DA_OK) {
    std::cerr << "error: " << da_last_error() << "\n";
    return kExitInput;
  }
  ReportPtr report(raw_report);

  if (json_output) {
    nlohmann::ordered_json out;
    out["set_size"] = ids.size();
    out["edge_count"] = da_report_edge_count(report.get());
    out["density"] = {{"fraction", da_report_density_fraction(report.get())},
                      {"decimal", da_report_density_decimal(report.get())}};
    out["kappa"] = da_report_kappa(report.get());
    out["lambda"] = {{"fraction", da_report_lambda_fraction(report.get())},
                     {"decimal", da_report_lambda_decimal(report.get())}};
    out["min_degree"] = {{"fraction", da_report_min_degree_fraction(report.get())},
                         {"decimal", da_report_min_degree_decimal(report.get())}};
    out["vertices"] = vertex_labels(graph.get(), ids);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "set_size\tedge_count\tdensity\tdensity_exact\tkappa\tlambda\t"
                 "lambda_exact\tmin_degree\tmin_degree_exact\n";
    std::cout << ids.size() << '\t' << da_report_edge_count(report.get()) << '\t'
              << da_report_density_decimal(report.get()) << '\t'
              << da_report_density_fraction(report.get()) << '\t'
              << da_report_kappa(report.get()) << '\t'
              << da_report_lambda_decimal(report.get()) << '\t'
              << da_report_lambda_fraction(report.get()) << '\t'
              << da_report_min_degree_decimal(report.get()) << '\t'
              << da_report_min_degree_fraction(report.get()) << '\n';
  }
  return kExitOk;
}

int run_solve(const std::string& path, const WeightFlags& weights,
              const std::string& mode, const std::string& algorithm,
              const std::string& k, const std::string& gamma) {
  GraphPtr graph = load_graph_or_exit(path, weights.mode());

  da_problem_mode problem_mode = mode == "vertex" ? DA_MODE_VERTEX : DA_MODE_EDGE;
  da_algorithm algo =
      algorithm == "matula" ? DA_ALGORITHM_MATULA : DA_ALGORITHM_BICRITERIA;

  da_result* raw = nullptr;
  const char* gamma_arg =
      algo == DA_ALGORITHM_BICRITERIA ? gamma.c_str() : nullptr;
  da_status status =
      da_solve(graph.get(), problem_mode, algo, k.c_str(), gamma_arg, &raw);
  if (status == DA_ERROR_INVALID_ARGUMENT || status == DA_ERROR_PARSE ||
      status == DA_ERROR_VALIDATION) {
    std::cerr << "error: " << da_last_error() << "\n";
    return kExitUsage;
  }
  if (status != DA_OK) {
    std::cerr << "error: " << da_last_error() << "\n";
    return kExitInput;
  }
  ResultPtr result(raw);

  nlohmann::ordered_json out;
  bool feasible = da_result_feasible(result.get()) != 0;
  out["status"] = feasible ? "FEASIBLE" : "INFEASIBLE";
  out["mode"] = mode;
  out["algorithm"] = algorithm;
  out["k"] = k;
  if (algo == DA_ALGORITHM_BICRITERIA) out["gamma"] = gamma;
  if (feasible) {
    auto ids = result_vertices(result.get());
    out["size"] = ids.size();
    out["vertices"] = vertex_labels(graph.get(), ids);
    out["density"] = {{"fraction", da_result_density_fraction(result.get())},
                      {"decimal", da_result_density_decimal(result.get())}};
    out["connectivity"] = {
        {"fraction", da_result_connectivity_fraction(result.get())},
        {"decimal", da_result_connectivity_decimal(result.get())}};
  }
  out["guarantee"] = {
      {"density_ratio",
       {{"fraction", da_result_guarantee_density_ratio(result.get())},
        {"decimal", da_result_guarantee_density_ratio_decimal(result.get())}}},
      {"connectivity_ratio",
       {{"fraction", da_result_guarantee_connectivity_ratio(result.get())},
        {"decimal", da_result_guarantee_connectivity_ratio_decimal(result.get())}}},
      {"method", da_result_method(result.get())}};
  std::cout << out.dump(2) << "\n";
  return feasible ? kExitOk : kExitInfeasible;
}

int run_export(const std::string& path, const WeightFlags& weights, bool dot,
               const std::string& subset_path) {
  GraphPtr graph = load_graph_or_exit(path, weights.mode());

  std::vector<uint32_t> highlight;
  if (!subset_path.empty()) {
    std::ifstream in(subset_path);
    if (!in) {
      std::cerr << "error: cannot open subset file '" << subset_path << "'\n";
      return kExitInput;
    }
    std::vector<std::string> unknown;
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      std::size_t first = line.find_first_not_of(" \t");
      if (first == std::string::npos || line[first] == '#') continue;
      std::size_t last = line.find_last_not_of(" \t");
      std::string label = line.substr(first, last - first + 1);
      uint32_t id = 0;
      if (da_graph_vertex_by_label(graph.get(), label.c_str(), &id) == DA_OK) {
        highlight.push_back(id);
      } else {
        unknown.push_back(label);
      }
    }
    if (!unknown.empty()) {
      std::cerr << "error: unknown labels in subset file:";
      for (const auto& label : unknown) std::cerr << " '" << label << "'";
      std::cerr << "\n";
      return kExitInput;
    }
  }

  char* text = nullptr;
  da_status status =
      dot ? da_graph_export_dot(graph.get(), highlight.data(), highlight.size(),
                                &text)
          : da_graph_export_edgelist(graph.get(), &text);
  if (status != DA_OK) {
    std::cerr << "error: " << da_last_error() << "\n";
    return kExitInput;
  }
  std::cout << text;
  da_string_free(text);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dense-anchor: dense subgraphs with vertex/edge connectivity "
               "guarantees"};
  app.require_subcommand(1);

  auto* stats = app.add_subcommand(
      "stats", "densest-subgraph statistics (size, edges, density, kappa, "
               "lambda, min degree)");
  bool greedy = false;
  bool stats_json = false;
  WeightFlags stats_weights;
  std::string stats_path;
  stats->add_option("graph", stats_path, "edge list file")->required();
  stats->add_flag("--greedy", greedy, "use the greedy 1/2-approximation");
  stats->add_flag("--json", stats_json, "emit JSON instead of TSV");
  add_weight_flags(stats, &stats_weights);

  auto* solve = app.add_subcommand(
      "solve", "densest k-vertex/edge-connected subgraph approximation");
  std::string solve_path;
  std::string mode;
  std::string algorithm = "bicriteria";
  std::string k_text;
  std::string gamma_text = "1";
  WeightFlags solve_weights;
  solve->add_option("graph", solve_path, "edge list file")->required();
  solve->add_option("--mode", mode, "vertex or edge")
      ->required()
      ->check(CLI::IsMember({"vertex", "edge"}));
  solve->add_option("--k", k_text, "connectivity bound (integer for vertex mode)")
      ->required();
  auto* gamma_opt = solve->add_option(
      "--gamma", gamma_text, "relaxation in [1,2], bicriteria only (default 1)");
  solve->add_option("--algorithm", algorithm, "bicriteria (default) or matula")
      ->check(CLI::IsMember({"bicriteria", "matula"}));
  add_weight_flags(solve, &solve_weights);

  auto* exporter = app.add_subcommand("export", "canonical edge list or DOT");
  std::string export_path;
  std::string subset_path;
  bool dot = false;
  bool edgelist = false;
  WeightFlags export_weights;
  exporter->add_option("graph", export_path, "edge list file")->required();
  auto* dot_flag = exporter->add_flag("--dot", dot, "Graphviz DOT output");
  auto* el_flag =
      exporter->add_flag("--edgelist", edgelist, "canonical edge list (default)");
  dot_flag->excludes(el_flag);
  exporter->add_option("--subset", subset_path,
                       "file of vertex labels to highlight (DOT only)");
  add_weight_flags(exporter, &export_weights);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  if (stats->parsed()) {
    return run_stats(stats_path, stats_weights, greedy, stats_json);
  }
  if (solve->parsed()) {
    if (algorithm == "matula" && gamma_opt->count() > 0) {
      std::cerr << "error: --gamma applies to the bicriteria solver only\n";
      return kExitUsage;
    }
    return run_solve(solve_path, solve_weights, mode, algorithm, k_text,
                     gamma_text);
  }
  if (exporter->parsed()) {
    if (!subset_path.empty() && !dot) {
      std::cerr << "error: --subset requires --dot\n";
      return kExitUsage;
    }
    return run_export(export_path, export_weights, dot, subset_path);
  }
  return kExitUsage;
}
