#include "dense_anchor.h"

#include <cstring>
#include <optional>
#include <sstream>
#include <string>

#include "danchor/connectivity.hpp"
#include "danchor/densest.hpp"
#include "danchor/error.hpp"
#include "danchor/graph.hpp"
#include "danchor/io.hpp"
#include "danchor/solvers.hpp"

using danchor::Rational;
using danchor::VertexSet;

namespace {

thread_local std::string g_last_error;

da_status fail(da_status code, const std::string& message) {
  g_last_error = message;
  return code;
}

template <typename Fn>
da_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const danchor::ParseError& e) {
    return fail(DA_ERROR_PARSE, e.what());
  } catch (const danchor::ValidationError& e) {
    return fail(DA_ERROR_VALIDATION, e.what());
  } catch (const danchor::DomainError& e) {
    return fail(DA_ERROR_DOMAIN, e.what());
  } catch (const danchor::OverflowError& e) {
    return fail(DA_ERROR_OVERFLOW, e.what());
  } catch (const danchor::BudgetError& e) {
    return fail(DA_ERROR_BUDGET, e.what());
  } catch (const danchor::InternalError& e) {
    return fail(DA_ERROR_INTERNAL, e.what());
  } catch (const std::exception& e) {
    return fail(DA_ERROR_IO, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

struct da_graph {
  danchor::WeightedGraph graph;
  std::vector<std::string> warnings;
};

struct da_result {
  bool feasible = false;
  std::vector<uint32_t> vertices;
  std::string density_fraction;
  std::string density_decimal;
  std::string connectivity_fraction;
  std::string connectivity_decimal;
  std::string guarantee_density_ratio;
  std::string guarantee_density_ratio_decimal;
  std::string guarantee_connectivity_ratio;
  std::string guarantee_connectivity_ratio_decimal;
  std::string method;
};

struct da_report {
  uint64_t edge_count = 0;
  std::string density_fraction;
  std::string density_decimal;
  uint32_t kappa = 0;
  std::string lambda_fraction;
  std::string lambda_decimal;
  std::string min_degree_fraction;
  std::string min_degree_decimal;
};

extern "C" {

const char* da_version(void) { return "1.0.0"; }

const char* da_last_error(void) { return g_last_error.c_str(); }

da_status da_graph_load_path(const char* path, da_weight_mode mode,
                             da_graph** out) {
  if (!path || !out) return fail(DA_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&]() -> da_status {
    auto weight_mode = mode == DA_WEIGHTS_UNWEIGHTED ? danchor::WeightMode::kUnweighted
                       : mode == DA_WEIGHTS_WEIGHTED ? danchor::WeightMode::kWeighted
                                                     : danchor::WeightMode::kAuto;
    auto loaded = danchor::load_edge_list_file(path, weight_mode);
    *out = new da_graph{std::move(loaded.graph), std::move(loaded.warnings)};
    return DA_OK;
  });
}

da_status da_graph_load_string(const char* text, da_weight_mode mode,
                               da_graph** out) {
  if (!text || !out) return fail(DA_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&]() -> da_status {
    auto weight_mode = mode == DA_WEIGHTS_UNWEIGHTED ? danchor::WeightMode::kUnweighted
                       : mode == DA_WEIGHTS_WEIGHTED ? danchor::WeightMode::kWeighted
                                                     : danchor::WeightMode::kAuto;
    std::istringstream in{std::string(text)};
    auto loaded = danchor::load_edge_list(in, weight_mode);
    *out = new da_graph{std::move(loaded.graph), std::move(loaded.warnings)};
    return DA_OK;
  });
}

void da_graph_free(da_graph* graph) { delete graph; }

uint32_t da_graph_vertex_count(const da_graph* graph) {
  return graph->graph.vertex_count();
}

uint64_t da_graph_edge_count(const da_graph* graph) {
  return graph->graph.edge_count();
}

uint32_t da_graph_warning_count(const da_graph* graph) {
  return static_cast<uint32_t>(graph->warnings.size());
}

const char* da_graph_warning(const da_graph* graph, uint32_t index) {
  if (index >= graph->warnings.size()) return "";
  return graph->warnings[index].c_str();
}

const char* da_graph_vertex_label(const da_graph* graph, uint32_t vertex) {
  if (vertex >= graph->graph.vertex_count()) return "";
  return graph->graph.label(vertex).c_str();
}

da_status da_graph_vertex_by_label(const da_graph* graph, const char* label,
                                   uint32_t* out) {
  if (!graph || !label || !out) {
    return fail(DA_ERROR_INVALID_ARGUMENT, "null argument");
  }
  for (uint32_t v = 0; v < graph->graph.vertex_count(); ++v) {
    if (graph->graph.label(v) == label) {
      *out = v;
      return DA_OK;
    }
  }
  return fail(DA_ERROR_NOT_FOUND, std::string("unknown vertex label '") + label + "'");
}

da_status da_graph_export_edgelist(const da_graph* graph, char** out) {
  if (!graph || !out) return fail(DA_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&]() -> da_status {
    *out = copy_string(danchor::export_edge_list(graph->graph));
    return DA_OK;
  });
}

da_status da_graph_export_dot(const da_graph* graph, const uint32_t* highlight,
                              size_t highlight_len, char** out) {
  if (!graph || !out || (highlight_len > 0 && !highlight)) {
    return fail(DA_ERROR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&]() -> da_status {
    std::optional<VertexSet> subset;
    if (highlight_len > 0) {
      std::vector<danchor::VertexId> ids;
      for (size_t i = 0; i < highlight_len; ++i) {
        if (highlight[i] >= graph->graph.vertex_count()) {
          return fail(DA_ERROR_INVALID_ARGUMENT, "highlight vertex out of range");
        }
        ids.push_back(highlight[i]);
      }
      subset = VertexSet(std::move(ids));
    }
    *out = copy_string(danchor::export_dot(graph->graph,
                                           subset ? &*subset : nullptr));
    return DA_OK;
  });
}

void da_string_free(char* text) { delete[] text; }

da_status da_densest_subgraph(const da_graph* graph, int use_greedy,
                              da_result** out) {
  if (!graph || !out) return fail(DA_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&]() -> da_status {
    auto res = use_greedy ? danchor::densest_greedy(graph->graph)
                          : danchor::densest_exact(graph->graph);
    auto* r = new da_result;
    r->feasible = true;
    r->vertices.assign(res.subset.begin(), res.subset.end());
    r->density_fraction = res.density.to_fraction_string();
    r->density_decimal = res.density.to_decimal_string(2);
    r->method = use_greedy ? "densest-greedy" : "densest-exact";
    *out = r;
    return DA_OK;
  });
}

da_status da_solve(const da_graph* graph, da_problem_mode mode,
                   da_algorithm algorithm, const char* k, const char* gamma,
                   da_result** out) {
  if (!graph || !k || !out) return fail(DA_ERROR_INVALID_ARGUMENT, "null argument");
  if (algorithm == DA_ALGORITHM_MATULA && gamma) {
    return fail(DA_ERROR_INVALID_ARGUMENT, "gamma applies to the bicriteria solver only");
  }
  return guarded([&]() -> da_status {
    danchor::ProblemSpec spec;
    spec.mode = mode == DA_MODE_VERTEX ? danchor::ProblemMode::kVertex
                                       : danchor::ProblemMode::kEdge;
    spec.k = Rational::parse(k);
    if (!spec.k.is_positive()) {
      return fail(DA_ERROR_INVALID_ARGUMENT, "k must be positive");
    }
    if (spec.mode == danchor::ProblemMode::kVertex && !spec.k.is_integer()) {
      return fail(DA_ERROR_INVALID_ARGUMENT, "vertex mode requires an integer k");
    }
    spec.gamma = gamma ? Rational::parse(gamma) : Rational(1);
    auto outcome =
        danchor::solve(graph->graph, spec, algorithm == DA_ALGORITHM_BICRITERIA);
    auto* r = new da_result;
    r->feasible = outcome.feasible();
    r->method = outcome.guarantee.method;
    r->guarantee_density_ratio = outcome.guarantee.density_ratio.to_fraction_string();
    r->guarantee_density_ratio_decimal =
        outcome.guarantee.density_ratio.to_decimal_string(2);
    r->guarantee_connectivity_ratio =
        outcome.guarantee.connectivity_ratio.to_fraction_string();
    r->guarantee_connectivity_ratio_decimal =
        outcome.guarantee.connectivity_ratio.to_decimal_string(2);
    if (outcome.feasible()) {
      r->vertices.assign(outcome.subset->begin(), outcome.subset->end());
      r->density_fraction = outcome.density->to_fraction_string();
      r->density_decimal = outcome.density->to_decimal_string(2);
      r->connectivity_fraction = outcome.achieved_connectivity->to_fraction_string();
      r->connectivity_decimal = outcome.achieved_connectivity->to_decimal_string(2);
    }
    *out = r;
    return DA_OK;
  });
}

int da_result_feasible(const da_result* result) { return result->feasible ? 1 : 0; }

size_t da_result_size(const da_result* result) { return result->vertices.size(); }

da_status da_result_vertices(const da_result* result, uint32_t* buffer,
                             size_t buffer_len) {
  if (!result || (!buffer && buffer_len > 0)) {
    return fail(DA_ERROR_INVALID_ARGUMENT, "null argument");
  }
  if (buffer_len < result->vertices.size()) {
    return fail(DA_ERROR_INVALID_ARGUMENT, "buffer too small");
  }
  std::copy(result->vertices.begin(), result->vertices.end(), buffer);
  return DA_OK;
}

const char* da_result_density_fraction(const da_result* r) {
  return r->density_fraction.c_str();
}
const char* da_result_density_decimal(const da_result* r) {
  return r->density_decimal.c_str();
}
const char* da_result_connectivity_fraction(const da_result* r) {
  return r->connectivity_fraction.c_str();
}
const char* da_result_connectivity_decimal(const da_result* r) {
  return r->connectivity_decimal.c_str();
}
const char* da_result_guarantee_density_ratio(const da_result* r) {
  return r->guarantee_density_ratio.c_str();
}
const char* da_result_guarantee_density_ratio_decimal(const da_result* r) {
  return r->guarantee_density_ratio_decimal.c_str();
}
const char* da_result_guarantee_connectivity_ratio(const da_result* r) {
  return r->guarantee_connectivity_ratio.c_str();
}
const char* da_result_guarantee_connectivity_ratio_decimal(const da_result* r) {
  return r->guarantee_connectivity_ratio_decimal.c_str();
}
const char* da_result_method(const da_result* r) { return r->method.c_str(); }

void da_result_free(da_result* result) { delete result; }

da_status da_report_compute(const da_graph* graph, const uint32_t* vertices,
                            size_t len, da_report** out) {
  if (!graph || !vertices || !out) {
    return fail(DA_ERROR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&]() -> da_status {
    std::vector<danchor::VertexId> ids;
    for (size_t i = 0; i < len; ++i) {
      if (vertices[i] >= graph->graph.vertex_count()) {
        return fail(DA_ERROR_INVALID_ARGUMENT, "vertex out of range");
      }
      ids.push_back(vertices[i]);
    }
    VertexSet subset(std::move(ids));
    if (subset.size() < 2) {
      return fail(DA_ERROR_DOMAIN, "report needs at least two vertices");
    }
    auto sub = danchor::induced(graph->graph, subset);
    auto report = danchor::analyze_connectivity(sub.graph);
    Rational d = danchor::density(sub.graph);
    Rational min_deg =
        danchor::min_weighted_degree(sub.graph, VertexSet::full(sub.graph.vertex_count()));
    auto* r = new da_report;
    r->edge_count = sub.graph.edge_count();
    r->density_fraction = d.to_fraction_string();
    r->density_decimal = d.to_decimal_string(2);
    r->kappa = report.kappa;
    r->lambda_fraction = report.lambda.to_fraction_string();
    r->lambda_decimal = report.lambda.to_decimal_string(2);
    r->min_degree_fraction = min_deg.to_fraction_string();
    r->min_degree_decimal = min_deg.to_decimal_string(2);
    *out = r;
    return DA_OK;
  });
}

uint64_t da_report_edge_count(const da_report* r) { return r->edge_count; }
const char* da_report_density_fraction(const da_report* r) {
  return r->density_fraction.c_str();
}
const char* da_report_density_decimal(const da_report* r) {
  return r->density_decimal.c_str();
}
uint32_t da_report_kappa(const da_report* r) { return r->kappa; }
const char* da_report_lambda_fraction(const da_report* r) {
  return r->lambda_fraction.c_str();
}
const char* da_report_lambda_decimal(const da_report* r) {
  return r->lambda_decimal.c_str();
}
const char* da_report_min_degree_fraction(const da_report* r) {
  return r->min_degree_fraction.c_str();
}
const char* da_report_min_degree_decimal(const da_report* r) {
  return r->min_degree_decimal.c_str();
}
void da_report_free(da_report* report) { delete report; }

}  // extern "C"
