#include "danchor/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <tuple>
#include <sstream>
#include <unordered_map>

#include "danchor/error.hpp"

namespace danchor {
namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

}  // namespace

LoadResult load_edge_list(std::istream& in, WeightMode mode) {
  std::unordered_map<std::string, VertexId> ids;
  std::vector<std::string> labels;
  auto intern = [&](const std::string& label) -> VertexId {
    auto it = ids.find(label);
    if (it != ids.end()) return it->second;
    VertexId id = static_cast<VertexId>(labels.size());
    ids.emplace(label, id);
    labels.push_back(label);
    return id;
  };

  std::map<std::pair<VertexId, VertexId>, Rational> edge_weights;
  std::vector<std::string> warnings;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string trimmed = line;
    std::size_t first = trimmed.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (trimmed[first] == '#') continue;
    auto tokens = split_ws(trimmed);
    if (tokens.size() < 2 || tokens.size() > 3) {
      throw ParseError("expected 'u v' or 'u v w'", line_no);
    }
    if (mode == WeightMode::kUnweighted && tokens.size() != 2) {
      throw ParseError("unexpected weight column in unweighted input", line_no);
    }
    if (mode == WeightMode::kWeighted && tokens.size() != 3) {
      throw ParseError("missing weight column in weighted input", line_no);
    }
    VertexId u = intern(tokens[0]);
    VertexId v = intern(tokens[1]);
    Rational w(1);
    if (tokens.size() == 3 && mode != WeightMode::kUnweighted) {
      try {
        w = Rational::parse(tokens[2]);
      } catch (const ParseError& e) {
        throw ParseError(std::string("bad weight: ") + e.what(), line_no);
      }
      if (!w.is_positive()) {
        throw ValidationError("line " + std::to_string(line_no) +
                              ": non-positive edge weight '" + tokens[2] + "'");
      }
    }
    if (u == v) continue;  // self-loop dropped, vertex retained
    auto key = u < v ? std::make_pair(u, v) : std::make_pair(v, u);
    auto [it, inserted] = edge_weights.emplace(key, w);
    if (!inserted && it->second != w) {
      warnings.push_back("edge {" + labels[key.first] + "," + labels[key.second] +
                         "}: conflicting weight " + w.to_exact_string() +
                         " ignored, keeping " + it->second.to_exact_string());
    }
  }

  if (edge_weights.empty()) {
    throw ValidationError("edge list contains no usable edges");
  }

  std::vector<Edge> edges;
  edges.reserve(edge_weights.size());
  for (const auto& [key, w] : edge_weights) {
    edges.push_back({key.first, key.second, w});
  }
  const VertexId n = static_cast<VertexId>(labels.size());
  return LoadResult{WeightedGraph(n, std::move(edges), std::move(labels)),
                    std::move(warnings)};
}

LoadResult load_edge_list_file(const std::string& path, WeightMode mode) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return load_edge_list(in, mode);
}

std::string export_edge_list(const WeightedGraph& g) {
  // Canonical over labels, so exporting is a fixed point across reloads.
  // Degree-0 vertices are written as self-loop lines; the loader drops the
  // loop but keeps the vertex, which makes the round trip lossless.
  std::vector<std::tuple<std::string, std::string, std::string>> lines;
  lines.reserve(g.edge_count());
  for (const auto& e : g.edges()) {
    std::string a = g.label(e.u);
    std::string b = g.label(e.v);
    if (b < a) std::swap(a, b);
    lines.emplace_back(std::move(a), std::move(b), e.weight.to_exact_string());
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.neighbors(v).empty()) {
      lines.emplace_back(g.label(v), g.label(v), "1");
    }
  }
  std::sort(lines.begin(), lines.end());
  std::ostringstream os;
  for (const auto& [a, b, w] : lines) {
    os << a << ' ' << b << ' ' << w << '\n';
  }
  return os.str();
}

std::string export_dot(const WeightedGraph& g, const VertexSet* highlight) {
  std::ostringstream os;
  os << "graph G {\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    os << "  \"" << g.label(v) << '"';
    if (highlight && highlight->contains(v)) {
      os << " [style=filled, fillcolor=lightblue]";
    }
    os << ";\n";
  }
  for (const auto& e : g.edges()) {
    os << "  \"" << g.label(e.u) << "\" -- \"" << g.label(e.v) << "\" [label=\""
       << e.weight.to_exact_string() << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace danchor
