#include "kskit/graph.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

#include "kskit/error.hpp"

namespace kskit {

SimpleGraph::SimpleGraph(std::size_t order) : rows_(order, Bitset(order)) {}

void SimpleGraph::add_edge(std::size_t u, std::size_t v) {
  if (u >= order() || v >= order()) throw std::invalid_argument("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  if (rows_[u].test(v)) return;
  rows_[u].set(v);
  rows_[v].set(u);
  ++edges_;
}

std::vector<std::pair<std::size_t, std::size_t>> SimpleGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(edges_);
  for (std::size_t u = 0; u < order(); ++u) {
    for (std::size_t v = rows_[u].next(u + 1); v != Bitset::npos; v = rows_[u].next(v + 1)) out.emplace_back(u, v);
  }
  return out;
}

SimpleGraph SimpleGraph::relabelled(const Permutation& perm) const {
  SimpleGraph out(order());
  for (auto [u, v] : edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

OrthoGraph::OrthoGraph(std::vector<Ray> vertices, SimpleGraph graph)
    : vertices_(std::move(vertices)), graph_(std::move(graph)) {}

std::optional<std::size_t> OrthoGraph::index_of(const Ray& r) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), r);
  if (it == vertices_.end() || !(*it == r)) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

OrthoGraph build_graph(std::span<const Ray> rays) {
  if (rays.empty()) throw std::invalid_argument("build_graph: empty ray set");
  std::vector<Ray> vertices(rays.begin(), rays.end());
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  SimpleGraph g(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (is_orthogonal(vertices[i], vertices[j])) g.add_edge(i, j);
    }
  }
  return {std::move(vertices), std::move(g)};
}

std::vector<Triangle> complete_bases(const SimpleGraph& g) {
  std::vector<Triangle> out;
  for (std::size_t i = 0; i < g.order(); ++i) {
    const auto& ni = g.neighbors(i);
    for (std::size_t j = ni.next(i + 1); j != Bitset::npos; j = ni.next(j + 1)) {
      const Bitset common = ni & g.neighbors(j);
      for (std::size_t k = common.next(j + 1); k != Bitset::npos; k = common.next(k + 1)) out.push_back({i, j, k});
    }
  }
  return out;
}

bool is_independent(const SimpleGraph& g, std::span<const std::size_t> vertices) {
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      if (vertices[a] == vertices[b] || g.adjacent(vertices[a], vertices[b])) return false;
    }
  }
  return true;
}

std::string to_dimacs(const SimpleGraph& g, std::string_view comment) {
  std::ostringstream out;
  if (!comment.empty()) {
    std::istringstream lines{std::string(comment)};
    for (std::string line; std::getline(lines, line);) out << "c " << line << '\n';
  }
  out << "p edge " << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

SimpleGraph parse_dimacs(std::istream& in) {
  std::optional<SimpleGraph> g;
  std::size_t declared_edges = 0;
  std::size_t lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    const auto where = "DIMACS line " + std::to_string(lineno);
    if (tag == "p") {
      std::string kind;
      std::size_t v = 0;
      if (!(ls >> kind >> v >> declared_edges) || (kind != "edge" && kind != "col")) {
        throw ParseError(where + ": malformed problem line");
      }
      if (g) throw ParseError(where + ": duplicate problem line");
      g.emplace(v);
    } else if (tag == "e") {
      std::size_t a = 0;
      std::size_t b = 0;
      if (!g) throw ParseError(where + ": edge before problem line");
      if (!(ls >> a >> b) || a == 0 || b == 0 || a > g->order() || b > g->order() || a == b) {
        throw ParseError(where + ": bad edge");
      }
      g->add_edge(a - 1, b - 1);
    } else {
      throw ParseError(where + ": unknown line type '" + tag + "'");
    }
  }
  if (!g) throw ParseError("DIMACS: missing problem line");
  if (g->edge_count() != declared_edges) {
    throw ParseError("DIMACS: header declares " + std::to_string(declared_edges) + " edges, found " +
                     std::to_string(g->edge_count()));
  }
  return std::move(*g);
}

}  // namespace kskit
