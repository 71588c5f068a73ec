#include "zec/graph.hpp"

#include <string>

#include "zec/errors.hpp"

namespace zec {

Graph::Graph(int vertex_count)
    : n_(vertex_count),
      words_((vertex_count + 63) / 64),
      adj_(static_cast<size_t>(vertex_count) * ((vertex_count + 63) / 64), 0) {}

Graph Graph::from_edges(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
  Graph g(vertex_count);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(int u, int v) {
  if (u == v) return;  // no self-loops
  adj_[static_cast<size_t>(u) * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
  adj_[static_cast<size_t>(v) * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
}

bool Graph::has_edge(int u, int v) const {
  return (adj_[static_cast<size_t>(u) * words_ + v / 64] >> (v % 64)) & 1;
}

int Graph::edge_count() const {
  int count = 0;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (has_edge(u, v)) ++count;
  return count;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (has_edge(u, v)) out.emplace_back(u, v);
  return out;
}

Graph complement(const Graph& g) {
  const int n = g.vertex_count();
  Graph out(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) out.add_edge(u, v);
  return out;
}

std::vector<int> ProductGraph::decode(int vertex) const {
  std::vector<int> tuple(power);
  for (int t = power - 1; t >= 0; --t) {
    tuple[t] = vertex % base_vertices;
    vertex /= base_vertices;
  }
  return tuple;
}

int ProductGraph::encode(std::span<const int> tuple) const {
  int v = 0;
  for (int t : tuple) v = v * base_vertices + t;
  return v;
}

ProductGraph disjunctive_power(const Graph& base, int n, int vertex_cap) {
  if (n < 1) throw SizeCapExceededError("product power must be >= 1");
  const int b = base.vertex_count();
  long long total = 1;
  for (int t = 0; t < n; ++t) {
    total *= b;
    if (total > vertex_cap)
      throw SizeCapExceededError("product graph would have " + std::to_string(total) +
                                 "+ vertices, cap is " + std::to_string(vertex_cap));
  }

  ProductGraph pg;
  pg.base_vertices = b;
  pg.power = n;
  pg.graph = Graph(static_cast<int>(total));
  std::vector<int> tu, tv;
  for (int u = 0; u < total; ++u) {
    tu = pg.decode(u);
    for (int v = u + 1; v < total; ++v) {
      tv = pg.decode(v);
      for (int t = 0; t < n; ++t) {
        if (base.has_edge(tu[t], tv[t])) {
          pg.graph.add_edge(u, v);
          break;
        }
      }
    }
  }
  return pg;
}

}  // namespace zec
