#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace zec {

/// Simple undirected graph, adjacency kept as bitset rows.
/// Symmetric and irreflexive by construction.
class Graph {
public:
  Graph() = default;
  explicit Graph(int vertex_count);
  static Graph from_edges(int vertex_count, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  int words_per_row() const { return words_; }

  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;

  int edge_count() const;
  std::vector<std::pair<int, int>> edges() const;

  std::span<const std::uint64_t> row(int v) const {
    return {adj_.data() + static_cast<size_t>(v) * words_, static_cast<size_t>(words_)};
  }

  bool operator==(const Graph&) const = default;

private:
  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> adj_;
};

/// Edge iff non-edge in g; an involution.
Graph complement(const Graph& g);

/// n-fold disjunctive (co-normal) power: vertices are n-tuples over the base
/// vertex set in lexicographic order, and two distinct tuples are adjacent
/// iff some coordinate pair is an edge of the base. This is the product under
/// which tuples of channel inputs are perfectly distinguishable exactly when
/// some coordinate pair is.
struct ProductGraph {
  Graph graph;
  int base_vertices = 0;
  int power = 1;

  std::vector<int> decode(int vertex) const;
  int encode(std::span<const int> tuple) const;
};

ProductGraph disjunctive_power(const Graph& base, int n, int vertex_cap = 10000);

struct CliqueOptions {
  /// Branch-node budget; exceeding it returns the best clique found so far
  /// with exact = false. Node counts are deterministic, so budgeted runs
  /// reproduce exactly.
  std::uint64_t node_budget = 200'000'000;
};

struct CliqueResult {
  int size = 0;
  std::vector<int> witness;  // sorted ascending
  bool exact = true;
  std::uint64_t nodes = 0;
};

/// Exact maximum clique via branch and bound with a greedy coloring bound.
/// The witness is the lexicographically smallest maximum clique, extracted
/// by lowest-index-first decision searches after the size is known, so
/// golden tests are deterministic.
CliqueResult clique_number(const Graph& g, const CliqueOptions& options = {});

/// alpha(g) = omega(complement(g)).
CliqueResult independence_number(const Graph& g, const CliqueOptions& options = {});

}  // namespace zec
