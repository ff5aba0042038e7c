#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace limitlab {

/**
 * Finite simple graph on vertices {0..n-1} (external interfaces are 1-based;
 * conversion happens at the I/O boundary). Adjacency is one bitrow per vertex,
 * symmetric and irreflexive. n = 0 is legal and denotes the empty graph K0.
 */
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int n() const { return n_; }
  int words() const { return words_; }

  bool adjacent(int u, int v) const {
    return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
  }
  void add_edge(int u, int v);

  const std::uint64_t* row(int v) const { return bits_.data() + static_cast<std::size_t>(v) * words_; }

  int degree(int v) const;
  long long edge_count() const;
  std::vector<int> neighbors(int v) const;
  std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic

  bool operator==(const Graph& o) const { return n_ == o.n_ && bits_ == o.bits_; }

  static Graph complete(int n);
  static Graph empty_graph(int n);
  static Graph cycle(int n);
  static Graph path(int n);
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edge_list);

 private:
  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
};

Graph complement(const Graph& g);

/**
 * Induced subgraph on the given vertices, renumbered in the order listed.
 * Throws "invalid-vertex" on out-of-range or duplicate entries.
 */
Graph induced(const Graph& g, const std::vector<int>& keep);

Graph disjoint_union(const Graph& a, const Graph& b);
Graph join(const Graph& a, const Graph& b);

}  // namespace limitlab
