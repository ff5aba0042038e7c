#include "limitlab/graph.hpp"

#include <algorithm>
#include <bit>

#include "limitlab/error.hpp"

namespace limitlab {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
  require(n >= 0, "invalid-vertex", "vertex count must be nonnegative");
  bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

void Graph::add_edge(int u, int v) {
  require(u >= 0 && u < n_ && v >= 0 && v < n_, "invalid-vertex",
          "edge endpoint out of range");
  require(u != v, "invalid-vertex", "loops are not allowed");
  bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= 1ull << (v & 63);
  bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= 1ull << (u & 63);
}

int Graph::degree(int v) const {
  int d = 0;
  const std::uint64_t* r = row(v);
  for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
  return d;
}

long long Graph::edge_count() const {
  long long total = 0;
  for (int v = 0; v < n_; ++v) total += degree(v);
  return total / 2;
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  for (int u = 0; u < n_; ++u)
    if (adjacent(v, u)) out.push_back(u);
  return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph Graph::empty_graph(int n) { return Graph(n); }

Graph Graph::cycle(int n) {
  require(n >= 3, "invalid-vertex", "cycle needs at least 3 vertices");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph Graph::path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edge_list) {
  Graph g(n);
  for (auto [u, v] : edge_list) g.add_edge(u, v);
  return g;
}

Graph complement(const Graph& g) {
  Graph c(g.n());
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (!g.adjacent(u, v)) c.add_edge(u, v);
  return c;
}

Graph induced(const Graph& g, const std::vector<int>& keep) {
  std::vector<int> sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    require(sorted[i] >= 0 && sorted[i] < g.n(), "invalid-vertex",
            "induced subgraph vertex out of range");
    require(i == 0 || sorted[i] != sorted[i - 1], "invalid-vertex",
            "induced subgraph vertices must be distinct");
  }
  Graph h(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (g.adjacent(keep[i], keep[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
  return h;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.n() + b.n());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(a.n() + u, a.n() + v);
  return g;
}

Graph join(const Graph& a, const Graph& b) {
  Graph g = disjoint_union(a, b);
  for (int u = 0; u < a.n(); ++u)
    for (int v = 0; v < b.n(); ++v) g.add_edge(u, a.n() + v);
  return g;
}

}  // namespace limitlab
