#include "limitlab/stability.hpp"

#include <algorithm>

#include "limitlab/canonical.hpp"
#include "limitlab/counting.hpp"

namespace limitlab {

namespace {

bool all_distinct(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> all = a;
  all.insert(all.end(), b.begin(), b.end());
  std::sort(all.begin(), all.end());
  return std::adjacent_find(all.begin(), all.end()) == all.end();
}

/**
 * Generic slot-by-slot DFS. Slots are assigned in a fixed order with
 * candidates tried in ascending vertex order, so the first complete
 * assignment is the lexicographically least valid one under that slot order.
 * `consistent(slot, vertex, assigned)` checks a candidate against all
 * already-assigned slots. The budget bounds candidate checks.
 */
template <typename Consistent>
SearchStatus dfs_slots(int slots, int n_vertices, std::uint64_t budget,
                       Consistent&& consistent, std::vector<int>& assignment,
                       std::uint64_t& nodes) {
  assignment.assign(slots, -1);
  std::vector<int> cursor(slots, 0);
  int slot = 0;
  while (true) {
    if (slot == slots) return SearchStatus::found;
    bool advanced = false;
    for (int v = cursor[slot]; v < n_vertices; ++v) {
      if (++nodes > budget) return SearchStatus::budget_exceeded;
      if (consistent(slot, v, assignment)) {
        assignment[slot] = v;
        cursor[slot] = v + 1;
        ++slot;
        if (slot < slots) cursor[slot] = 0;
        advanced = true;
        break;
      }
    }
    if (!advanced) {
      assignment[slot] = -1;
      if (slot == 0) return SearchStatus::absent;
      --slot;
      assignment[slot] = -1;
    }
  }
}

}  // namespace

bool verify_half_graph(const Graph& g, const HalfGraphWitness& w) {
  const int n = w.order;
  if (n < 1) return false;
  if (static_cast<int>(w.xs.size()) != n || static_cast<int>(w.ys.size()) != n)
    return false;
  for (int v : w.xs)
    if (v < 0 || v >= g.n()) return false;
  for (int v : w.ys)
    if (v < 0 || v >= g.n()) return false;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (g.adjacent(w.xs[i - 1], w.ys[j - 1]) != (i <= j)) return false;
  if (w.distinct_mode && !all_distinct(w.xs, w.ys)) return false;
  return true;
}

bool verify_tree(const Graph& g, const TreeWitness& w) {
  const int h = w.height;
  if (h < 1 || h > 25) return false;
  if (w.leaves.size() != (1u << h) || w.internals.size() != (1u << h) - 1)
    return false;
  for (int v : w.leaves)
    if (v < 0 || v >= g.n()) return false;
  for (int v : w.internals)
    if (v < 0 || v >= g.n()) return false;
  for (unsigned sigma = 0; sigma < (1u << h); ++sigma) {
    for (int m = 0; m < h; ++m) {
      const unsigned prefix = sigma >> (h - m);
      const int internal = w.internals[(1u << m) - 1 + prefix];
      const bool bit = (sigma >> (h - 1 - m)) & 1;
      if (g.adjacent(w.leaves[sigma], internal) != bit) return false;
    }
  }
  if (w.distinct_mode && !all_distinct(w.leaves, w.internals)) return false;
  return true;
}

SearchResult<HalfGraphWitness> find_half_graph(const Graph& g, int order,
                                               bool distinct,
                                               std::uint64_t budget) {
  require(order >= 1, "bad-request", "half-graph order must be at least 1");
  SearchResult<HalfGraphWitness> result;
  const int n = order;
  // Within each side the edge pattern forces pairwise-distinct vertices, so
  // an order above |V| is impossible even with repeats allowed.
  if (n > g.n() || (distinct && 2 * n > g.n())) return result;
  // Slots 0..n-1 are x_1..x_n; slots n..2n-1 are y_1..y_n.
  auto consistent = [&](int slot, int v, const std::vector<int>& asg) {
    if (distinct) {
      for (int s = 0; s < slot; ++s)
        if (asg[s] == v) return false;
    }
    if (slot < n) {
      // x_i needs the distinct neighbors y_i..y_n and the distinct
      // non-neighbors y_1..y_(i-1); with repeats allowed one of the latter
      // may be x_i itself, weakening that requirement by one.
      const int i = slot + 1;
      const int deg = g.degree(v);
      const int need_nonneighbors = distinct ? i - 1 : i - 2;
      return deg >= n - i + 1 && g.n() - 1 - deg >= std::max(0, need_nonneighbors);
    }
    const int j = slot - n + 1;  // this is y_j
    for (int i = 1; i <= n; ++i)
      if (g.adjacent(asg[i - 1], v) != (i <= j)) return false;
    return true;
  };
  std::vector<int> assignment;
  result.status = dfs_slots(2 * n, g.n(), budget, consistent, assignment,
                            result.nodes_explored);
  if (result.status == SearchStatus::found) {
    HalfGraphWitness w;
    w.order = n;
    w.distinct_mode = distinct;
    w.xs.assign(assignment.begin(), assignment.begin() + n);
    w.ys.assign(assignment.begin() + n, assignment.end());
    result.witness = std::move(w);
  }
  return result;
}

int max_half_graph_order(const Graph& g, bool distinct, std::uint64_t budget) {
  const int cap = distinct ? g.n() / 2 : g.n();
  int best = 0;
  for (int n = 1; n <= cap; ++n) {
    auto r = find_half_graph(g, n, distinct, budget);
    if (r.status == SearchStatus::budget_exceeded)
      throw Error("budget-exceeded", "half-graph search budget exhausted");
    if (!r.found()) break;
    best = n;
  }
  return best;
}

SearchResult<TreeWitness> find_tree(const Graph& g, int height, bool distinct,
                                    std::uint64_t budget) {
  require(height >= 1, "bad-request", "tree height must be at least 1");
  SearchResult<TreeWitness> result;
  const int h = height;
  // Leaves are forced pairwise distinct by their edge patterns, so 2^h <= |V|.
  if (h > 25 || (1 << h) > g.n()) return result;
  const int internals = (1 << h) - 1;
  const int leaves = 1 << h;
  if (distinct && internals + leaves > g.n()) return result;
  // Slots 0..internals-1 are y_tau level by level; then leaves by sigma value.
  auto consistent = [&](int slot, int v, const std::vector<int>& asg) {
    if (distinct) {
      for (int s = 0; s < slot; ++s)
        if (asg[s] == v) return false;
    }
    if (slot < internals) return true;
    const unsigned sigma = static_cast<unsigned>(slot - internals);
    for (int m = 0; m < h; ++m) {
      const unsigned prefix = sigma >> (h - m);
      const int y = asg[(1 << m) - 1 + prefix];
      const bool bit = (sigma >> (h - 1 - m)) & 1;
      if (g.adjacent(v, y) != bit) return false;
    }
    return true;
  };
  std::vector<int> assignment;
  result.status = dfs_slots(internals + leaves, g.n(), budget, consistent,
                            assignment, result.nodes_explored);
  if (result.status == SearchStatus::found) {
    TreeWitness w;
    w.height = h;
    w.distinct_mode = distinct;
    w.internals.assign(assignment.begin(), assignment.begin() + internals);
    w.leaves.assign(assignment.begin() + internals, assignment.end());
    result.witness = std::move(w);
  }
  return result;
}

int max_tree_height(const Graph& g, bool distinct, std::uint64_t budget) {
  int best = 0;
  for (int h = 1; h <= 25 && (1 << h) <= g.n(); ++h) {
    auto r = find_tree(g, h, distinct, budget);
    if (r.status == SearchStatus::budget_exceeded)
      throw Error("budget-exceeded", "tree search budget exhausted");
    if (!r.found()) break;
    best = h;
  }
  return best;
}

long long stability_bound_from_tree(int h) {
  require(h >= 1, "bad-request", "argument must be at least 1");
  require(h <= 60, "size-violation", "bound overflows 64-bit arithmetic");
  return (1ll << (h + 2)) - 2;
}

long long tree_bound_from_stability(int n) {
  require(n >= 1, "bad-request", "argument must be at least 1");
  require(n <= 60, "size-violation", "bound overflows 64-bit arithmetic");
  return (1ll << (n + 2)) - 2;
}

std::vector<Rational> sequence_stability_report(const std::vector<Graph>& hosts,
                                                int order, int max_pattern) {
  require(order >= 1, "bad-request", "half-graph order must be at least 1");
  require(max_pattern >= 1 && max_pattern <= 7, "size-violation",
          "pattern size limit must be between 1 and 7");
  for (const Graph& h : hosts)
    require(h.n() >= max_pattern, "size-violation",
            "every host must have at least max_pattern vertices");
  std::vector<Graph> unstable_patterns;
  for (int k = 1; k <= max_pattern; ++k) {
    for (Graph& m : enumerate_iso_class_graphs(k)) {
      if (find_half_graph(m, order, /*distinct=*/true).found())
        unstable_patterns.push_back(std::move(m));
    }
  }
  std::vector<Rational> out;
  out.reserve(hosts.size());
  for (const Graph& h : hosts) {
    Rational total(0);
    for (const Graph& m : unstable_patterns) total += p_density(m, h);
    out.push_back(total);
  }
  return out;
}

}  // namespace limitlab
