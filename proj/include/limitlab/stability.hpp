#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "limitlab/error.hpp"
#include "limitlab/graph.hpp"
#include "limitlab/rational.hpp"

namespace limitlab {

/**
 * Ordered half-graph witness: vertex sequences xs = (x_1..x_n) and
 * ys = (y_1..y_n) with {x_i, y_j} an edge exactly when i <= j. In distinct
 * mode all 2n listed vertices are pairwise distinct; otherwise repeats are
 * allowed wherever the edge pattern permits them.
 */
struct HalfGraphWitness {
  std::vector<int> xs;
  std::vector<int> ys;
  int order = 0;
  bool distinct_mode = true;
};

/**
 * Complete-binary-branching witness of height h: leaves x_sigma for
 * sigma in {0,1}^h and internals y_tau for binary strings tau of length < h,
 * with {x_sigma, y_(sigma restricted to m)} an edge exactly when bit m+1 of
 * sigma is 1. Leaves are indexed by the numeric value of sigma (first bit most
 * significant); internals are indexed level by level: tau of length m sits at
 * position (2^m - 1) + value(tau).
 */
struct TreeWitness {
  std::vector<int> leaves;
  std::vector<int> internals;
  int height = 0;
  bool distinct_mode = false;
};

enum class SearchStatus { found, absent, budget_exceeded };

template <typename W>
struct SearchResult {
  SearchStatus status = SearchStatus::absent;
  std::optional<W> witness;
  std::uint64_t nodes_explored = 0;

  bool found() const { return status == SearchStatus::found; }
};

/** Check a half-graph witness against its type invariants in G. */
bool verify_half_graph(const Graph& g, const HalfGraphWitness& w);

/** Check a tree witness against its type invariants in G. */
bool verify_tree(const Graph& g, const TreeWitness& w);

/**
 * Exhaustive search for a half-graph of the given order; returns the
 * lexicographically least witness under the slot order (x_1..x_n, y_1..y_n).
 * The budget bounds explored search nodes; exceeding it yields the
 * budget_exceeded status rather than a wrong answer.
 */
SearchResult<HalfGraphWitness> find_half_graph(
    const Graph& g, int order, bool distinct = true,
    std::uint64_t budget = kDefaultSearchBudget);

/**
 * Largest order admitting a half-graph witness; 0 when G has no edge.
 * Throws "budget-exceeded" if any inner search is inconclusive.
 */
int max_half_graph_order(const Graph& g, bool distinct = true,
                         std::uint64_t budget = kDefaultSearchBudget);

/**
 * Exhaustive search for a tree witness of the given height; returns the
 * lexicographically least witness under the slot order (internals level by
 * level, then leaves by sigma value). Vertices may repeat unless distinct.
 */
SearchResult<TreeWitness> find_tree(const Graph& g, int height,
                                    bool distinct = false,
                                    std::uint64_t budget = kDefaultSearchBudget);

/** Largest height admitting a tree witness; 0 when G has no edge. */
int max_tree_height(const Graph& g, bool distinct = false,
                    std::uint64_t budget = kDefaultSearchBudget);

/**
 * Sufficient-bound arithmetic 2^(k+2) - 2 linking the two measures: a graph
 * with no half-graph of order n has no tree of height
 * tree_bound_from_stability(n); a graph with no tree of height h has no
 * half-graph of order stability_bound_from_tree(h). Sufficient, not tight.
 */
long long stability_bound_from_tree(int h);
long long tree_bound_from_stability(int n);

/**
 * For each host H_i, the total induced density sum p(M, H_i) over all
 * iso-classes M with at most max_pattern vertices that contain a half-graph
 * of the given order (distinct mode). Small values across the sequence
 * diagnose almost-stability at this pattern scale.
 */
std::vector<Rational> sequence_stability_report(const std::vector<Graph>& hosts,
                                                int order, int max_pattern);

}  // namespace limitlab
