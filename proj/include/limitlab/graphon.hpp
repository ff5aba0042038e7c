#pragma once

#include <cstdint>
#include <vector>

#include "limitlab/error.hpp"
#include "limitlab/graph.hpp"
#include "limitlab/rational.hpp"

namespace limitlab {

/**
 * Step function surrogate for a graphon: finitely many parts with positive
 * rational weights summing to 1 and a symmetric matrix of edge probabilities
 * in [0,1]. All densities against it are exact rationals.
 */
struct StepGraphon {
  std::vector<Rational> parts;
  std::vector<std::vector<Rational>> values;

  int part_count() const { return static_cast<int>(parts.size()); }

  /** Throws "bad-request" unless weights/values satisfy all invariants. */
  void validate() const;
};

/** Per-part weights in [0,1] used to rescale onto a subgraphon. */
struct WeightFunction {
  std::vector<Rational> weights;
};

/** One part of weight 1 with constant edge probability p. */
StepGraphon constant_graphon(const Rational& p);

/**
 * Exact labeled induced density of the pattern in the step graphon: the sum
 * over all assignments of pattern vertices to parts of the product of part
 * weights and of per-pair factors (the block value for edges, one minus it
 * for non-edges). Branches whose running product is zero are pruned.
 */
Rational tind_graphon(const Graph& pattern, const StepGraphon& w);

/**
 * Reweight parts by f and renormalize: part i gets weight
 * parts[i]*f[i] / sum_j parts[j]*f[j]; block values are unchanged and parts
 * with zero new weight are dropped. Throws "bad-request" when the total is 0.
 */
StepGraphon rescale_subgraphon(const StepGraphon& w, const WeightFunction& f);

/**
 * Level-l step approximation of the recursive 4-cycle blow-up limit: 4^l
 * equal parts indexed by the strings in {1..4}^l; the value between distinct
 * parts is 1 when the first differing coordinate differs by +-1 mod 4 and 0
 * otherwise; diagonal blocks carry the agnostic placeholder value 1/2 (any
 * fixed value yields the same limit as l grows; 1/2 keeps the error
 * symmetric). Throws "budget-exceeded" when 4^l exceeds the part budget.
 */
StepGraphon c4_step_approx(int level,
                           std::uint64_t part_budget = kDefaultVertexBudget);

/**
 * 2k-part step version of the half-graph limit: parts x_1..x_k then y_1..y_k,
 * all of weight 1/(2k); the value between x_i and y_j is 1 exactly when
 * i <= j, and 0 elsewhere (including within the sides and on the diagonal).
 * Different k approximate the same limit but are not refinements of one
 * another, so densities vary with k (the k-th edge density is (k+1)/(4k)).
 */
StepGraphon half_graphon_step(int k);

/**
 * Split every part into two equal halves with copied values. Densities of
 * every pattern are exactly unchanged (representation invariance).
 */
StepGraphon refine_halves(const StepGraphon& w);

}  // namespace limitlab
