#pragma once

#include <vector>

#include "limitlab/rational.hpp"

namespace limitlab {

/**
 * Exact limiting density of the n-clique in the recursive 4-cycle blow-up,
 * via the memoized recursion
 *   phi(0) = phi(1) = 1,
 *   phi(n) = (1 / (4^(n-1) - 1)) * sum_{t=1}^{n-1} C(n,t) phi(t) phi(n-t).
 */
Rational phi_c4_clique(int n);

/**
 * Exact limiting density of the n-anticlique in the recursive 4-cycle
 * blow-up: the same recursion with the halved prefactor 1 / (2 (4^(n-1) - 1)).
 */
Rational phi_c4_anticlique(int n);

/**
 * Exact limiting density of both the n-clique and the n-anticlique in the
 * agreement limit of the quasirandom permuton: 1/n!.
 */
Rational permuton_agreement_density(int n);

/**
 * values[i]^(1/(i+1)) as doubles, for decay reports (the i-th entry is
 * treated as the term of index n = i+1). Computed through exact base-2
 * logarithms so that values far below double range still report correctly.
 * Throws "bad-request" on non-positive input.
 */
std::vector<double> root_decay(const std::vector<Rational>& values);

}  // namespace limitlab
