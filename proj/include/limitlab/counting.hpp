#pragma once

#include "limitlab/graph.hpp"
#include "limitlab/rational.hpp"

namespace limitlab {

/**
 * Number of injective maps V(pattern) -> V(host) that preserve both edges and
 * non-edges (induced embeddings). The empty pattern has exactly one embedding
 * (the empty map); a pattern larger than the host has none.
 */
BigInt count_embeddings(const Graph& pattern, const Graph& host);

/**
 * Labeled induced density: count_embeddings / (|host|)_(|pattern|), the
 * fraction of injective vertex maps that are embeddings.
 * Throws "size-violation" when the pattern is larger than the host.
 */
Rational tind(const Graph& pattern, const Graph& host);

/**
 * Unlabeled induced density: the fraction of |pattern|-subsets of the host
 * that induce a copy of the pattern. Equals |pattern|!/aut_order(pattern)
 * times tind. Throws "size-violation" when the pattern is larger than the host.
 */
Rational p_density(const Graph& pattern, const Graph& host);

/** Order of the automorphism group; equals count_embeddings(g, g). */
BigInt aut_order(const Graph& g);

}  // namespace limitlab
