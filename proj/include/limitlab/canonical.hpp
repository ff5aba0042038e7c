#pragma once

#include <string>
#include <vector>

#include "limitlab/graph.hpp"

namespace limitlab {

/**
 * Canonical representation of an isomorphism class: the lexicographically
 * least upper-triangle adjacency encoding over all vertex orderings, plus one
 * ordering achieving it. Two graphs have equal CanonicalForm exactly when they
 * are isomorphic.
 */
struct CanonicalForm {
  int n = 0;
  std::string encoding;        // bits '0'/'1', columns j = 1..n-1, rows i < j
  std::vector<int> relabel;    // relabel[position] = original vertex

  /** Rebuild the canonical representative graph from the encoding. */
  Graph graph() const;

  bool operator==(const CanonicalForm& o) const {
    return n == o.n && encoding == o.encoding;
  }
  bool operator<(const CanonicalForm& o) const {
    return n != o.n ? n < o.n : encoding < o.encoding;
  }
};

/**
 * Exact canonical form by branch-and-bound minimization over all vertex
 * orderings. Intended for small graphs; throws "size-violation" for n > 10.
 */
CanonicalForm canonical_form(const Graph& g);

/** Isomorphism test via embedding counting; no size guard. */
bool is_isomorphic(const Graph& a, const Graph& b);

/**
 * One canonical representative per isomorphism class on n vertices, sorted by
 * encoding. Built by extending each (n-1)-class by one vertex in all 2^(n-1)
 * ways and deduplicating canonically. Throws "size-violation" for n > 7.
 */
std::vector<CanonicalForm> enumerate_iso_classes(int n);

/** The graphs of enumerate_iso_classes(n), in the same order. */
std::vector<Graph> enumerate_iso_class_graphs(int n);

}  // namespace limitlab
