#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "limitlab/error.hpp"
#include "limitlab/graph.hpp"

namespace limitlab {

/**
 * Modular decomposition certificate. A leaf holds one original vertex.
 * A series node joins its children completely; a parallel node joins them not
 * at all; a prime node joins child modules according to its quotient graph,
 * which admits no further nontrivial module. Evaluating the tree reproduces
 * the decomposed graph exactly. The tree certifies membership in the
 * substitution closure of the at-most-two-vertex graphs exactly when it has
 * no prime node (prime quotients always have at least 4 vertices).
 */
struct CographTree {
  enum class Kind { leaf, series, parallel, prime };
  Kind kind = Kind::leaf;
  int vertex = -1;                         // leaf only: original vertex
  std::vector<CographTree> children;       // internal nodes
  std::vector<std::vector<int>> modules;   // internal: vertices per child
  Graph quotient;                          // prime only
};

CographTree modular_decomposition(const Graph& g);

/** Rebuild the graph a decomposition tree describes (on n vertices). */
Graph evaluate_cograph_tree(const CographTree& t, int n);

bool has_prime_node(const CographTree& t);

struct CcMembership {
  bool member = false;
  CographTree certificate;
};

/**
 * Membership in the class of finite induced subgraphs of recursive 4-cycle
 * blow-ups, decided via modular decomposition (member iff no prime node);
 * the decomposition tree is returned as the certificate either way.
 */
CcMembership is_in_cc(const Graph& g);

/**
 * Replace vertex v of g by a module inducing f whose external neighborhood is
 * N_g(v) \ {v}. Vertices before v keep their ids; the module occupies
 * positions v..v+|f|-1; later vertices shift up by |f|-1.
 */
Graph substitute(const Graph& g, int v, const Graph& f);

/**
 * Height-level recursive blow-up: vertices are the base-|g| strings of the
 * given length (lexicographic order); two distinct strings are adjacent
 * exactly when their first differing coordinates are adjacent in g.
 * Level 0 is the one-vertex graph. Throws "budget-exceeded" when the vertex
 * count |g|^level exceeds the budget.
 */
Graph recursive_blowup(const Graph& g, int level,
                       std::uint64_t vertex_budget = kDefaultVertexBudget);

/** The coordinate strings naming recursive_blowup(g, level)'s vertices. */
std::vector<std::string> blowup_labels(int base, int level);

/**
 * The 2n-vertex graph with a clique x_1..x_n (vertices 0..n-1), an
 * independent set y_1..y_n (vertices n..2n-1), and cross edges {x_i, y_j}
 * exactly when i <= j (an order-n half-graph in between).
 */
Graph clique_empty_halfgraph(int n);

/**
 * Embedding of a graph into a recursive 4-cycle blow-up: every vertex gets a
 * distinct label over the alphabet {1,2,3,4} of the stated height, and two
 * vertices are adjacent exactly when the first differing label position
 * differs by +-1 mod 4.
 */
struct C4Embedding {
  int height = 0;
  std::vector<std::string> labels;  // indexed by vertex
};

/**
 * Construct an embedding certificate for a member of the class (throws
 * "not-a-member" otherwise) by folding its decomposition tree: children of a
 * binary combine are placed on an edge {1,2} (series) or a non-edge {1,3}
 * (parallel) of the 4-cycle and their labels are padded with trailing 1s to a
 * common length. A series of two 2-child parallel nodes places the four
 * grandchild blocks directly on 1,3 / 2,4, which keeps the plain 4-cycle at
 * height 1. Heights are not minimized beyond that.
 */
C4Embedding embed_into_c4(const Graph& g);

/** Check both embedding invariants (distinct labels, adjacency rule). */
bool verify_embedding(const Graph& g, const C4Embedding& e);

}  // namespace limitlab
