#pragma once

#include <optional>
#include <vector>

#include "limitlab/graph.hpp"
#include "limitlab/structure.hpp"

namespace limitlab {

/**
 * Verdict for the approximate Erdos-Hajnal property of the graph theory
 * forbidding the given family as induced subgraphs. The property holds
 * exactly when some forbidden graph lies in the recursive 4-cycle blow-up
 * class; the first such graph (in input order) is returned with its
 * decomposition tree and embedding as the certificate. The classical
 * Erdos-Hajnal conclusion (polynomial cliques or anti-cliques in all models)
 * follows whenever the approximate property holds, so the corollary flag
 * mirrors `holds`.
 */
struct AehpVerdict {
  bool holds = false;
  std::optional<int> witness_index;         // position in the input family
  std::optional<Graph> witness;
  std::optional<CographTree> witness_tree;
  std::optional<C4Embedding> witness_embedding;
  bool ehp_corollary = false;
};

AehpVerdict decide_aehp(const std::vector<Graph>& forbidden);

/**
 * Whether the graph keeps positive density in every graph limit without a
 * trivial sub-object; for graphs this coincides with membership in the
 * recursive 4-cycle blow-up class.
 */
bool persistent_member(const Graph& g);

}  // namespace limitlab
