#include "limitlab/aehp.hpp"

namespace limitlab {

AehpVerdict decide_aehp(const std::vector<Graph>& forbidden) {
  AehpVerdict verdict;
  for (std::size_t i = 0; i < forbidden.size(); ++i) {
    CcMembership m = is_in_cc(forbidden[i]);
    if (!m.member) continue;
    verdict.holds = true;
    verdict.ehp_corollary = true;
    verdict.witness_index = static_cast<int>(i);
    verdict.witness = forbidden[i];
    verdict.witness_tree = std::move(m.certificate);
    verdict.witness_embedding = embed_into_c4(forbidden[i]);
    break;
  }
  return verdict;
}

bool persistent_member(const Graph& g) { return is_in_cc(g).member; }

}  // namespace limitlab
