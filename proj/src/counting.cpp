#include "limitlab/counting.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <vector>

#include "limitlab/error.hpp"

namespace limitlab {

namespace {

/**
 * Backtracking counter. Pattern vertices are processed in a fixed
 * degree-descending order; for every not-yet-assigned pattern vertex we keep a
 * bitmask of host vertices still compatible with the partial map, so both the
 * edge and the non-edge constraints prune branches as soon as violated. At the
 * last level the remaining candidates are counted by popcount.
 */
class EmbeddingCounter {
 public:
  EmbeddingCounter(const Graph& pattern, const Graph& host)
      : p_(pattern), h_(host), k_(pattern.n()), hw_(host.words()) {
    order_.resize(k_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return p_.degree(a) > p_.degree(b); });
  }

  unsigned long long run() {
    if (k_ == 0) return 1;
    if (k_ > h_.n()) return 0;
    std::vector<std::uint64_t> full(hw_, 0);
    for (int v = 0; v < h_.n(); ++v) full[v >> 6] |= 1ull << (v & 63);
    masks_.assign(static_cast<std::size_t>(k_) * k_ * hw_, 0);
    for (int e = 0; e < k_; ++e)
      std::copy(full.begin(), full.end(), mask_at(0, e));
    count_ = 0;
    descend(0);
    return count_;
  }

 private:
  std::uint64_t* mask_at(int depth, int e) {
    return masks_.data() + (static_cast<std::size_t>(depth) * k_ + e) * hw_;
  }

  void descend(int depth) {
    if (depth == k_ - 1) {
      const std::uint64_t* cand = mask_at(depth, depth);
      for (int w = 0; w < hw_; ++w) count_ += std::popcount(cand[w]);
      return;
    }
    const int pv = order_[depth];
    const std::uint64_t* cand = mask_at(depth, depth);
    for (int w = 0; w < hw_; ++w) {
      std::uint64_t bits = cand[w];
      while (bits) {
        const int v = (w << 6) + std::countr_zero(bits);
        bits &= bits - 1;
        const std::uint64_t* vrow = h_.row(v);
        bool alive = true;
        for (int e = depth + 1; e < k_; ++e) {
          const bool want_edge = p_.adjacent(pv, order_[e]);
          const std::uint64_t* src = mask_at(depth, e);
          std::uint64_t* dst = mask_at(depth + 1, e);
          std::uint64_t any = 0;
          for (int x = 0; x < hw_; ++x) {
            std::uint64_t nm = src[x] & (want_edge ? vrow[x] : ~vrow[x]);
            if (x == w) nm &= ~(1ull << (v & 63));
            dst[x] = nm;
            any |= nm;
          }
          if (any == 0) {
            alive = false;
            break;
          }
        }
        if (alive) descend(depth + 1);
      }
    }
  }

  const Graph& p_;
  const Graph& h_;
  int k_;
  int hw_;
  std::vector<int> order_;
  std::vector<std::uint64_t> masks_;
  unsigned long long count_ = 0;
};

}  // namespace

BigInt count_embeddings(const Graph& pattern, const Graph& host) {
  EmbeddingCounter counter(pattern, host);
  return BigInt(counter.run());
}

BigInt aut_order(const Graph& g) { return count_embeddings(g, g); }

Rational tind(const Graph& pattern, const Graph& host) {
  require(pattern.n() <= host.n(), "size-violation",
          "pattern has more vertices than host");
  if (pattern.n() == 0) return Rational(1);
  return Rational(count_embeddings(pattern, host),
                  falling_factorial(host.n(), pattern.n()));
}

Rational p_density(const Graph& pattern, const Graph& host) {
  require(pattern.n() <= host.n(), "size-violation",
          "pattern has more vertices than host");
  // Subset form: (#embeddings / |Aut|) / (|host| choose |pattern|).
  return Rational(count_embeddings(pattern, host),
                  aut_order(pattern) * binomial(host.n(), pattern.n()));
}

}  // namespace limitlab
