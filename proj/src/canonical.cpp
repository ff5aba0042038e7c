#include "limitlab/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "limitlab/counting.hpp"
#include "limitlab/error.hpp"

namespace limitlab {

namespace {

std::string encode_with_order(const Graph& g, const std::vector<int>& order) {
  std::string enc;
  enc.reserve(static_cast<std::size_t>(g.n()) * (g.n() - 1) / 2);
  for (int j = 1; j < g.n(); ++j)
    for (int i = 0; i < j; ++i)
      enc.push_back(g.adjacent(order[i], order[j]) ? '1' : '0');
  return enc;
}

/**
 * Depth-first minimization: positions are filled left to right; a partial
 * ordering is abandoned as soon as the encoding column it just produced
 * exceeds the corresponding segment of the best encoding found so far.
 */
class Canonicalizer {
 public:
  explicit Canonicalizer(const Graph& g) : g_(g), n_(g.n()) {}

  CanonicalForm run() {
    CanonicalForm out;
    out.n = n_;
    if (n_ == 0) return out;
    best_order_.resize(n_);
    std::iota(best_order_.begin(), best_order_.end(), 0);
    best_ = encode_with_order(g_, best_order_);
    place_.assign(n_, -1);
    used_.assign(n_, false);
    current_.clear();
    descend(0, true);
    out.encoding = best_;
    out.relabel = best_order_;
    return out;
  }

 private:
  void descend(int pos, bool tight) {
    if (pos == n_) {
      // Full comparison: `tight` may be stale once a descendant has already
      // replaced best_, so it must not justify the update by itself.
      if (current_ < best_) {
        best_ = current_;
        best_order_ = place_;
      }
      return;
    }
    const std::size_t offset = current_.size();
    for (int u = 0; u < n_; ++u) {
      if (used_[u]) continue;
      bool child_tight = tight;
      bool prune = false;
      for (int i = 0; i < pos && !prune; ++i) {
        const char bit = g_.adjacent(place_[i], u) ? '1' : '0';
        if (child_tight) {
          const char ref = best_[offset + i];
          if (bit > ref) prune = true;
          else if (bit < ref) child_tight = false;
        }
        if (!prune) current_.push_back(bit);
      }
      if (!prune) {
        used_[u] = true;
        place_[pos] = u;
        descend(pos + 1, child_tight);
        place_[pos] = -1;
        used_[u] = false;
      }
      current_.resize(offset);
    }
  }

  const Graph& g_;
  int n_;
  std::string best_;
  std::vector<int> best_order_;
  std::vector<int> place_;
  std::vector<bool> used_;
  std::string current_;
};

}  // namespace

Graph CanonicalForm::graph() const {
  Graph g(n);
  std::size_t pos = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (encoding[pos++] == '1') g.add_edge(i, j);
  return g;
}

CanonicalForm canonical_form(const Graph& g) {
  require(g.n() <= 10, "size-violation",
          "canonical_form supports at most 10 vertices");
  return Canonicalizer(g).run();
}

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.n() != b.n()) return false;
  if (a.edge_count() != b.edge_count()) return false;
  return count_embeddings(a, b) > 0;
}

std::vector<CanonicalForm> enumerate_iso_classes(int n) {
  require(n >= 0 && n <= 7, "size-violation",
          "iso-class enumeration supports at most 7 vertices");
  std::vector<Graph> reps = {Graph(0)};
  for (int k = 0; k < n; ++k) {
    std::map<std::string, Graph> next;
    for (const Graph& r : reps) {
      for (unsigned subset = 0; subset < (1u << k); ++subset) {
        Graph ext(k + 1);
        for (auto [u, v] : r.edges()) ext.add_edge(u, v);
        for (int v = 0; v < k; ++v)
          if ((subset >> v) & 1) ext.add_edge(v, k);
        CanonicalForm cf = canonical_form(ext);
        next.emplace(cf.encoding, cf.graph());
      }
    }
    reps.clear();
    for (auto& [enc, g] : next) reps.push_back(g);
  }
  std::vector<CanonicalForm> out;
  out.reserve(reps.size());
  for (const Graph& g : reps) out.push_back(canonical_form(g));
  return out;
}

std::vector<Graph> enumerate_iso_class_graphs(int n) {
  std::vector<Graph> out;
  for (const CanonicalForm& cf : enumerate_iso_classes(n)) out.push_back(cf.graph());
  return out;
}

}  // namespace limitlab
