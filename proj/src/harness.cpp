#include "limitlab/harness.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "limitlab/counting.hpp"

namespace limitlab {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t stream_draw(std::uint64_t seed, std::uint64_t tag,
                          std::uint64_t a, std::uint64_t b) {
  return mix64(mix64(mix64(seed ^ tag) ^ (a + 1)) ^ (b + 1));
}

namespace {

constexpr int kDrawBits = 53;

/** Exact Bernoulli: top-53-bit draw k fires iff k < p * 2^53, as integers. */
bool bernoulli_exact(std::uint64_t raw, const Rational& p) {
  const BigInt k = BigInt(raw >> (64 - kDrawBits));
  return k * p.den() < p.num() << kDrawBits;
}

}  // namespace

Graph sample_graph(const StepGraphon& w, int n, std::uint64_t seed) {
  w.validate();
  require(n >= 0, "bad-request", "sample size must be nonnegative");
  const int m = w.part_count();
  // Cumulative thresholds c_i; vertex part = least i with draw < c_i * 2^53.
  std::vector<BigInt> cum_num(m), cum_den(m);
  Rational cum(0);
  for (int i = 0; i < m; ++i) {
    cum += w.parts[i];
    cum_num[i] = cum.num() << kDrawBits;
    cum_den[i] = cum.den();
  }
  std::vector<int> part_of(n, 0);
  for (int v = 1; v <= n; ++v) {
    const BigInt k =
        BigInt(stream_draw(seed, kTagVertex, static_cast<std::uint64_t>(v), 0) >>
               (64 - kDrawBits));
    int chosen = m - 1;
    for (int i = 0; i < m; ++i) {
      if (k * cum_den[i] < cum_num[i]) {
        chosen = i;
        break;
      }
    }
    part_of[v - 1] = chosen;
  }
  Graph g(n);
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) {
      const Rational& p = w.values[part_of[u - 1]][part_of[v - 1]];
      if (p.is_zero()) continue;
      if (bernoulli_exact(stream_draw(seed, kTagPair,
                                      static_cast<std::uint64_t>(u),
                                      static_cast<std::uint64_t>(v)),
                          p))
        g.add_edge(u - 1, v - 1);
    }
  return g;
}

std::uint64_t derive_sample_seed(std::uint64_t base_seed, int size, int index) {
  return stream_draw(base_seed, kTagSample, static_cast<std::uint64_t>(size),
                     static_cast<std::uint64_t>(index));
}

SampleReport convergence_report(const StepGraphon& w,
                                const std::vector<int>& sizes,
                                const std::vector<Graph>& patterns, int seeds,
                                std::uint64_t base_seed) {
  w.validate();
  require(seeds >= 2, "bad-request", "need at least 2 seeds for a spread");
  for (const Graph& p : patterns)
    require(p.n() >= 1 && p.n() <= 5, "size-violation",
            "report patterns are limited to 1..5 vertices");
  SampleReport report;
  report.seed = base_seed;
  report.samples = seeds;
  // Unlabeled-density target: |M|!/|Aut(M)| times the labeled graphon density.
  std::vector<double> exact;
  for (const Graph& p : patterns) {
    Rational t = tind_graphon(p, w) * Rational(factorial(p.n()), aut_order(p));
    exact.push_back(t.to_double());
  }
  for (int n : sizes) {
    require(n >= 1, "bad-request", "sample sizes must be positive");
    SizeSummary size_summary;
    size_summary.size = n;
    std::vector<std::vector<double>> values(patterns.size());
    for (int j = 0; j < seeds; ++j) {
      Graph sample = sample_graph(w, n, derive_sample_seed(base_seed, n, j));
      for (std::size_t pi = 0; pi < patterns.size(); ++pi) {
        require(patterns[pi].n() <= n, "size-violation",
                "pattern larger than sample size");
        values[pi].push_back(p_density(patterns[pi], sample).to_double());
      }
    }
    for (std::size_t pi = 0; pi < patterns.size(); ++pi) {
      PatternSummary s;
      s.pattern = patterns[pi];
      double sum = 0;
      for (double v : values[pi]) sum += v;
      s.mean = sum / seeds;
      double sq = 0;
      for (double v : values[pi]) sq += (v - s.mean) * (v - s.mean);
      s.std_dev = std::sqrt(sq / (seeds - 1));
      s.std_error = s.std_dev / std::sqrt(static_cast<double>(seeds));
      s.exact = exact[pi];
      s.flagged = std::abs(s.mean - s.exact) > 3 * s.std_dev;
      report.any_flagged = report.any_flagged || s.flagged;
      size_summary.patterns.push_back(std::move(s));
    }
    report.sizes.push_back(std::move(size_summary));
  }
  return report;
}

HostReport host_convergence_report(const std::vector<Graph>& hosts,
                                   const std::vector<Graph>& patterns) {
  require(!hosts.empty(), "bad-request", "need at least one host");
  HostReport report;
  const Rational threshold(BigInt(1), BigInt(10));
  for (const Graph& p : patterns) {
    HostPatternTrace trace;
    trace.pattern = p;
    for (const Graph& h : hosts) trace.values.push_back(p_density(p, h));
    const std::size_t tail_start = trace.values.size() / 2;
    Rational lo = trace.values[tail_start], hi = trace.values[tail_start];
    for (std::size_t i = tail_start; i < trace.values.size(); ++i) {
      lo = std::min(lo, trace.values[i]);
      hi = std::max(hi, trace.values[i]);
    }
    trace.convergent = hi - lo <= threshold;
    report.patterns.push_back(std::move(trace));
  }
  return report;
}

namespace {

Rational internal_density_of(const Graph& g, const std::vector<int>& part) {
  const long long k = static_cast<long long>(part.size());
  if (k < 2) return Rational(0);
  long long edges = 0;
  for (std::size_t i = 0; i < part.size(); ++i)
    for (std::size_t j = i + 1; j < part.size(); ++j)
      if (g.adjacent(part[i], part[j])) ++edges;
  return Rational(BigInt(edges), BigInt(k * (k - 1) / 2));
}

struct Leaf {
  std::vector<int> part;
  std::vector<SplitRecord> trace;
  int depth = 0;
};

}  // namespace

ExtractionResult extract_almost_uniform(const Graph& h, const Rational& epsilon) {
  require(epsilon.sign() > 0 && epsilon < Rational(BigInt(1), BigInt(2)),
          "bad-request", "epsilon must lie strictly between 0 and 1/2");
  require(h.n() >= 1, "bad-request", "graph must have at least one vertex");
  const Rational one_minus(Rational(1) - epsilon);

  std::vector<Leaf> pending, leaves;
  Leaf root;
  root.part.resize(h.n());
  for (int v = 0; v < h.n(); ++v) root.part[v] = v;
  pending.push_back(std::move(root));
  int total_splits = 0;

  while (!pending.empty()) {
    Leaf cur = std::move(pending.back());
    pending.pop_back();
    const long long a = static_cast<long long>(cur.part.size());
    int pivot = -1;
    for (int z = 0; z < h.n() && pivot < 0; ++z) {
      long long deg = 0;
      bool misses_one = false;
      for (int v : cur.part) {
        if (v == z) continue;
        if (h.adjacent(z, v)) ++deg;
        else misses_one = true;
      }
      // Pivot rule: z sees part of A but not nearly all of it, and A is not
      // contained in N[z] (so both split sides are nonempty).
      if (deg > 0 && Rational(deg) < one_minus * Rational(a) && misses_one)
        pivot = z;
    }
    if (pivot < 0) {
      leaves.push_back(std::move(cur));
      continue;
    }
    ++total_splits;
    Leaf inside, outside;
    for (int v : cur.part) {
      if (v == pivot || h.adjacent(pivot, v)) inside.part.push_back(v);
      else outside.part.push_back(v);
    }
    inside.trace = cur.trace;
    inside.trace.push_back({pivot, true});
    inside.depth = cur.depth + 1;
    outside.trace = std::move(cur.trace);
    outside.trace.push_back({pivot, false});
    outside.depth = cur.depth + 1;
    pending.push_back(std::move(inside));
    pending.push_back(std::move(outside));
  }

  ExtractionResult best;
  best.epsilon = epsilon;
  best.total_splits = total_splits;
  Rational best_hom(-1);
  for (Leaf& leaf : leaves) {
    best.max_depth = std::max(best.max_depth, leaf.depth);
    std::sort(leaf.part.begin(), leaf.part.end());
    Rational density = internal_density_of(h, leaf.part);
    Rational hom = leaf.part.size() < 2
                       ? Rational(1)
                       : std::max(density, Rational(1) - density);
    const bool better =
        hom > best_hom ||
        (hom == best_hom && (leaf.part.size() > best.part.size() ||
                             (leaf.part.size() == best.part.size() &&
                              leaf.part < best.part)));
    if (better) {
      best.part = leaf.part;
      best.internal_density = density;
      best.homogeneity = hom;
      best.split_trace = leaf.trace;
      best_hom = hom;
    }
  }
  return best;
}

bool epsilon_good_check(const Graph& h, const std::vector<int>& subset,
                        const Rational& epsilon) {
  require(!subset.empty(), "bad-request", "subset must be nonempty");
  require(epsilon.sign() >= 0 && epsilon <= Rational(1), "bad-request",
          "epsilon must lie in [0,1]");
  for (int v : subset)
    require(v >= 0 && v < h.n(), "invalid-vertex", "subset vertex out of range");
  for (int z = 0; z < h.n(); ++z) {
    long long deg = 0, others = 0;
    for (int v : subset) {
      if (v == z) continue;
      ++others;
      if (h.adjacent(z, v)) ++deg;
    }
    if (others == 0) continue;
    const Rational d(deg), m(others);
    if (d <= epsilon * m) continue;
    if (d >= (Rational(1) - epsilon) * m) continue;
    return false;
  }
  return true;
}

GlueResult glue_prefix_sets(const std::vector<long long>& checkpoints,
                            const std::vector<std::vector<long long>>& sets) {
  require(!checkpoints.empty(), "bad-request", "need at least one checkpoint");
  require(checkpoints.size() == sets.size(), "bad-request",
          "need exactly one prefix set per checkpoint");
  for (std::size_t i = 0; i < checkpoints.size(); ++i) {
    require(checkpoints[i] >= 1, "bad-request", "checkpoints must be positive");
    require(i == 0 || checkpoints[i] > checkpoints[i - 1], "bad-request",
            "checkpoints must be strictly increasing");
    for (long long v : sets[i])
      require(v >= 1 && v <= checkpoints[i], "bad-request",
              "set elements must lie in [1, checkpoint]");
  }
  std::vector<std::set<long long>> prefix_sets;
  prefix_sets.reserve(sets.size());
  for (const auto& s : sets) prefix_sets.emplace_back(s.begin(), s.end());

  // The m_t subsequence: m_0 = n_0; m_(t+1) = least n_l >= 2^t * m_t.
  const long long max_cp = checkpoints.back();
  std::vector<long long> m = {checkpoints[0]};
  std::vector<int> source = {0};
  while (true) {
    const int t = static_cast<int>(m.size()) - 1;
    if (t >= 62 || m.back() > (max_cp >> t)) break;  // 2^t * m_t beyond inputs
    const long long target = m.back() << t;
    auto it = std::lower_bound(checkpoints.begin(), checkpoints.end(), target);
    if (it == checkpoints.end()) break;
    m.push_back(*it);
    source.push_back(static_cast<int>(it - checkpoints.begin()));
  }

  GlueResult result;
  std::set<long long> glued;
  for (std::size_t t = 0; t < m.size(); ++t) {
    const long long lo = t == 0 ? 0 : m[t - 1];  // ring (m_(t-1), m_t]
    const std::set<long long>& u_t = prefix_sets[source[t]];
    for (long long v : u_t)
      if (v > lo && v <= m[t]) glued.insert(v);

    GlueCheckpoint cp;
    cp.m = m[t];
    cp.source_index = source[t];
    cp.weak_bound = lo;
    long long in_prefix = 0, in_both = 0;
    for (long long v : glued)
      if (v <= m[t]) {
        ++in_prefix;
        if (u_t.count(v)) ++in_both;
      }
    cp.sym_diff = (in_prefix - in_both) +
                  (static_cast<long long>(u_t.size()) - in_both);
    // Structural inequality: the glued set agrees with U_(l_t) on the fresh
    // ring, so the difference lives inside [m_(t-1)].
    require(cp.sym_diff <= cp.weak_bound || t == 0, "bad-request",
            "internal error: gluing inequality violated");
    if (t >= 1) {
      // sym_diff <= 2^(1-t)|U|  <=>  2^(t-1) sym_diff <= |U|; kept exact.
      const BigInt rhs(static_cast<long long>(u_t.size()));
      cp.strong_applicable = BigInt(cp.weak_bound) << (t - 1) <= rhs;
      cp.strong_ok = BigInt(cp.sym_diff) << (t - 1) <= rhs;
    }
    cp.upper_density = Rational(BigInt(in_prefix), BigInt(m[t]));
    result.checkpoints.push_back(std::move(cp));
  }
  result.glued.assign(glued.begin(), glued.end());
  return result;
}

namespace {

bool log_block_member(long long v) {
  // floor(sqrt(floor(log2 v))) is even.
  int k = 0;
  while ((v >> (k + 1)) != 0) ++k;
  const int j = static_cast<int>(std::sqrt(static_cast<double>(k)));
  // Guard against floating point at perfect squares.
  int jj = j;
  while (static_cast<long long>(jj + 1) * (jj + 1) <= k) ++jj;
  while (jj > 0 && static_cast<long long>(jj) * jj > k) --jj;
  return jj % 2 == 0;
}

}  // namespace

PrefixGraphOracle countable_example_oracle(const std::string& name) {
  require(name == "union-of-log-cliques", "unknown-name",
          "unknown countable example: " + name);
  PrefixGraphOracle oracle;
  oracle.name = name;
  oracle.member = [](long long v) { return v >= 1 && log_block_member(v); };
  oracle.adjacent = [](long long v, long long w) {
    return v >= 1 && w >= 1 && v != w && log_block_member(v) &&
           log_block_member(w);
  };
  return oracle;
}

long long prefix_member_count(const PrefixGraphOracle& oracle, long long n) {
  require(n >= 0, "bad-request", "prefix length must be nonnegative");
  require(oracle.name == "union-of-log-cliques", "unknown-name",
          "closed-form member counting only covers the built-in example");
  // Members fill the vertex blocks [2^(j^2), 2^((j+1)^2)) for even j.
  long long count = 0;
  for (int j = 0; static_cast<long long>(j) * j <= 62; j += 2) {
    const long long lo = 1ll << (static_cast<long long>(j) * j);
    if (lo > n) break;
    const long long next_exp = static_cast<long long>(j + 1) * (j + 1);
    const long long hi = next_exp > 62 ? n : std::min(n, (1ll << next_exp) - 1);
    count += hi - lo + 1;
  }
  return count;
}

std::vector<long long> prefix_member_set(const PrefixGraphOracle& oracle,
                                         long long n) {
  std::vector<long long> out;
  for (long long v = 1; v <= n; ++v)
    if (oracle.member(v)) out.push_back(v);
  return out;
}

Rational prefix_edge_density(const PrefixGraphOracle& oracle, long long n) {
  require(n >= 2, "bad-request", "density needs at least two vertices");
  const BigInt members(prefix_member_count(oracle, n));
  const BigInt total = BigInt(n) * (n - 1) / 2;
  return Rational(members * (members - 1) / 2, total);
}

Graph prefix_graph(const PrefixGraphOracle& oracle, int n,
                   std::uint64_t vertex_budget) {
  require(n >= 0, "bad-request", "prefix length must be nonnegative");
  require(n <= 100000, "size-violation",
          "prefix graphs are materialized only up to 100000 vertices");
  require(static_cast<std::uint64_t>(n) <= vertex_budget, "budget-exceeded",
          "prefix graph exceeds the vertex budget");
  Graph g(n);
  std::vector<long long> members;
  for (long long v = 1; v <= n; ++v)
    if (oracle.member(v)) members.push_back(v);
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      g.add_edge(static_cast<int>(members[i] - 1),
                 static_cast<int>(members[j] - 1));
  return g;
}

}  // namespace limitlab
