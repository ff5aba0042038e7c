#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "limitlab/error.hpp"
#include "limitlab/graph.hpp"
#include "limitlab/graphon.hpp"
#include "limitlab/rational.hpp"

namespace limitlab {

/**
 * 64-bit finalizing mixer (the splitmix64 step function). All randomness in
 * the harness is derived by xor-chaining labeled inputs through this mixer,
 * which makes every draw a pure, platform-independent function of the seed.
 */
std::uint64_t mix64(std::uint64_t x);

/** Documented stream-splitting rule: mix(mix(mix(seed^tag)^(a+1))^(b+1)). */
std::uint64_t stream_draw(std::uint64_t seed, std::uint64_t tag,
                          std::uint64_t a, std::uint64_t b);

inline constexpr std::uint64_t kTagVertex = 0x7665727465780000ull;  // "vertex"
inline constexpr std::uint64_t kTagPair = 0x7061697200000000ull;    // "pair"
inline constexpr std::uint64_t kTagSample = 0x73616d706c650000ull;  // "sample"

/**
 * W-random graph on n vertices: vertex v (1-based in the stream) draws its
 * part from the cumulative part weights, then each pair u < v draws an edge
 * with the block probability. Both decisions compare a 53-bit uniform draw
 * against exact rational thresholds, so identical seeds give identical graphs
 * on every platform.
 */
Graph sample_graph(const StepGraphon& w, int n, std::uint64_t seed);

/** The per-sample seed used by reports: stream_draw(seed, sample tag, n, j). */
std::uint64_t derive_sample_seed(std::uint64_t base_seed, int size, int index);

struct PatternSummary {
  Graph pattern;
  double mean = 0.0;
  double std_dev = 0.0;    // sample standard deviation across seeds
  double std_error = 0.0;  // std_dev / sqrt(seeds)
  double exact = 0.0;      // graphon-derived target (unlabeled density form)
  bool flagged = false;    // |mean - exact| > 3 * std_dev
};

struct SizeSummary {
  int size = 0;
  std::vector<PatternSummary> patterns;
};

struct SampleReport {
  std::uint64_t seed = 0;
  int samples = 0;
  std::vector<SizeSummary> sizes;
  bool any_flagged = false;
};

/**
 * For each requested size, draw `seeds` independent samples of that size and
 * summarize the unlabeled induced density of each pattern (mean, spread,
 * standard error) against its exact graphon value. A pattern is flagged when
 * the mean drifts from the exact value by more than three per-seed standard
 * deviations. Patterns are limited to 5 vertices.
 */
SampleReport convergence_report(const StepGraphon& w,
                                const std::vector<int>& sizes,
                                const std::vector<Graph>& patterns, int seeds,
                                std::uint64_t base_seed);

struct HostPatternTrace {
  Graph pattern;
  std::vector<Rational> values;  // p(pattern, host_i) per host
  bool convergent = true;
};

struct HostReport {
  std::vector<HostPatternTrace> patterns;
};

/**
 * Exact density traces along an explicitly given host sequence. A pattern is
 * reported non-convergent when the trailing half of its trace still spans
 * more than 1/10 (a fixed diagnostic threshold, not a theorem).
 */
HostReport host_convergence_report(const std::vector<Graph>& hosts,
                                   const std::vector<Graph>& patterns);

struct SplitRecord {
  int pivot = -1;    // pivot vertex
  bool inside = true;  // true: kept A ∩ N[pivot]; false: kept A \ N[pivot]
};

/**
 * Certificate of one almost-uniform part. `split_trace` is the root-to-leaf
 * pivot path: replaying it from the full vertex set (intersecting with the
 * pivot's closed neighborhood when inside, subtracting it otherwise)
 * reproduces `part` exactly.
 */
struct ExtractionResult {
  std::vector<int> part;       // sorted vertices
  Rational internal_density;   // inner edge count / C(|part|,2); 0 below 2
  Rational homogeneity;        // max(density, 1 - density); 1 below 2
  std::vector<SplitRecord> split_trace;
  Rational epsilon;
  int total_splits = 0;        // splits performed over the whole run
  int max_depth = 0;           // deepest leaf of the split tree
};

/**
 * Deterministic discretized good-set extraction. Starting from the full
 * vertex set, a candidate set A is split by the least pivot vertex z (of the
 * whole graph) that sees some but not nearly all of A — precisely,
 * 0 < |N(z) ∩ A| < (1-eps)|A| and A is not contained in N[z] — into
 * A ∩ N[z] and A \ N[z]. Leaves (no pivot applies) partition the vertex set;
 * among them the result maximizes homogeneity, breaking ties by larger size
 * and then lexicographically. Every leaf passes epsilon_good_check with the
 * same eps. Requires 0 < eps < 1/2.
 */
ExtractionResult extract_almost_uniform(const Graph& h, const Rational& epsilon);

/**
 * Whether every vertex z of the graph is adjacent to at most an eps fraction
 * or at least a (1-eps) fraction of U \ {z} (z itself never counts toward its
 * own homogeneity). Throws "bad-request" on an empty U.
 */
bool epsilon_good_check(const Graph& h, const std::vector<int>& subset,
                        const Rational& epsilon);

struct GlueCheckpoint {
  long long m = 0;                 // checkpoint bound m_t
  int source_index = 0;            // which input prefix set was glued here
  long long sym_diff = 0;          // |(U ∩ [m_t]) Δ U_(l_t)|
  long long weak_bound = 0;        // m_(t-1); sym_diff never exceeds it
  bool strong_applicable = false;  // 2^(t-1) * m_(t-1) <= |U_(l_t)|
  bool strong_ok = false;          // sym_diff <= 2^(1-t) * |U_(l_t)|
  Rational upper_density;          // |U ∩ [m_t]| / m_t
};

struct GlueResult {
  std::vector<long long> glued;  // the glued set U, sorted, 1-based
  std::vector<GlueCheckpoint> checkpoints;
};

/**
 * Diagonal gluing of prefix sets: given strictly increasing checkpoint sizes
 * n_l and sets U_l ⊆ [n_l], pick m_0 = n_0 and m_(t+1) = the least n_l with
 * n_l >= 2^t * m_t, then assemble U by taking U_(l_t) on each fresh ring
 * (m_(t-1), m_t]. Reports, per checkpoint, the symmetric-difference bound
 * |(U ∩ [m_t]) Δ U_(l_t)| <= m_(t-1) (always true by construction), the
 * stronger halving bound when the set sizes permit it, and the density of U
 * at the checkpoint.
 */
GlueResult glue_prefix_sets(const std::vector<long long>& checkpoints,
                            const std::vector<std::vector<long long>>& sets);

/**
 * Adjacency oracle for a fixed countable graph on the positive integers,
 * given by a pure symmetric irreflexive predicate, together with the
 * one-vertex block-membership predicate that structures the built-in family.
 */
struct PrefixGraphOracle {
  std::string name;
  std::function<bool(long long, long long)> adjacent;
  std::function<bool(long long)> member;
};

/**
 * Built-in countable examples. "union-of-log-cliques": vertex v belongs to
 * the clique exactly when floor(sqrt(floor(log2 v))) is even, and two
 * distinct vertices are adjacent exactly when both belong; the graph is a
 * clique on the members plus isolated vertices, and its prefix edge
 * densities oscillate between near 0 and near 1 forever.
 * Throws "unknown-name" for anything else.
 */
PrefixGraphOracle countable_example_oracle(const std::string& name);

/** Number of members among 1..n (exact, via the block structure). */
long long prefix_member_count(const PrefixGraphOracle& oracle, long long n);

/** The members among 1..n, sorted. */
std::vector<long long> prefix_member_set(const PrefixGraphOracle& oracle,
                                         long long n);

/**
 * Exact edge density of the prefix on [n] for oracles whose adjacency is
 * "both endpoints are members": C(members, 2) / C(n, 2). Requires n >= 2.
 */
Rational prefix_edge_density(const PrefixGraphOracle& oracle, long long n);

/**
 * Materialize the prefix graph on [n]. Memory grows quadratically; n is
 * capped at 100000 and by the budget.
 */
Graph prefix_graph(const PrefixGraphOracle& oracle, int n,
                   std::uint64_t vertex_budget = kDefaultVertexBudget);

}  // namespace limitlab
