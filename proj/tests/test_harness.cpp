#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "limitlab/counting.hpp"
#include "limitlab/error.hpp"
#include "limitlab/graphon.hpp"
#include "limitlab/harness.hpp"
#include "limitlab/stability.hpp"
#include "limitlab/structure.hpp"
#include "oracles.hpp"

using namespace limitlab;

TEST_CASE("the mixer matches its reference vectors") {
  // First three outputs of the reference splitmix64 stepping from state 0:
  // the finalizer applied to 0, 1, and an arbitrary 64-bit probe.
  CHECK(mix64(0) == 0xe220a8397b1dcdafull);
  CHECK(mix64(1) == 0x910a2dec89025cc1ull);
  CHECK(mix64(0x123456789abcdef0ull) == 0x161922c645ce50e8ull);
}

TEST_CASE("stream draws are frozen against accidental reseeding") {
  CHECK(stream_draw(1, kTagPair, 1, 2) == 0x52f9a314b9555415ull);
  CHECK(stream_draw(42, kTagSample, 100, 7) == 0x2a2f1e8b9b0c4bc3ull);
  CHECK(derive_sample_seed(1, 200, 0) == 0xfffd1509290ca21eull);
  // Distinct tags must give distinct streams for the same arguments.
  CHECK(stream_draw(1, kTagPair, 1, 2) != stream_draw(1, kTagVertex, 1, 2));
  CHECK(stream_draw(1, kTagPair, 1, 2) != stream_draw(2, kTagPair, 1, 2));
}

TEST_CASE("degenerate edge probabilities sample deterministic graphs") {
  CHECK(sample_graph(constant_graphon(Rational(1)), 5, 99) ==
        Graph::complete(5));
  CHECK(sample_graph(constant_graphon(Rational(0)), 5, 99) == Graph(5));
  CHECK(sample_graph(constant_graphon(Rational(1, 2)), 0, 99) == Graph(0));
  CHECK_THROWS_AS(sample_graph(constant_graphon(Rational(1, 2)), -1, 0), Error);
}

TEST_CASE("sampling is deterministic in the seed") {
  const StepGraphon w = c4_step_approx(1);
  const Graph a = sample_graph(w, 100, 12345);
  const Graph b = sample_graph(w, 100, 12345);
  const Graph c = sample_graph(w, 100, 12346);
  CHECK(a == b);
  CHECK(a.edge_count() == 3089);  // frozen; expectation is 3093.75
  CHECK(c.edge_count() == 3117);  // frozen
  CHECK_FALSE(a == c);
}

TEST_CASE("two-part samples respect the block structure") {
  // Two equal parts, within-part probability 1, across 0: every sample is a
  // disjoint union of two cliques.
  StepGraphon w;
  w.parts = {Rational(1, 2), Rational(1, 2)};
  w.values = {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
  const Graph g = sample_graph(w, 40, 7);
  // Vertices classify by their part through complete/empty neighborhoods.
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      for (int x = v + 1; x < g.n(); ++x) {
        // No induced path on any triple: components stay complete.
        const int deg3 = (g.adjacent(u, v) ? 1 : 0) +
                         (g.adjacent(u, x) ? 1 : 0) +
                         (g.adjacent(v, x) ? 1 : 0);
        CHECK(deg3 != 2);
      }
}

TEST_CASE("convergence report summarizes spread against exact values") {
  const StepGraphon w = c4_step_approx(1);
  const std::vector<Graph> patterns = {Graph::complete(2), Graph::complete(3)};
  const SampleReport r = convergence_report(w, {60}, patterns, 10, 2026);
  CHECK(r.seed == 2026);
  CHECK(r.samples == 10);
  REQUIRE(r.sizes.size() == 1);
  CHECK(r.sizes[0].size == 60);
  REQUIRE(r.sizes[0].patterns.size() == 2);

  const PatternSummary& edge = r.sizes[0].patterns[0];
  CHECK(edge.exact == doctest::Approx(0.625).epsilon(1e-12));
  CHECK_FALSE(edge.flagged);
  CHECK(edge.std_error == doctest::Approx(edge.std_dev / std::sqrt(10.0)));

  const PatternSummary& triangle = r.sizes[0].patterns[1];
  CHECK(triangle.exact == doctest::Approx(25.0 / 128.0).epsilon(1e-12));
  CHECK_FALSE(triangle.flagged);
  CHECK_FALSE(r.any_flagged);
}

TEST_CASE("a zero-variance report never flags") {
  const SampleReport r = convergence_report(constant_graphon(Rational(1)), {10},
                                            {Graph::complete(2)}, 5, 1);
  const PatternSummary& s = r.sizes[0].patterns[0];
  CHECK(s.mean == 1.0);
  CHECK(s.std_dev == 0.0);
  CHECK(s.exact == 1.0);
  CHECK_FALSE(s.flagged);
  CHECK_FALSE(r.any_flagged);
}

TEST_CASE("convergence report argument guards") {
  const StepGraphon w = constant_graphon(Rational(1, 2));
  CHECK_THROWS_AS(convergence_report(w, {10}, {Graph::complete(2)}, 1, 0),
                  Error);
  CHECK_THROWS_AS(convergence_report(w, {10}, {Graph::complete(6)}, 5, 0),
                  Error);
  CHECK_THROWS_AS(convergence_report(w, {0}, {Graph::complete(2)}, 5, 0),
                  Error);
  CHECK_THROWS_AS(convergence_report(w, {3}, {Graph::complete(4)}, 5, 0),
                  Error);
}

TEST_CASE("host traces distinguish oscillation from convergence") {
  const Graph k6 = Graph::complete(6);
  const Graph e6 = Graph(6);
  const HostReport osc =
      host_convergence_report({k6, e6, k6, e6, k6, e6}, {Graph::complete(2)});
  REQUIRE(osc.patterns.size() == 1);
  CHECK_FALSE(osc.patterns[0].convergent);
  CHECK(osc.patterns[0].values ==
        std::vector<Rational>{Rational(1), Rational(0), Rational(1),
                              Rational(0), Rational(1), Rational(0)});

  const std::vector<Graph> blowups = {recursive_blowup(Graph::cycle(4), 1),
                                      recursive_blowup(Graph::cycle(4), 2),
                                      recursive_blowup(Graph::cycle(4), 3)};
  const HostReport steady =
      host_convergence_report(blowups, {Graph::complete(2)});
  CHECK(steady.patterns[0].convergent);
  for (const Rational& v : steady.patterns[0].values)
    CHECK(v == Rational(2, 3));

  CHECK_THROWS_AS(host_convergence_report({}, {Graph::complete(2)}), Error);
}

TEST_CASE("extraction pulls a whole block out of a union of cliques") {
  const Graph three_k4 = disjoint_union(
      disjoint_union(Graph::complete(4), Graph::complete(4)),
      Graph::complete(4));
  const ExtractionResult r =
      extract_almost_uniform(three_k4, Rational(1, 4));
  CHECK(r.part == std::vector<int>{0, 1, 2, 3});
  CHECK(r.internal_density == Rational(1));
  CHECK(r.homogeneity == Rational(1));
  CHECK(r.total_splits == 2);
  CHECK(r.max_depth == 2);
  CHECK(r.split_trace.size() == 1);
  CHECK(r.total_splits <= three_k4.n() - 1);
  CHECK(oracle::replay_extraction(three_k4, r.split_trace) == r.part);
  CHECK(epsilon_good_check(three_k4, r.part, r.epsilon));
}

TEST_CASE("an edgeless graph is already one good set") {
  const ExtractionResult r = extract_almost_uniform(Graph(6), Rational(1, 4));
  CHECK(r.part == std::vector<int>{0, 1, 2, 3, 4, 5});
  CHECK(r.total_splits == 0);
  CHECK(r.split_trace.empty());
  CHECK(r.homogeneity == Rational(1));
  CHECK(r.internal_density == Rational(0));
}

TEST_CASE("a half-graph host fragments into small homogeneous pieces") {
  const Graph h8 = clique_empty_halfgraph(8);
  const ExtractionResult r = extract_almost_uniform(h8, Rational(1, 4));
  CHECK(r.part == std::vector<int>{7, 15});  // frozen winner
  CHECK(r.homogeneity == Rational(1));
  CHECK(r.internal_density == Rational(1));
  CHECK(r.total_splits == 14);
  CHECK(r.max_depth == 9);
  CHECK(r.total_splits <= h8.n() - 1);
  CHECK(oracle::replay_extraction(h8, r.split_trace) == r.part);
  CHECK(epsilon_good_check(h8, r.part, r.epsilon));
  // Depth stays far inside the doubly exponential sufficient bound.
  CHECK(r.max_depth < tree_bound_from_stability(8));
}

TEST_CASE("extraction replay holds on random graphs") {
  std::mt19937_64 rng(515);
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = oracle::random_graph(12, 0.4, rng);
    const ExtractionResult r = extract_almost_uniform(g, Rational(1, 5));
    CHECK_FALSE(r.part.empty());
    CHECK(r.total_splits <= g.n() - 1);
    CHECK(oracle::replay_extraction(g, r.split_trace) == r.part);
    CHECK(epsilon_good_check(g, r.part, r.epsilon));
  }
}

TEST_CASE("extraction rejects out-of-range tolerance") {
  CHECK_THROWS_AS(extract_almost_uniform(Graph::complete(3), Rational(0)),
                  Error);
  CHECK_THROWS_AS(extract_almost_uniform(Graph::complete(3), Rational(1, 2)),
                  Error);
  CHECK_THROWS_AS(extract_almost_uniform(Graph(0), Rational(1, 4)), Error);
}

TEST_CASE("goodness check worked examples") {
  // One clique of a two-clique union is exactly uniform: fine even at eps 0.
  const Graph two_k4 =
      disjoint_union(Graph::complete(4), Graph::complete(4));
  CHECK(epsilon_good_check(two_k4, {0, 1, 2, 3}, Rational(0)));
  CHECK(epsilon_good_check(Graph::complete(4), {0, 1, 2, 3}, Rational(0)));

  // The clique side of a clique-over-empty graph fails: middle y-vertices
  // see about half of it.
  const Graph h6 = clique_empty_halfgraph(6);
  std::vector<int> x_side = {0, 1, 2, 3, 4, 5};
  CHECK_FALSE(epsilon_good_check(h6, x_side, Rational(1, 8)));

  // The full vertex set of the order-2 graph fails as well.
  const Graph h2 = clique_empty_halfgraph(2);
  CHECK_FALSE(epsilon_good_check(h2, {0, 1, 2, 3}, Rational(1, 8)));

  CHECK_THROWS_AS(epsilon_good_check(h2, {}, Rational(1, 8)), Error);
  CHECK_THROWS_AS(epsilon_good_check(h2, {4}, Rational(1, 8)), Error);
  CHECK_THROWS_AS(epsilon_good_check(h2, {0}, Rational(2)), Error);
}

TEST_CASE("gluing a single prefix set keeps it unchanged") {
  const GlueResult r = glue_prefix_sets({5}, {{1, 3, 5}});
  CHECK(r.glued == std::vector<long long>{1, 3, 5});
  // The m-sequence always revisits m_0 once: the t = 0 target is m_0 itself,
  // so the lone checkpoint yields a seed record plus one empty-ring record.
  REQUIRE(r.checkpoints.size() == 2);
  CHECK(r.checkpoints[0].m == 5);
  CHECK(r.checkpoints[0].source_index == 0);
  CHECK(r.checkpoints[0].sym_diff == 0);
  CHECK(r.checkpoints[0].weak_bound == 0);
  CHECK(r.checkpoints[0].upper_density == Rational(3, 5));
  CHECK(r.checkpoints[1].m == 5);
  CHECK(r.checkpoints[1].source_index == 0);
  CHECK(r.checkpoints[1].weak_bound == 5);
  CHECK(r.checkpoints[1].sym_diff == 0);
  CHECK_FALSE(r.checkpoints[1].strong_applicable);
  CHECK(r.checkpoints[1].strong_ok);
  CHECK(r.checkpoints[1].upper_density == Rational(3, 5));
}

TEST_CASE("gluing the built-in oracle prefixes at doubling checkpoints") {
  const PrefixGraphOracle oracle =
      countable_example_oracle("union-of-log-cliques");
  const std::vector<long long> cps = {1, 2, 4, 8, 16};
  std::vector<std::vector<long long>> sets;
  for (long long cp : cps) sets.push_back(prefix_member_set(oracle, cp));
  const GlueResult r = glue_prefix_sets(cps, sets);

  // m-sequence 1, 1, 2, 8 with sources 0, 0, 1, 3.
  REQUIRE(r.checkpoints.size() == 4);
  CHECK(r.checkpoints[0].m == 1);
  CHECK(r.checkpoints[1].m == 1);
  CHECK(r.checkpoints[2].m == 2);
  CHECK(r.checkpoints[3].m == 8);
  CHECK(r.checkpoints[1].source_index == 0);
  CHECK(r.checkpoints[2].source_index == 1);
  CHECK(r.checkpoints[3].source_index == 3);
  CHECK(r.glued == std::vector<long long>{1});

  for (const GlueCheckpoint& cp : r.checkpoints) CHECK(cp.sym_diff == 0);
  // t = 1: both strong conditions hold (2^0 * 1 <= |U_0| = 1).
  CHECK(r.checkpoints[1].strong_applicable);
  CHECK(r.checkpoints[1].strong_ok);
  // t = 3: |U_3| = 1 < 2^2 * 2, so the strong bound is not applicable.
  CHECK_FALSE(r.checkpoints[3].strong_applicable);
  CHECK(r.checkpoints[3].upper_density == Rational(1, 8));
}

TEST_CASE("glue argument guards") {
  CHECK_THROWS_AS(glue_prefix_sets({}, {}), Error);
  CHECK_THROWS_AS(glue_prefix_sets({1, 1}, {{1}, {1}}), Error);
  CHECK_THROWS_AS(glue_prefix_sets({2, 1}, {{1}, {1}}), Error);
  CHECK_THROWS_AS(glue_prefix_sets({2}, {{3}}), Error);   // beyond checkpoint
  CHECK_THROWS_AS(glue_prefix_sets({2}, {{0}}), Error);   // below 1
  CHECK_THROWS_AS(glue_prefix_sets({2}, {{1}, {2}}), Error);  // length mismatch
}

TEST_CASE("the built-in countable example and its prefix statistics") {
  const PrefixGraphOracle oracle =
      countable_example_oracle("union-of-log-cliques");
  CHECK(oracle.member(1));
  CHECK_FALSE(oracle.member(2));
  CHECK_FALSE(oracle.member(15));
  CHECK(oracle.member(16));
  CHECK(oracle.member(511));
  CHECK_FALSE(oracle.member(512));
  CHECK_FALSE(oracle.member(0));
  CHECK(oracle.adjacent(1, 16));
  CHECK_FALSE(oracle.adjacent(1, 2));
  CHECK_FALSE(oracle.adjacent(16, 16));

  CHECK(prefix_member_set(oracle, 17) == std::vector<long long>{1, 16, 17});
  CHECK(prefix_member_count(oracle, 511) == 497);
  CHECK(prefix_member_count(oracle, 65535) == 497);
  CHECK(prefix_member_count(oracle, 100000) == 34962);
  CHECK(prefix_edge_density(oracle, 511) == Rational(17608, 18615));
  CHECK(prefix_edge_density(oracle, 100000) ==
        Rational(203717747, 1666650000));
}

TEST_CASE("prefix graphs materialize as clique plus isolated vertices") {
  const PrefixGraphOracle oracle =
      countable_example_oracle("union-of-log-cliques");
  const Graph g = prefix_graph(oracle, 20);
  CHECK(g.n() == 20);
  CHECK(g.edge_count() == 15);  // six members 1, 16..20 -> C(6,2)
  CHECK(g.adjacent(0, 15));     // vertices are 1-based in oracle terms
  CHECK_FALSE(g.adjacent(1, 15));

  CHECK_THROWS_AS(prefix_graph(oracle, 100001), Error);
  CHECK_THROWS_AS(prefix_graph(oracle, 50, 10), Error);
  CHECK_THROWS_AS(countable_example_oracle("no-such-family"), Error);

  PrefixGraphOracle renamed = oracle;
  renamed.name = "something-else";
  CHECK_THROWS_AS(prefix_member_count(renamed, 10), Error);
  CHECK_THROWS_AS(prefix_edge_density(renamed, 10), Error);
}
