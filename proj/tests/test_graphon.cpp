#include <doctest.h>

#include <vector>

#include "limitlab/canonical.hpp"
#include "limitlab/counting.hpp"
#include "limitlab/error.hpp"
#include "limitlab/graphon.hpp"
#include "limitlab/json_conv.hpp"
#include "limitlab/rational.hpp"

using namespace limitlab;

namespace {

StepGraphon three_part_example() {
  StepGraphon w;
  w.parts = {Rational(1, 2), Rational(1, 3), Rational(1, 6)};
  w.values = {{Rational(1, 2), Rational(1, 3), Rational(0)},
              {Rational(1, 3), Rational(1), Rational(1, 4)},
              {Rational(0), Rational(1, 4), Rational(3, 4)}};
  return w;
}

}  // namespace

TEST_CASE("validation rejects malformed step functions") {
  CHECK_NOTHROW(three_part_example().validate());

  StepGraphon empty;
  CHECK_THROWS_AS(empty.validate(), Error);

  StepGraphon bad_sum = constant_graphon(Rational(1, 2));
  bad_sum.parts[0] = Rational(1, 2);
  CHECK_THROWS_AS(bad_sum.validate(), Error);

  StepGraphon nonpositive = three_part_example();
  nonpositive.parts = {Rational(1), Rational(0), Rational(0)};
  CHECK_THROWS_AS(nonpositive.validate(), Error);

  StepGraphon asymmetric = three_part_example();
  asymmetric.values[0][1] = Rational(1, 5);
  CHECK_THROWS_AS(asymmetric.validate(), Error);

  StepGraphon out_of_range = three_part_example();
  out_of_range.values[1][1] = Rational(3, 2);
  CHECK_THROWS_AS(out_of_range.validate(), Error);

  StepGraphon ragged = three_part_example();
  ragged.values[2].pop_back();
  CHECK_THROWS_AS(ragged.validate(), Error);

  CHECK_THROWS_AS(constant_graphon(Rational(2)), Error);
  CHECK_THROWS_AS(constant_graphon(Rational(-1, 2)), Error);
}

TEST_CASE("constant step functions give product densities") {
  const StepGraphon w = constant_graphon(Rational(1, 2));
  CHECK(tind_graphon(Graph::complete(3), w) == Rational(1, 8));
  for (const Graph& g : enumerate_iso_class_graphs(4))
    CHECK(tind_graphon(g, w) == Rational(1, 64));
  CHECK(tind_graphon(Graph(0), w) == Rational(1));
  CHECK(tind_graphon(Graph(1), w) == Rational(1));

  const StepGraphon full = constant_graphon(Rational(1));
  CHECK(tind_graphon(Graph::complete(4), full) == Rational(1));
  CHECK(tind_graphon(Graph::path(3), full) == Rational(0));
}

TEST_CASE("blow-up approximation structure at level one") {
  const StepGraphon w = c4_step_approx(1);
  REQUIRE(w.part_count() == 4);
  for (const Rational& p : w.parts) CHECK(p == Rational(1, 4));
  int ones = 0;
  for (int i = 0; i < 4; ++i) {
    CHECK(w.values[i][i] == Rational(1, 2));
    for (int j = 0; j < 4; ++j)
      if (i != j && w.values[i][j] == Rational(1)) ++ones;
  }
  CHECK(ones == 8);  // each label has exactly two cyclic neighbors
  CHECK(tind_graphon(Graph::complete(2), w) == Rational(5, 8));
}

TEST_CASE("edge density of the blow-up approximation follows the closed form") {
  for (int level = 1; level <= 4; ++level) {
    const StepGraphon w = c4_step_approx(level);
    const Rational same(1, 1ll << (2 * level));  // 4^-level
    const Rational expect =
        (Rational(1) - same) * Rational(2, 3) + same * Rational(1, 2);
    CHECK(tind_graphon(Graph::complete(2), w) == expect);
  }
  CHECK_THROWS_AS(c4_step_approx(0), Error);
  CHECK_THROWS_AS(c4_step_approx(2, 10), Error);  // 16 parts over budget
}

TEST_CASE("triangle density of the approximations increases with the level") {
  Rational prev(-1);
  for (int level = 1; level <= 3; ++level) {
    const Rational cur = tind_graphon(Graph::complete(3), c4_step_approx(level));
    CHECK(cur > prev);
    prev = cur;
  }
  // Level 1 puts every triple with a repeated part at probability >= 0:
  // the exact value is small but positive from the diagonal placeholder.
  CHECK(tind_graphon(Graph::complete(3), c4_step_approx(1)) > Rational(0));
}

TEST_CASE("rescaling by all-one weights is the identity") {
  const StepGraphon w = three_part_example();
  WeightFunction ones{{Rational(1), Rational(1), Rational(1)}};
  const StepGraphon r = rescale_subgraphon(w, ones);
  REQUIRE(r.part_count() == w.part_count());
  for (int i = 0; i < w.part_count(); ++i) {
    CHECK(r.parts[i] == w.parts[i]);
    for (int j = 0; j < w.part_count(); ++j)
      CHECK(r.values[i][j] == w.values[i][j]);
  }
}

TEST_CASE("indicator weights drop parts and renormalize") {
  const StepGraphon w = three_part_example();
  WeightFunction pick{{Rational(1), Rational(0), Rational(1)}};
  const StepGraphon r = rescale_subgraphon(w, pick);
  REQUIRE(r.part_count() == 2);
  // Kept mass: 1/2 + 1/6 = 2/3, so parts renormalize to 3/4 and 1/4.
  CHECK(r.parts[0] == Rational(3, 4));
  CHECK(r.parts[1] == Rational(1, 4));
  CHECK(r.values[0][0] == Rational(1, 2));
  CHECK(r.values[0][1] == Rational(0));
  CHECK(r.values[1][1] == Rational(3, 4));
  r.validate();

  WeightFunction partial{{Rational(1, 2), Rational(0), Rational(1)}};
  const StepGraphon s = rescale_subgraphon(w, partial);
  REQUIRE(s.part_count() == 2);
  // Masses 1/4 and 1/6 renormalize over 5/12.
  CHECK(s.parts[0] == Rational(3, 5));
  CHECK(s.parts[1] == Rational(2, 5));

  WeightFunction zero{{Rational(0), Rational(0), Rational(0)}};
  CHECK_THROWS_AS(rescale_subgraphon(w, zero), Error);
  WeightFunction wrong_len{{Rational(1), Rational(1)}};
  CHECK_THROWS_AS(rescale_subgraphon(w, wrong_len), Error);
  WeightFunction negative{{Rational(-1), Rational(1), Rational(1)}};
  CHECK_THROWS_AS(rescale_subgraphon(w, negative), Error);
}

TEST_CASE("halving refinement changes the representation, not the densities") {
  std::vector<StepGraphon> ws = {c4_step_approx(1), half_graphon_step(2),
                                 constant_graphon(Rational(2, 5)),
                                 three_part_example()};
  std::vector<Graph> patterns;
  for (int n = 1; n <= 4; ++n)
    for (const Graph& g : enumerate_iso_class_graphs(n)) patterns.push_back(g);

  for (const StepGraphon& w : ws) {
    const StepGraphon r = refine_halves(w);
    CHECK(r.part_count() == 2 * w.part_count());
    r.validate();
    for (const Graph& pat : patterns)
      CHECK(tind_graphon(pat, r) == tind_graphon(pat, w));
  }
}

TEST_CASE("densities over all patterns of a size sum to one") {
  const StepGraphon w = three_part_example();
  for (int n = 1; n <= 3; ++n) {
    Rational total(0);
    for (const Graph& g : enumerate_iso_class_graphs(n))
      total = total + Rational(factorial(n), aut_order(g)) *
                          tind_graphon(g, w);
    CHECK(total == Rational(1));
  }
}

TEST_CASE("half-limit steps have the promised edge density") {
  for (int k = 1; k <= 5; ++k) {
    const StepGraphon w = half_graphon_step(k);
    REQUIRE(w.part_count() == 2 * k);
    CHECK(tind_graphon(Graph::complete(2), w) == Rational(k + 1, 4 * k));
  }
  CHECK_THROWS_AS(half_graphon_step(0), Error);
}

TEST_CASE("the half-limit contains ordered paths but no triangles") {
  const StepGraphon w = half_graphon_step(4);
  CHECK(tind_graphon(Graph::path(4), w) > Rational(0));
  CHECK(tind_graphon(Graph::complete(3), w) == Rational(0));
}

TEST_CASE("step functions survive a JSON round trip") {
  for (const StepGraphon& w :
       {three_part_example(), c4_step_approx(1), half_graphon_step(3)}) {
    const StepGraphon back = graphon_from_json(graphon_to_json(w));
    REQUIRE(back.part_count() == w.part_count());
    for (int i = 0; i < w.part_count(); ++i) {
      CHECK(back.parts[i] == w.parts[i]);
      for (int j = 0; j < w.part_count(); ++j)
        CHECK(back.values[i][j] == w.values[i][j]);
    }
  }
  CHECK_THROWS_AS(graphon_from_json(Json{{"parts", 3}}), Error);
}
