#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qsdisc/circuits.hpp"
#include "qsdisc/horn.hpp"
#include "support/random_systems.hpp"

using namespace qsdisc;
using qsdisc::testing::random_nonqs_cy;
using qsdisc::testing::random_qs;

namespace {

// lambda with <lambda, direction> != 0 for every line of the form
RatVec admissible_point(std::mt19937_64& rng, const WeightSystem& ws) {
  std::uniform_int_distribution<int> entry(-9, 9);
  auto groups = partition_lines(ws);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    RatVec lambda(ws.rank());
    for (Rat& x : lambda) x = entry(rng);
    bool ok = true;
    for (const auto& g : groups)
      if (dot(lambda, g.direction) == 0) ok = false;
    if (ok) return lambda;
  }
  throw std::logic_error("admissible_point starved");
}

}  // namespace

TEST_CASE("horn_decompose on pinned examples") {
  SECTION("A1: one line, constant 1/4, sigma 0") {
    HornForm form = horn_decompose(validate(IntMatrix{{1, -2, 1}}));
    REQUIRE(form.lines.size() == 1);
    REQUIRE(form.lines[0].direction == Vec{1});
    REQUIRE(form.lines[0].consts == RatVec{Rat(1, 4)});
    REQUIRE(form.lines[0].sigma == Vec{0});
  }
  SECTION("three lines with the diagonal carrying sigma (-1,-1)") {
    HornForm form = horn_decompose(validate(IntMatrix{{1, 0, 1, -2}, {0, 1, 1, -2}}));
    REQUIRE(form.lines.size() == 3);
    bool found = false;
    for (const HornLine& hl : form.lines)
      if (hl.direction == Vec{1, 1}) {
        found = true;
        REQUIRE(hl.sigma == Vec{-1, -1});
        REQUIRE(hl.consts == RatVec{Rat(1, 4), Rat(1, 4)});
      }
    REQUIRE(found);
  }
  SECTION("single +- pair") {
    HornForm form = horn_decompose(validate(IntMatrix{{1, -1}}));
    REQUIRE(form.lines.size() == 1);
    REQUIRE(form.lines[0].consts == RatVec{Rat(-1)});
    REQUIRE(form.lines[0].sigma == Vec{0});
  }
  SECTION("non-CY input is refused") {
    try {
      horn_decompose(validate(IntMatrix{{1, 1}}));
      FAIL("expected NotCalabiYau");
    } catch (const Error& e) {
      REQUIRE(e.code() == Errc::NotCalabiYau);
    }
  }
}

TEST_CASE("horn_evaluate on pinned examples") {
  REQUIRE(horn_evaluate(validate(IntMatrix{{1, 1, -1, -1}}), RatVec{Rat(1)}) == RatVec{Rat(1)});
  REQUIRE(horn_evaluate(validate(IntMatrix{{1, -2, 1}}), RatVec{Rat(7)}) == RatVec{Rat(1, 4)});
  REQUIRE(horn_evaluate(validate(IntMatrix{{1, 0, 1, -2}, {0, 1, 1, -2}}),
                        RatVec{Rat(1), Rat(1)}) == RatVec{Rat(1, 8), Rat(1, 8)});
}

TEST_CASE("horn_evaluate rejects points on a line hyperplane") {
  WeightSystem ws = validate(IntMatrix{{1, 0, 1, -2}, {0, 1, 1, -2}});
  try {
    horn_evaluate(ws, RatVec{Rat(1), Rat(-1)});  // on the hyperplane of line (1,1)
    FAIL("expected PoleOrZero");
  } catch (const Error& e) {
    REQUIRE(e.code() == Errc::PoleOrZero);
    REQUIRE_THAT(e.what(), Catch::Matchers::ContainsSubstring("(1,1)"));
  }
}

TEST_CASE("horn_is_constant on pinned examples") {
  auto c1 = horn_is_constant(validate(IntMatrix{{1, -2, 1}}));
  REQUIRE(c1 == RatVec{Rat(1, 4)});
  REQUIRE_FALSE(horn_is_constant(validate(IntMatrix{{1, 0, 1, -2}, {0, 1, 1, -2}})).has_value());
  auto c2 = horn_is_constant(validate(IntMatrix{{1, -1, 2, -2}}));
  REQUIRE(c2 == RatVec{Rat(-1)});
}

TEST_CASE("Lemma Main equivalence on random CY systems") {
  std::mt19937_64 rng(20260819);
  for (int trial = 0; trial < 100; ++trial) {
    WeightSystem qs = random_qs(rng, 1 + trial % 4);
    REQUIRE(horn_is_constant(qs).has_value());
    WeightSystem cy = random_nonqs_cy(rng, 2 + trial % 3);
    REQUIRE_FALSE(horn_is_constant(cy).has_value());
  }
}

TEST_CASE("constant value matches evaluation at random admissible points") {
  std::mt19937_64 rng(31415926);
  for (int trial = 0; trial < 20; ++trial) {
    WeightSystem ws = random_qs(rng, 1 + trial % 3);
    auto c = horn_is_constant(ws);
    REQUIRE(c.has_value());
    for (int rep = 0; rep < 20; ++rep)
      REQUIRE(horn_evaluate(ws, admissible_point(rng, ws)) == *c);
  }
}

TEST_CASE("evaluation is projectively well-defined on CY systems") {
  std::mt19937_64 rng(2718281);
  std::uniform_int_distribution<int> num(1, 9), den(1, 9), sign(0, 1);
  for (int trial = 0; trial < 30; ++trial) {
    WeightSystem ws = random_nonqs_cy(rng, 2 + trial % 3);
    RatVec lambda = admissible_point(rng, ws);
    Rat t(num(rng), den(rng));
    if (sign(rng)) t = -t;
    RatVec scaled(lambda.size());
    for (std::size_t i = 0; i < lambda.size(); ++i) scaled[i] = t * lambda[i];
    REQUIRE(horn_evaluate(ws, scaled) == horn_evaluate(ws, lambda));
  }
}

TEST_CASE("flipping a line's generator leaves the factored form invariant") {
  // recompute each line's data from the opposite generator: for QS lines the
  // constants and exponents must come out identical
  std::mt19937_64 rng(141421);
  for (int trial = 0; trial < 40; ++trial) {
    WeightSystem ws = random_qs(rng, 1 + trial % 3);
    HornForm form = horn_decompose(ws);
    for (const HornLine& hl : form.lines) {
      REQUIRE(is_zero(hl.sigma));  // QS
      // flipped generator -d gives lengths -n_j
      const LineGroup* group = nullptr;
      auto groups = partition_lines(ws);
      for (const auto& g : groups)
        if (g.direction == hl.direction) group = &g;
      REQUIRE(group != nullptr);
      Rat flipped_c = 1;
      for (const Int& n : group->lengths) flipped_c *= pow_exact(Rat(Int(-n)), Int(-n));
      // consts[i] = c^{d_i} computed from either generator
      for (std::size_t i = 0; i < ws.rank(); ++i) {
        Rat via_flipped = pow_exact(flipped_c, Int(-hl.direction[i]));
        REQUIRE(via_flipped == hl.consts[i]);
      }
    }
  }
}

TEST_CASE("the constant point lies on every circuit hyperplane h") {
  std::mt19937_64 rng(173205);
  for (int trial = 0; trial < 40; ++trial) {
    WeightSystem ws = random_qs(rng, 1 + trial % 3);
    auto c = horn_is_constant(ws);
    REQUIRE(c.has_value());
    for (const Vec& l : enumerate_circuit_normals(ws)) {
      Rat pairing = 1;
      for (std::size_t i = 0; i < ws.rank(); ++i) pairing *= pow_exact((*c)[i], l[i]);
      REQUIRE(pairing == circuit_constant(ws, l));
    }
  }
}

TEST_CASE("is_component_hyperplane") {
  WeightSystem ws = validate(IntMatrix{{1, 0, 1, -2}, {0, 1, 1, -2}});
  REQUIRE_FALSE(is_component_hyperplane(ws, Vec{1, -1}));
  // no primitive l makes all unbalanced lines land inside H_l here:
  REQUIRE_FALSE(is_component_hyperplane(ws, Vec{1, 0}));
  REQUIRE_FALSE(is_component_hyperplane(ws, Vec{0, 1}));
  REQUIRE_FALSE(is_component_hyperplane(ws, Vec{1, 1}));

  // QS systems satisfy the criterion for every l
  std::mt19937_64 rng(57721);
  for (int trial = 0; trial < 20; ++trial) {
    WeightSystem qs = random_qs(rng, 2 + trial % 2);
    Vec l = qsdisc::testing::random_functional(rng, qs.rank());
    if (is_zero(l)) continue;
    REQUIRE(is_component_hyperplane(qs, primitive(l)));
  }
}
