#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qsdisc/circuits.hpp"
#include "qsdisc/weights.hpp"
#include "support/random_systems.hpp"

using namespace qsdisc;
using qsdisc::testing::random_nonqs_cy;
using qsdisc::testing::random_qs;
using qsdisc::testing::random_self_dual;

TEST_CASE("validate accepts and rejects") {
  REQUIRE_NOTHROW(validate(IntMatrix{{1, 1, -1, -1}}));
  WeightSystem ws = validate(IntMatrix{{1, 1, -1, -1}});
  REQUIRE(ws.rank() == 1);
  REQUIRE(ws.size() == 4);

  try {
    validate(IntMatrix{{2, -2}});
    FAIL("expected NotSurjective");
  } catch (const Error& e) {
    REQUIRE(e.code() == Errc::NotSurjective);
    REQUIRE_THAT(e.what(), Catch::Matchers::ContainsSubstring("reduce_to_image"));
  }

  try {
    validate(IntMatrix{{1, 0}, {0, 0}});
    FAIL("expected ZeroWeight");
  } catch (const Error& e) {
    REQUIRE(e.code() == Errc::ZeroWeight);
    REQUIRE_THAT(e.what(), Catch::Matchers::ContainsSubstring("weight 2"));
  }
}

TEST_CASE("reduce_to_image") {
  SECTION("doubled rank-1 system") {
    Reduction red = reduce_to_image(IntMatrix{{2, -2}});
    REQUIRE(red.system.matrix() == IntMatrix{{1, -1}});
    REQUIRE(red.basis == IntMatrix{{2}});
  }
  SECTION("surjective input is untouched") {
    IntMatrix q{{1, 0, -1}, {0, 1, -1}};
    Reduction red = reduce_to_image(q);
    REQUIRE(red.system.matrix() == q);
    REQUIRE(red.basis == IntMatrix::identity(2));
  }
  SECTION("index-2 sublattice in rank 2") {
    IntMatrix q{{2, 0, -2}, {0, 2, -2}};
    Reduction red = reduce_to_image(q);
    REQUIRE(red.system.rank() == 2);
    REQUIRE(red.basis * red.system.matrix() == q);
    REQUIRE(abs(det(red.basis)) == 4);
  }
  SECTION("basis identity holds generally") {
    IntMatrix q{{2, 4, -6}, {0, 2, -2}};
    Reduction red = reduce_to_image(q);
    REQUIRE(red.basis * red.system.matrix() == q);
    for (const Int& d : invariant_factors(red.system.matrix())) REQUIRE(d == 1);
  }
  REQUIRE_THROWS_AS(reduce_to_image(IntMatrix{{0, 0}}), Error);
}

TEST_CASE("partition_lines groups collinear weights") {
  SECTION("rank 1") {
    auto groups = partition_lines(validate(IntMatrix{{1, 1, -1, -1}}));
    REQUIRE(groups.size() == 1);
    REQUIRE(groups[0].direction == Vec{1});
    REQUIRE(groups[0].lengths == std::vector<Int>{1, 1, -1, -1});
    REQUIRE(groups[0].line_sum == Vec{0});
  }
  SECTION("two orthogonal lines") {
    auto groups = partition_lines(validate(IntMatrix{{1, -1, 0, 0}, {0, 0, 1, -1}}));
    REQUIRE(groups.size() == 2);
  }
  SECTION("lengths on the x-axis group") {
    WeightSystem ws = validate(IntMatrix{{2, -1, -1, 0, 0}, {0, 0, 0, 1, -1}});
    auto groups = partition_lines(ws);
    REQUIRE(groups.size() == 2);
    REQUIRE(groups[0].direction == Vec{1, 0});
    REQUIRE(groups[0].lengths == std::vector<Int>{2, -1, -1});
    REQUIRE(groups[1].direction == Vec{0, 1});
    REQUIRE(groups[1].lengths == std::vector<Int>{1, -1});
  }
  SECTION("groups partition the index set and reassemble the total") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 50; ++trial) {
      WeightSystem ws = random_qs(rng, 1 + trial % 3);
      auto groups = partition_lines(ws);
      std::vector<bool> seen(ws.size(), false);
      Vec total(ws.rank(), Int(0));
      for (const auto& g : groups) {
        REQUIRE(g.members.size() == g.lengths.size());
        for (std::size_t t = 0; t < g.members.size(); ++t) {
          REQUIRE_FALSE(seen[g.members[t]]);
          seen[g.members[t]] = true;
          Vec w = ws.weight(g.members[t]);
          for (std::size_t i = 0; i < ws.rank(); ++i) {
            REQUIRE(w[i] == g.lengths[t] * g.direction[i]);
            total[i] += w[i];
          }
        }
        REQUIRE(g.lengths.front() != 0);
      }
      for (bool b : seen) REQUIRE(b);
      REQUIRE(is_zero(total));  // QS input
    }
  }
}

TEST_CASE("predicates on pinned examples") {
  REQUIRE(is_calabi_yau(validate(IntMatrix{{1, 1, -1, -1}})));
  REQUIRE(is_calabi_yau(validate(IntMatrix{{1, 1, 1, -3}})));
  REQUIRE_FALSE(is_calabi_yau(validate(IntMatrix{{1, 1}})));

  REQUIRE(is_quasi_symmetric(validate(IntMatrix{{1, -2, 1}})).quasi_symmetric);
  {
    QsVerdict v = is_quasi_symmetric(validate(IntMatrix{{1, 0, 1, -2}, {0, 1, 1, -2}}));
    REQUIRE_FALSE(v.quasi_symmetric);
    REQUIRE(v.witness == Vec{1, 0});
  }
  REQUIRE(is_quasi_symmetric(validate(IntMatrix{{1, -1, 0, 0}, {0, 0, 1, -1}})).quasi_symmetric);

  REQUIRE(is_self_dual(validate(IntMatrix{{1, -1, 2, -2}})));
  REQUIRE_FALSE(is_self_dual(validate(IntMatrix{{1, -2, 1}})));
  REQUIRE(is_self_dual(validate(IntMatrix{{1, 1, -1, -1}})));
}

TEST_CASE("predicate implications on random systems") {
  std::mt19937_64 rng(20260819);
  SECTION("QS implies CY; rank 1 CY iff QS") {
    for (int trial = 0; trial < 100; ++trial) {
      WeightSystem ws = random_qs(rng, 1 + trial % 4);
      REQUIRE(is_quasi_symmetric(ws).quasi_symmetric);
      REQUIRE(is_calabi_yau(ws));
    }
  }
  SECTION("non-QS CY generator output is CY but not QS") {
    for (int trial = 0; trial < 100; ++trial) {
      WeightSystem ws = random_nonqs_cy(rng, 2 + trial % 3);
      REQUIRE(is_calabi_yau(ws));
      QsVerdict v = is_quasi_symmetric(ws);
      REQUIRE_FALSE(v.quasi_symmetric);
      REQUIRE(v.witness.has_value());
    }
  }
  SECTION("self-dual systems are quasi-symmetric") {
    for (int trial = 0; trial < 100; ++trial) {
      WeightSystem ws = random_self_dual(rng, 1 + trial % 3);
      REQUIRE(is_self_dual(ws));
      REQUIRE(is_quasi_symmetric(ws).quasi_symmetric);
    }
  }
}

TEST_CASE("ray_data") {
  SECTION("conifold: rays pair to 1 with the witness") {
    WeightSystem ws = validate(IntMatrix{{1, 1, -1, -1}});
    RayData rd = ray_data(ws);
    REQUIRE(rd.rays.rows() == 3);  // ray i is column i, in Z^3
    REQUIRE(rd.rays.cols() == 4);
    REQUIRE(rd.cy_witness.has_value());
    for (std::size_t i = 0; i < 4; ++i) REQUIRE(dot(rd.rays.column(i), *rd.cy_witness) == 1);
  }
  SECTION("non-CY has no witness") {
    REQUIRE_FALSE(ray_data(validate(IntMatrix{{1, 1}})).cy_witness.has_value());
  }
  SECTION("A1: three distinct rays in Z^2") {
    RayData rd = ray_data(validate(IntMatrix{{1, -2, 1}}));
    REQUIRE(rd.rays.rows() == 2);
    REQUIRE(rd.rays.cols() == 3);
    REQUIRE(rd.rays_distinct);
    REQUIRE(rd.cy_witness.has_value());
    for (std::size_t i = 0; i < 3; ++i) REQUIRE(dot(rd.rays.column(i), *rd.cy_witness) == 1);
  }
  SECTION("coinciding rays are flagged") {
    // ker Q forces v3 = v4, so rays 3 and 4 agree as functionals on it
    RayData rd = ray_data(validate(IntMatrix{{1, 1, -1, -1}, {0, 0, 1, -1}}));
    REQUIRE_FALSE(rd.rays_distinct);
  }
  SECTION("kernel property Q * K = 0 on random systems") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
      WeightSystem ws = random_qs(rng, 1 + trial % 3);
      RayData rd = ray_data(ws);
      IntMatrix prod = ws.matrix() * rd.rays.transposed();
      for (std::size_t i = 0; i < prod.rows(); ++i)
        for (std::size_t j = 0; j < prod.cols(); ++j) REQUIRE(prod(i, j) == 0);
      REQUIRE(rd.cy_witness.has_value());  // QS => CY
      for (std::size_t j = 0; j < rd.rays.cols(); ++j)
        REQUIRE(dot(rd.rays.column(j), *rd.cy_witness) == 1);
    }
  }
}

TEST_CASE("restrict_to_circuit") {
  SECTION("axis restriction of the orthogonal pair system") {
    WeightSystem ws = validate(IntMatrix{{1, -1, 0, 0}, {0, 0, 1, -1}});
    WeightSystem r = restrict_to_circuit(ws, Vec{1, 0});
    REQUIRE(r.matrix() == IntMatrix{{1, -1}});
  }
  SECTION("x-axis restriction keeps multiplicities") {
    WeightSystem ws = validate(IntMatrix{{2, -1, -1, 0, 0}, {0, 0, 0, 1, -1}});
    REQUIRE(restrict_to_circuit(ws, Vec{1, 0}).matrix() == IntMatrix{{2, -1, -1}});
  }
  SECTION("rank-1 restriction returns the nonzero pairings") {
    WeightSystem ws = validate(IntMatrix{{1, -2, 1}});
    REQUIRE(restrict_to_circuit(ws, Vec{1}).matrix() == IntMatrix{{1, -2, 1}});
  }
  SECTION("span failure for a diagonal normal") {
    WeightSystem ws = validate(IntMatrix{{1, -1, 0, 0}, {0, 0, 1, -1}});
    try {
      restrict_to_circuit(ws, Vec{1, 1});
      FAIL("expected SpanFailure");
    } catch (const Error& e) {
      REQUIRE(e.code() == Errc::SpanFailure);
    }
  }
  SECTION("non-primitive normal is rejected") {
    WeightSystem ws = validate(IntMatrix{{1, -2, 1}});
    REQUIRE_THROWS_AS(restrict_to_circuit(ws, Vec{2}), Error);
  }
  SECTION("Lemma Inherit: circuit restrictions of QS systems are QS") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
      WeightSystem ws = random_qs(rng, 1 + trial % 3);
      for (const Vec& l : enumerate_circuit_normals(ws)) {
        WeightSystem r = restrict_to_circuit(ws, l);
        REQUIRE(is_quasi_symmetric(r).quasi_symmetric);
      }
    }
  }
}
