#include <doctest.h>

#include <array>
#include <vector>

#include "oracles.hpp"
#include "rotsurf/error.hpp"
#include "rotsurf/killing.hpp"

using namespace rotsurf;
using G = GeneratorId;

namespace {

Mat4 entries(std::initializer_list<std::array<int, 3>> cells) {
  Mat4 m;
  for (const auto& [r, c, v] : cells) m(r, c) = v;
  return m;
}

}  // namespace

TEST_SUITE("killing") {
  TEST_CASE("generator matrices") {
    CHECK(generator(G::Omega1).matrix == entries({{0, 2, 1}, {2, 0, 1}}));
    CHECK(generator(G::Omega2).matrix == entries({{0, 3, 1}, {3, 0, 1}}));
    CHECK(generator(G::Omega3).matrix == entries({{1, 2, 1}, {2, 1, 1}}));
    CHECK(generator(G::Omega4).matrix == entries({{1, 3, 1}, {3, 1, 1}}));
    CHECK(generator(G::Omega5).matrix == entries({{1, 0, 1}, {0, 1, -1}}));
    CHECK(generator(G::Omega6).matrix == entries({{3, 2, 1}, {2, 3, -1}}));
  }

  TEST_CASE("field values") {
    CHECK(evaluate_field(generator(G::Omega5), {1, 0, 0, 0}) == Vec4(0, 1, 0, 0));
    CHECK(evaluate_field(generator(G::Omega1), {0, 0, 1, 0}) == Vec4(1, 0, 0, 0));
    CHECK(evaluate_field(generator(G::Omega6), {0, 0, 0, 1}) == Vec4(0, 0, -1, 0));
    CHECK(evaluate_field(LinearVectorField{}, {1, 2, 3, 4}) == Vec4(0, 0, 0, 0));
  }

  TEST_CASE("general Killing field") {
    CHECK(killing_field({}).matrix == Mat4::zero());
    CHECK(killing_field({1, 0, 0, 0, 0, 0}) == generator(G::Omega2));
    CHECK(killing_field({0, 0, 1, 0, 0, 0}) == generator(G::Omega1));
    CHECK(killing_field({0, 0, 0, 0, 1, 0}) == generator(G::Omega6));
    CHECK(killing_field({0, 0, 0, 0, 0, 1}) == generator(G::Omega5));
    CHECK(lie_derivative_metric(killing_field({1, 2, 3, 4, 5, 6})) == Mat4::zero());
  }

  TEST_CASE("Lie derivative of the metric") {
    for (G id : kAllGenerators) CHECK(lie_derivative_metric(generator(id)) == Mat4::zero());
    CHECK(lie_derivative_metric({Mat4::identity()}) == 2.0 * metric_matrix());
  }

  TEST_CASE("property: Killing fields are linear in the coefficients and isometric") {
    oracle::Gen gen(201);
    for (int n = 0; n < 100; ++n) {
      const KillingCoefficients a = gen.coefficients(10.0), b = gen.coefficients(10.0);
      CHECK(killing_field(a + b) == killing_field(a) + killing_field(b));
      CHECK(lie_derivative_metric(killing_field(a)).max_abs() <= 1e-12);
      const KillingCoefficients k{double(gen.integer(-9, 9)), double(gen.integer(-9, 9)),
                                  double(gen.integer(-9, 9)), double(gen.integer(-9, 9)),
                                  double(gen.integer(-9, 9)), double(gen.integer(-9, 9))};
      CHECK(lie_derivative_metric(killing_field(k)) == Mat4::zero());
    }
  }

  TEST_CASE("brackets") {
    CHECK(bracket(generator(G::Omega1), generator(G::Omega2)) == generator(G::Omega6));
    CHECK(bracket(generator(G::Omega1), generator(G::Omega4)).matrix == Mat4::zero());
    oracle::Gen gen(202);
    const LinearVectorField F = killing_field(gen.coefficients(3.0));
    CHECK(bracket(F, F).matrix == Mat4::zero());
  }

  TEST_CASE("bracket follows the coordinate formula on linear fields") {
    // [X, Y]^i = X^j d_j Y^i - Y^j d_j X^i at p, with d_j Y^i = B(i, j).
    oracle::Gen gen(203);
    for (int n = 0; n < 20; ++n) {
      const Mat4 A = killing_field(gen.coefficients(2.0)).matrix;
      const Mat4 B = killing_field(gen.coefficients(2.0)).matrix;
      const Vec4 p = gen.vec(2.0);
      const Vec4 X = A * p, Y = B * p;
      Vec4 expected;
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) expected[i] += X[j] * B(i, j) - Y[j] * A(i, j);
      CHECK(oracle::rel(bracket({A}, {B})(p), expected) <= 1e-12);
    }
  }

  TEST_CASE("bracket table") {
    const BracketTable table = bracket_table();
    CHECK(table.at(G::Omega3, G::Omega4) == BracketCell{1, G::Omega6});
    CHECK(table.at(G::Omega5, G::Omega3) == BracketCell{1, G::Omega1});
    const struct {
      G a, b, c;
    } printed[] = {{G::Omega1, G::Omega2, G::Omega6}, {G::Omega1, G::Omega3, G::Omega5},
                   {G::Omega1, G::Omega5, G::Omega3}, {G::Omega1, G::Omega6, G::Omega2},
                   {G::Omega2, G::Omega4, G::Omega5}, {G::Omega2, G::Omega5, G::Omega4},
                   {G::Omega6, G::Omega2, G::Omega1}, {G::Omega3, G::Omega4, G::Omega6},
                   {G::Omega5, G::Omega3, G::Omega1}, {G::Omega3, G::Omega6, G::Omega4},
                   {G::Omega5, G::Omega4, G::Omega2}, {G::Omega6, G::Omega4, G::Omega3}};
    for (const auto& r : printed) {
      CHECK(table.at(r.a, r.b) == BracketCell{1, r.c});
      CHECK(table.at(r.b, r.a) == BracketCell{-1, r.c});
    }
    for (G i : kAllGenerators) {
      CHECK(table.at(i, i).is_zero());
      for (G j : kAllGenerators) {
        const BracketCell a = table.at(i, j), b = table.at(j, i);
        CHECK(a.sign == -b.sign);
        if (!a.is_zero()) CHECK(a.id == b.id);
      }
    }
    const std::string grid = table.render();
    CHECK(grid.find("+Omega6") != std::string::npos);
    CHECK(std::count(grid.begin(), grid.end(), '\n') == 7);
  }

  TEST_CASE("Jacobi identity on all generator triples") {
    for (G x : kAllGenerators)
      for (G y : kAllGenerators)
        for (G z : kAllGenerators) {
          const auto X = generator(x), Y = generator(y), Z = generator(z);
          const Mat4 sum = bracket(X, bracket(Y, Z)).matrix + bracket(Y, bracket(Z, X)).matrix +
                           bracket(Z, bracket(X, Y)).matrix;
          CHECK(sum == Mat4::zero());
        }
  }

  TEST_CASE("commuting pairs and closed subalgebras") {
    int commuting = 0;
    for (G x : kAllGenerators)
      for (G y : kAllGenerators)
        if (index(x) < index(y) && bracket(generator(x), generator(y)).matrix == Mat4::zero()) {
          ++commuting;
          const bool expected = (x == G::Omega1 && y == G::Omega4) ||
                                (x == G::Omega2 && y == G::Omega3) ||
                                (x == G::Omega5 && y == G::Omega6);
          CHECK(expected);
        }
    CHECK(commuting == 3);
    const std::array<G, 2> p14{G::Omega1, G::Omega4}, p12{G::Omega1, G::Omega2};
    CHECK(is_closed_subalgebra(p14));
    CHECK_FALSE(is_closed_subalgebra(p12));
    CHECK(is_closed_subalgebra(kAllGenerators));
    CHECK_THROWS_AS(is_closed_subalgebra(std::span<const G>{}), EmptySet);
  }

  TEST_CASE("algebra coordinates") {
    const auto c = algebra_coordinates(killing_field({1, 2, 3, 4, 5, 6}));
    REQUIRE(c.has_value());
    CHECK(*c == std::array<double, 6>{3, 1, 2, 4, 6, 5});
    CHECK_FALSE(algebra_coordinates({Mat4::identity()}).has_value());
  }

  TEST_CASE("generator names") {
    CHECK(name(G::Omega4) == "Omega4");
    CHECK(parse_generator("O3") == G::Omega3);
    CHECK(parse_generator("6") == G::Omega6);
    CHECK_FALSE(parse_generator("Omega7").has_value());
  }
}
