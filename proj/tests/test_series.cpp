#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "orientrr/errors.hpp"
#include "orientrr/series.hpp"
#include "oracles.hpp"

using namespace orientrr;

namespace {

Series make(std::vector<Rat> coeffs) {
  return Series::from_coeffs(std::move(coeffs));
}

}  // namespace

TEST_CASE("series constructors and coefficient access", "[series]") {
  Series z(4);
  CHECK(z.order() == 4);
  CHECK(z.is_zero());
  Series u = Series::identity(3);
  CHECK(u[0] == 0);
  CHECK(u[1] == 1);
  CHECK(u[2] == 0);
  Series c = Series::constant(Rat(5), 2);
  CHECK(c[0] == 5);
  CHECK(c[1] == 0);
  CHECK(Series::identity(1).is_zero());
}

TEST_CASE("truncation shortens but never extends", "[series]") {
  Series a = make({Rat(1), Rat(2), Rat(3)});
  Series t = truncated(a, 2);
  CHECK(t.order() == 2);
  CHECK(t[1] == 2);
  CHECK(truncated(a, 0).order() == 0);
  CHECK_THROWS_AS(truncated(a, 4), InsufficientOrder);
}

TEST_CASE("binary operations truncate to the shorter order", "[series]") {
  Series a = make({Rat(1), Rat(2), Rat(3), Rat(4)});
  Series b = make({Rat(1), Rat(1)});
  CHECK((a + b).order() == 2);
  CHECK((a - b).order() == 2);
  CHECK((a * b).order() == 2);
  CHECK((a + b)[1] == 3);
  CHECK((a - b)[1] == 1);
}

TEST_CASE("product matches the direct convolution", "[series]") {
  std::vector<Rat> av = {Rat(1), Rat(-2), Rat(1, 3), Rat(0), Rat(7, 5)};
  std::vector<Rat> bv = {Rat(2), Rat(1, 2), Rat(-1), Rat(4), Rat(-3, 7)};
  std::vector<Rat> expected = oracle::convolve(av, bv, 5);
  Series p = make(av) * make(bv);
  REQUIRE(p.order() == 5);
  for (std::size_t i = 0; i < 5; ++i) CHECK(p[i] == expected[i]);
}

TEST_CASE("scalar multiplication and negation", "[series]") {
  Series a = make({Rat(1), Rat(-2)});
  CHECK((Rat(3) * a)[1] == -6);
  CHECK((a * Rat(3))[0] == 3);
  CHECK((-a)[1] == 2);
}

TEST_CASE("inversion matches the reciprocal recurrence", "[series]") {
  std::vector<Rat> av = {Rat(2), Rat(1), Rat(-1, 2), Rat(1, 3), Rat(5)};
  std::vector<Rat> expected = oracle::reciprocal(av);
  Series inv = invert(make(av));
  for (std::size_t i = 0; i < av.size(); ++i) CHECK(inv[i] == expected[i]);
  CHECK(make(av) * inv == Series::constant(Rat(1), av.size()));
  CHECK_THROWS_AS(invert(make({Rat(0), Rat(1)})), ZeroConstantTerm);
  CHECK_THROWS_AS(invert(Series(0)), ZeroConstantTerm);
}

TEST_CASE("geometric series inverts 1 - u", "[series]") {
  Series inv = invert(make({Rat(1), Rat(-1), Rat(0), Rat(0), Rat(0)}));
  for (std::size_t i = 0; i < 5; ++i) CHECK(inv[i] == 1);
}

TEST_CASE("composition sums powers of the inner series", "[series]") {
  // Direct power-sum evaluation as the reference.
  std::vector<Rat> outer = {Rat(1), Rat(2), Rat(-1, 2), Rat(1, 6)};
  std::vector<Rat> inner = {Rat(0), Rat(1), Rat(1), Rat(-2)};
  std::vector<Rat> expected(4);
  std::vector<Rat> power = {Rat(1)};
  for (std::size_t i = 0; i < outer.size(); ++i) {
    for (std::size_t j = 0; j < power.size() && j < 4; ++j)
      expected[j] += outer[i] * power[j];
    power = oracle::convolve(power, inner, 4);
  }
  Series comp = compose(make(outer), make(inner));
  for (std::size_t i = 0; i < 4; ++i) CHECK(comp[i] == expected[i]);
}

TEST_CASE("composition requires a nilpotent inner series", "[series]") {
  CHECK_THROWS_AS(compose(Series::identity(3), make({Rat(1), Rat(1)})),
                  NonzeroConstantTerm);
  CHECK_THROWS_AS(compose(Series::identity(3), Series(0)),
                  NonzeroConstantTerm);
  CHECK(compose(make({Rat(4), Rat(5)}), Series::identity(2)) ==
        make({Rat(4), Rat(5)}));
}

TEST_CASE("divide_by_u shifts down one power", "[series]") {
  Series a = make({Rat(0), Rat(3), Rat(-1)});
  Series d = divide_by_u(a);
  CHECK(d.order() == 2);
  CHECK(d[0] == 3);
  CHECK(d[1] == -1);
  CHECK_THROWS_AS(divide_by_u(make({Rat(1), Rat(1)})), NonzeroConstantTerm);
  CHECK_THROWS_AS(divide_by_u(Series(0)), NonzeroConstantTerm);
}

TEST_CASE("reversion gives the compositional inverse", "[series]") {
  Series a = make({Rat(0), Rat(1), Rat(-1, 2), Rat(1, 6), Rat(-1, 24)});
  Series g = revert(a);
  CHECK(compose(a, g) == Series::identity(5));
  CHECK(compose(g, a) == Series::identity(5));
}

TEST_CASE("reversion of 1 - e^{-t} is -log(1-u)", "[series]") {
  std::size_t order = 9;
  Series s = Series::constant(Rat(1), order) -
             exp_series(-Series::identity(order));
  Series g = revert(s);
  CHECK(g[0] == 0);
  for (std::size_t k = 1; k < order; ++k) CHECK(g[k] == Rat(1) / Rat(k));
}

TEST_CASE("reversion of e^t - 1 is log(1+u)", "[series]") {
  std::size_t order = 9;
  Series s = exp_series(Series::identity(order)) -
             Series::constant(Rat(1), order);
  Series g = revert(s);
  CHECK(g[0] == 0);
  for (std::size_t k = 1; k < order; ++k) {
    Rat expected = Rat(1) / Rat(k);
    if (k % 2 == 0) expected = -expected;
    CHECK(g[k] == expected);
  }
}

TEST_CASE("reversion requires an invertible linear term", "[series]") {
  CHECK_THROWS_AS(revert(make({Rat(1), Rat(1)})), NotReversible);
  CHECK_THROWS_AS(revert(make({Rat(0), Rat(0), Rat(1)})), NotReversible);
  CHECK_THROWS_AS(revert(make({Rat(0)})), NotReversible);
  CHECK_THROWS_AS(revert(Series(0)), NotReversible);
}

TEST_CASE("exp matches factorials and inverts log", "[series]") {
  Series e = exp_series(Series::identity(8));
  for (unsigned k = 0; k < 8; ++k)
    CHECK(e[k] == Rat(1) / oracle::factorial(k));
  Series a = make({Rat(0), Rat(2), Rat(-1, 3), Rat(1, 4), Rat(0), Rat(5)});
  CHECK(log_series(exp_series(a)) == a);
  Series b = make({Rat(1), Rat(1, 2), Rat(3), Rat(-2), Rat(1, 7)});
  CHECK(exp_series(log_series(b)) == b);
  CHECK_THROWS_AS(exp_series(make({Rat(1), Rat(0)})), BadConstantTerm);
  CHECK_THROWS_AS(log_series(make({Rat(2), Rat(0)})), BadConstantTerm);
  CHECK_THROWS_AS(exp_series(Series(0)), BadConstantTerm);
  CHECK_THROWS_AS(log_series(Series(0)), BadConstantTerm);
}

TEST_CASE("exp turns addition into multiplication", "[series]") {
  Series a = make({Rat(0), Rat(1), Rat(2), Rat(-1, 2), Rat(3)});
  Series b = make({Rat(0), Rat(-2), Rat(1, 3), Rat(1), Rat(0)});
  CHECK(exp_series(a + b) == exp_series(a) * exp_series(b));
}

TEST_CASE("pow_series repeats multiplication", "[series]") {
  Series a = make({Rat(1), Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)});
  Series cube = pow_series(a, 3);
  CHECK(cube[0] == 1);
  CHECK(cube[1] == 3);
  CHECK(cube[2] == 3);
  CHECK(cube[3] == 1);
  CHECK(cube[4] == 0);
  CHECK(pow_series(a, 0) == Series::constant(Rat(1), a.order()));
  Series b = make({Rat(2), Rat(-1), Rat(1, 2)});
  CHECK(pow_series(b, 5) == b * b * b * b * b);
}

TEST_CASE("series formatting", "[series]") {
  CHECK(series_to_string(Series(3)) == "0");
  CHECK(series_to_string(make({Rat(1), Rat(1, 2), Rat(1, 12), Rat(0),
                               Rat(-1, 720)})) ==
        "1 + 1/2 u + 1/12 u^2 - 1/720 u^4");
  CHECK(series_to_string(make({Rat(0), Rat(-1), Rat(1)})) == "-u + u^2");
  CHECK(series_to_string(make({Rat(0), Rat(1)}), "t") == "t");
  CHECK(series_to_string(make({Rat(-1, 3)})) == "-1/3");
}

TEST_CASE("series equality is order-sensitive", "[series]") {
  CHECK(make({Rat(1)}) != make({Rat(1), Rat(0)}));
  CHECK(make({Rat(1), Rat(2)}) == make({Rat(1), Rat(2)}));
}
