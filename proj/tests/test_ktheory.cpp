#include <catch2/catch_amalgamated.hpp>

#include <cstddef>
#include <vector>

#include "orientrr/errors.hpp"
#include "orientrr/ktheory.hpp"
#include "oracles.hpp"

using namespace orientrr;

namespace {

KElement k_pow(const KElement& a, unsigned e) {
  KElement out = KElement::one(a.n());
  for (unsigned i = 0; i < e; ++i) out = out * a;
  return out;
}

// e^{d t} on P^n as a class, built straight from factorials.
CohElement exp_of_root(unsigned n, long long d) {
  RingShape shape = RingShape::projective(n);
  CohElement out(shape);
  Rat power(1);
  for (unsigned k = 0; k <= n; ++k) {
    out.add_term({k}, power / oracle::factorial(k));
    power *= d;
  }
  return out;
}

}  // namespace

TEST_CASE("generator is nilpotent of the right index", "[ktheory]") {
  for (unsigned n = 0; n <= 5; ++n) {
    KElement x = KElement::x(n);
    CHECK(k_pow(x, n + 1).is_zero());
    if (n >= 1) CHECK_FALSE(k_pow(x, n).is_zero());
  }
  CHECK(KElement::x(0).is_zero());
}

TEST_CASE("element construction and access", "[ktheory]") {
  KElement a = KElement::from_coeffs(2, {Rat(1), Rat(0), Rat(-7, 3)});
  CHECK(a.n() == 2);
  CHECK(a[0] == 1);
  CHECK(a[1] == 0);
  CHECK(a[2] == Rat(-7, 3));
  CHECK(KElement(3).is_zero());
  CHECK(KElement::from_coeffs(3, {Rat(2)})[0] == 2);
  CHECK(KElement::from_coeffs(3, {Rat(2)})[3] == 0);
  CHECK_THROWS_AS(KElement::from_coeffs(1, {Rat(1), Rat(1), Rat(1)}),
                  DimensionMismatch);
}

TEST_CASE("arithmetic stays in the truncated ring", "[ktheory]") {
  KElement x = KElement::x(2);
  KElement a = KElement::one(2) + x;
  KElement sq = a * a;
  CHECK(sq[0] == 1);
  CHECK(sq[1] == 2);
  CHECK(sq[2] == 1);
  CHECK((sq - a * a).is_zero());
  CHECK((x * Rat(3, 2))[1] == Rat(3, 2));
  CHECK((-x)[1] == -1);
  CHECK_THROWS_AS(KElement::one(1) + KElement::one(2), DimensionMismatch);
  CHECK_THROWS_AS(KElement::x(1) * KElement::x(2), DimensionMismatch);
}

TEST_CASE("line bundle classes", "[ktheory]") {
  CHECK(o_bundle(2, 0) == KElement::one(2));
  CHECK(o_bundle(2, 1) == KElement::one(2) + KElement::x(2));

  KElement dual = o_bundle(2, -1);
  CHECK(dual[0] == 1);
  CHECK(dual[1] == -1);
  CHECK(dual[2] == 1);

  CHECK(o_bundle(3, 2) * o_bundle(3, -4) == o_bundle(3, -2));
  CHECK(o_bundle(0, 17) == KElement::one(0));
}

TEST_CASE("twists add under tensor product", "[ktheory]") {
  for (unsigned n = 0; n <= 4; ++n)
    for (long long a = -3; a <= 3; ++a)
      for (long long b = -3; b <= 3; ++b)
        CHECK(o_bundle(n, a) * o_bundle(n, b) == o_bundle(n, a + b));
}

TEST_CASE("Chern character on basic classes", "[ktheory]") {
  CohElement ch1 = chern_character(o_bundle(2, 1));
  CHECK(ch1.coefficient({0}) == 1);
  CHECK(ch1.coefficient({1}) == 1);
  CHECK(ch1.coefficient({2}) == Rat(1, 2));

  RingShape p3 = RingShape::projective(3);
  CHECK(chern_character(KElement::one(3)) ==
        CohElement::constant(p3, Rat(1)));
  CHECK(chern_character(KElement(3)).is_zero());

  // The reduced class of O(1) on P^1 maps to the hyperplane class on the
  // nose, whichever way it is written.
  RingShape p1 = RingShape::projective(1);
  CHECK(chern_character(KElement::x(1)) == CohElement::hyperplane(p1, 0));
  CHECK(chern_character(KElement::one(1) - o_bundle(1, -1)) ==
        CohElement::hyperplane(p1, 0));
}

TEST_CASE("Chern character is a ring map", "[ktheory]") {
  std::vector<KElement> samples = {
      o_bundle(3, 2),
      o_bundle(3, -1),
      KElement::from_coeffs(3, {Rat(1), Rat(1, 2), Rat(0), Rat(-5)}),
      KElement::from_coeffs(3, {Rat(0), Rat(2), Rat(-1, 3), Rat(1)}),
  };
  for (const KElement& a : samples)
    for (const KElement& b : samples) {
      CHECK(chern_character(a + b) ==
            chern_character(a) + chern_character(b));
      CHECK(chern_character(a * b) ==
            chern_character(a) * chern_character(b));
    }
}

TEST_CASE("Chern character of line bundles is exponential", "[ktheory]") {
  for (unsigned n = 0; n <= 4; ++n)
    for (long long d = -static_cast<long long>(n); d <= n; ++d)
      CHECK(chern_character(o_bundle(n, d)) == exp_of_root(n, d));
}

TEST_CASE("K element formatting", "[ktheory]") {
  CHECK(k_to_string(KElement(2)) == "0");
  CHECK(k_to_string(o_bundle(2, 1)) == "1 + x");
  CHECK(k_to_string(o_bundle(2, -1)) == "1 - x + x^2");
}
