#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "orientrr/errors.hpp"
#include "orientrr/projective.hpp"
#include "orientrr/rational.hpp"
#include "orientrr/series.hpp"

namespace orientrr {

// An element of the K-theory ring of P^n, written in the nilpotent
// generator x = [L] - 1 and truncated mod x^{n+1}. Internally this is just
// a truncated univariate polynomial with n+1 stored coefficients.
class KElement {
 public:
  KElement() = default;

  // Zero element of K(P^n).
  explicit KElement(unsigned n) : n_(n), poly_(n + 1) {}

  static KElement constant(unsigned n, const Rat& value) {
    KElement a(n);
    a.poly_[0] = value;
    return a;
  }

  static KElement one(unsigned n) { return constant(n, Rat(1)); }

  // The generator x = [L] - 1; zero on P^0.
  static KElement x(unsigned n) {
    KElement a(n);
    if (n >= 1) a.poly_[1] = Rat(1);
    return a;
  }

  static KElement from_coeffs(unsigned n, std::vector<Rat> coeffs) {
    if (coeffs.size() > n + 1)
      throw DimensionMismatch("polynomial has " +
                              std::to_string(coeffs.size()) +
                              " coefficients on P^" + std::to_string(n));
    KElement a(n);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      a.poly_[i] = std::move(coeffs[i]);
    return a;
  }

  unsigned n() const { return n_; }
  const std::vector<Rat>& poly() const { return poly_; }
  const Rat& operator[](std::size_t i) const { return poly_[i]; }

  bool is_zero() const {
    for (const Rat& c : poly_)
      if (!(c == 0)) return false;
    return true;
  }

  friend bool operator==(const KElement&, const KElement&) = default;

 private:
  unsigned n_ = 0;
  std::vector<Rat> poly_{Rat(0)};
};

inline void require_same_base(const KElement& a, const KElement& b) {
  if (a.n() != b.n())
    throw DimensionMismatch("elements live on P^" + std::to_string(a.n()) +
                            " and P^" + std::to_string(b.n()));
}

inline KElement operator+(const KElement& a, const KElement& b) {
  require_same_base(a, b);
  std::vector<Rat> c(a.poly());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
  return KElement::from_coeffs(a.n(), std::move(c));
}

inline KElement operator-(const KElement& a) {
  std::vector<Rat> c(a.poly());
  for (Rat& v : c) v = -v;
  return KElement::from_coeffs(a.n(), std::move(c));
}

inline KElement operator-(const KElement& a, const KElement& b) {
  return a + (-b);
}

inline KElement operator*(const KElement& a, const KElement& b) {
  require_same_base(a, b);
  Series p = Series::from_coeffs(a.poly()) * Series::from_coeffs(b.poly());
  return KElement::from_coeffs(a.n(), p.coeffs());
}

inline KElement operator*(const Rat& s, const KElement& a) {
  std::vector<Rat> c(a.poly());
  for (Rat& v : c) v = s * v;
  return KElement::from_coeffs(a.n(), std::move(c));
}

inline KElement operator*(const KElement& a, const Rat& s) { return s * a; }

// The class [O(d)] = (1 + x)^d in K(P^n), with negative twists handled by
// inverting 1 + x in the truncated ring.
inline KElement o_bundle(unsigned n, long long d) {
  Series base = Series::from_coeffs([&] {
    std::vector<Rat> c(n + 1);
    c[0] = 1;
    if (n >= 1) c[1] = 1;
    return c;
  }());
  if (d < 0) base = invert(base);
  unsigned long long k = d < 0 ? static_cast<unsigned long long>(-d)
                               : static_cast<unsigned long long>(d);
  return KElement::from_coeffs(n, pow_series(base, k).coeffs());
}

inline std::string k_to_string(const KElement& a) {
  Series s = Series::from_coeffs(a.poly());
  return series_to_string(s, "x");
}

// The Chern character K(P^n) -> H(P^n): the ring map sending x to e^t - 1.
inline CohElement chern_character(const KElement& a) {
  RingShape shape = RingShape::projective(a.n());
  Series exp_minus_one =
      exp_series(Series::identity(a.n() + 2)) -
      Series::constant(Rat(1), a.n() + 2);
  CohElement image_of_x =
      substitute(exp_minus_one, CohElement::hyperplane(shape, 0));
  CohElement out(shape);
  for (std::size_t i = a.poly().size(); i-- > 0;)
    out = out * image_of_x + CohElement::constant(shape, a[i]);
  return out;
}

}  // namespace orientrr
