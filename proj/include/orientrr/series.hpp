#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "orientrr/errors.hpp"
#include "orientrr/rational.hpp"

namespace orientrr {

// Truncated formal power series over a commutative ring R: the coefficients
// of u^0 .. u^{order-1} of an element of R[[u]]. Coefficients at index
// order() and beyond are unknown, not zero. Binary operations truncate to
// the shorter operand, so precision loss is always explicit in the result's
// order. Values are immutable after construction.
template <typename R>
class BasicSeries {
 public:
  BasicSeries() = default;

  // Zero series of the given order.
  explicit BasicSeries(std::size_t order) : coeffs_(order) {}

  static BasicSeries from_coeffs(std::vector<R> coeffs) {
    BasicSeries s;
    s.coeffs_ = std::move(coeffs);
    return s;
  }

  static BasicSeries constant(const R& value, std::size_t order) {
    BasicSeries s(order);
    if (order > 0) s.coeffs_[0] = value;
    return s;
  }

  // The series u.
  static BasicSeries identity(std::size_t order) {
    BasicSeries s(order);
    if (order > 1) s.coeffs_[1] = R(1);
    return s;
  }

  std::size_t order() const { return coeffs_.size(); }

  // Coefficient of u^i; requires i < order().
  const R& operator[](std::size_t i) const { return coeffs_[i]; }

  const std::vector<R>& coeffs() const { return coeffs_; }

  bool is_zero() const {
    for (const R& c : coeffs_)
      if (!(c == R(0))) return false;
    return true;
  }

  // Equal iff orders match and all coefficients match.
  friend bool operator==(const BasicSeries&, const BasicSeries&) = default;

 private:
  std::vector<R> coeffs_;
};

template <typename R>
BasicSeries<R> truncated(const BasicSeries<R>& a, std::size_t order) {
  if (order > a.order())
    throw InsufficientOrder("cannot extend a series of order " +
                            std::to_string(a.order()) + " to order " +
                            std::to_string(order));
  std::vector<R> c(a.coeffs().begin(), a.coeffs().begin() + order);
  return BasicSeries<R>::from_coeffs(std::move(c));
}

template <typename R>
BasicSeries<R> operator+(const BasicSeries<R>& a, const BasicSeries<R>& b) {
  std::size_t n = std::min(a.order(), b.order());
  std::vector<R> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = a[i] + b[i];
  return BasicSeries<R>::from_coeffs(std::move(c));
}

template <typename R>
BasicSeries<R> operator-(const BasicSeries<R>& a, const BasicSeries<R>& b) {
  std::size_t n = std::min(a.order(), b.order());
  std::vector<R> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = a[i] - b[i];
  return BasicSeries<R>::from_coeffs(std::move(c));
}

template <typename R>
BasicSeries<R> operator-(const BasicSeries<R>& a) {
  std::vector<R> c(a.order());
  for (std::size_t i = 0; i < a.order(); ++i) c[i] = -a[i];
  return BasicSeries<R>::from_coeffs(std::move(c));
}

// Cauchy product truncated at the shorter order.
template <typename R>
BasicSeries<R> operator*(const BasicSeries<R>& a, const BasicSeries<R>& b) {
  std::size_t n = std::min(a.order(), b.order());
  std::vector<R> c(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == R(0)) continue;
    for (std::size_t j = 0; i + j < n; ++j) c[i + j] += a[i] * b[j];
  }
  return BasicSeries<R>::from_coeffs(std::move(c));
}

template <typename R>
BasicSeries<R> operator*(const R& s, const BasicSeries<R>& a) {
  std::vector<R> c(a.order());
  for (std::size_t i = 0; i < a.order(); ++i) c[i] = s * a[i];
  return BasicSeries<R>::from_coeffs(std::move(c));
}

template <typename R>
BasicSeries<R> operator*(const BasicSeries<R>& a, const R& s) {
  return s * a;
}

// a^k at a's order, by binary exponentiation.
template <typename R>
BasicSeries<R> pow_series(const BasicSeries<R>& a, unsigned long k) {
  BasicSeries<R> result = BasicSeries<R>::constant(R(1), a.order());
  BasicSeries<R> base = a;
  while (k > 0) {
    if (k & 1) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

// Multiplicative inverse; requires a(0) != 0. Triangular solve:
// b0 = 1/a0, b_n = -(sum_{i=1..n} a_i b_{n-i}) / a0.
template <typename R>
BasicSeries<R> invert(const BasicSeries<R>& a) {
  if (a.order() == 0 || a[0] == R(0))
    throw ZeroConstantTerm("series with zero constant term is not invertible");
  std::vector<R> b(a.order());
  b[0] = R(1) / a[0];
  for (std::size_t n = 1; n < a.order(); ++n) {
    R acc(0);
    for (std::size_t i = 1; i <= n; ++i) acc += a[i] * b[n - i];
    b[n] = -acc / a[0];
  }
  return BasicSeries<R>::from_coeffs(std::move(b));
}

// outer(inner); requires inner(0) = 0 so every output coefficient is a
// finite sum. Horner evaluation at order min(outer, inner).
template <typename R>
BasicSeries<R> compose(const BasicSeries<R>& outer,
                       const BasicSeries<R>& inner) {
  if (inner.order() == 0 || !(inner[0] == R(0)))
    throw NonzeroConstantTerm(
        "composition requires an inner series with zero constant term");
  std::size_t n = std::min(outer.order(), inner.order());
  BasicSeries<R> in = truncated(inner, n);
  BasicSeries<R> result(n);
  for (std::size_t i = n; i-- > 0;)
    result = result * in + BasicSeries<R>::constant(outer[i], n);
  return result;
}

// Strips the constant term and shifts down one power: a(u)/u for a(0) = 0.
// The result has one coefficient fewer than the input.
template <typename R>
BasicSeries<R> divide_by_u(const BasicSeries<R>& a) {
  if (a.order() == 0 || !(a[0] == R(0)))
    throw NonzeroConstantTerm("series is not divisible by u");
  std::vector<R> c(a.coeffs().begin() + 1, a.coeffs().end());
  return BasicSeries<R>::from_coeffs(std::move(c));
}

// Compositional inverse; requires a(0) = 0 and a'(0) invertible. Triangular
// coefficient-by-coefficient solve: with g determined below degree n,
// [u^n] a(g + g_n u^n) = [u^n] a(g) + a_1 g_n, so each g_n is pinned by a
// linear equation with pivot a_1.
template <typename R>
BasicSeries<R> revert(const BasicSeries<R>& a) {
  if (a.order() < 2 || !(a[0] == R(0)) || a[1] == R(0))
    throw NotReversible(
        "reversion requires a(0) = 0 and an invertible linear coefficient");
  std::size_t n = a.order();
  std::vector<R> g(n);
  g[1] = R(1) / a[1];
  for (std::size_t k = 2; k < n; ++k) {
    BasicSeries<R> partial =
        truncated(BasicSeries<R>::from_coeffs(g), k + 1);
    BasicSeries<R> composed = compose(truncated(a, k + 1), partial);
    g[k] = -composed[k] / a[1];
  }
  return BasicSeries<R>::from_coeffs(std::move(g));
}

// exp(a) for a(0) = 0; the sum terminates because a is nilpotent modulo
// u^order.
template <typename R>
BasicSeries<R> exp_series(const BasicSeries<R>& a) {
  if (a.order() == 0 || !(a[0] == R(0)))
    throw BadConstantTerm("exp requires a zero constant term");
  BasicSeries<R> result(a.order());
  BasicSeries<R> term = BasicSeries<R>::constant(R(1), a.order());
  for (unsigned long k = 1; !term.is_zero(); ++k) {
    result = result + term;
    term = term * a;
    term = (R(1) / R(k)) * term;
  }
  return result;
}

// log(a) for a(0) = 1, via log(1+x) = sum (-1)^{k+1} x^k / k.
template <typename R>
BasicSeries<R> log_series(const BasicSeries<R>& a) {
  if (a.order() == 0 || !(a[0] == R(1)))
    throw BadConstantTerm("log requires constant term 1");
  BasicSeries<R> x = a - BasicSeries<R>::constant(R(1), a.order());
  BasicSeries<R> result(a.order());
  BasicSeries<R> power = x;
  for (unsigned long k = 1; !power.is_zero(); ++k) {
    R sign = (k % 2 == 1) ? R(1) : R(-1);
    result = result + (sign / R(k)) * power;
    power = power * x;
  }
  return result;
}

// Human-readable form with zero terms suppressed, e.g.
// "1 + 1/2 u + 1/12 u^2 - 1/720 u^4".
inline std::string series_to_string(const BasicSeries<Rat>& a,
                                    const std::string& var = "u") {
  std::string out;
  for (std::size_t i = 0; i < a.order(); ++i) {
    if (a[i] == 0) continue;
    Rat coeff = a[i];
    if (out.empty()) {
      if (coeff < 0) {
        out += "-";
        coeff = -coeff;
      }
    } else {
      out += coeff < 0 ? " - " : " + ";
      if (coeff < 0) coeff = -coeff;
    }
    bool unit_coeff = (coeff == 1) && i > 0;
    if (!unit_coeff) out += rat_to_string(coeff);
    if (i > 0) {
      if (!unit_coeff) out += " ";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

using Series = BasicSeries<Rat>;

}  // namespace orientrr
