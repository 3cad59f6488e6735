#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "orientrr/errors.hpp"
#include "orientrr/orientation.hpp"
#include "orientrr/rational.hpp"
#include "orientrr/series.hpp"

namespace orientrr {

// A product of projective spaces P^{n_1} x ... x P^{n_k}, recorded by the
// exponent caps of its cohomology ring Q[t_1..t_k]/(t_i^{n_i+1}). The empty
// product is a point.
struct RingShape {
  std::vector<unsigned> caps;

  static RingShape point() { return RingShape{}; }
  static RingShape projective(unsigned n) { return RingShape{{n}}; }
  static RingShape product(std::vector<unsigned> caps) {
    return RingShape{std::move(caps)};
  }

  std::size_t factors() const { return caps.size(); }

  // Nilpotency bound: the top monomial has total degree sum(caps).
  unsigned total_cap() const {
    unsigned total = 0;
    for (unsigned n : caps) total += n;
    return total;
  }

  std::string to_string() const {
    if (caps.empty()) return "pt";
    std::string out;
    for (std::size_t i = 0; i < caps.size(); ++i) {
      if (i > 0) out += "x";
      out += "P^" + std::to_string(caps[i]);
    }
    return out;
  }

  friend bool operator==(const RingShape&, const RingShape&) = default;
};

using Exponents = std::vector<unsigned>;

// An element of the truncated polynomial ring attached to a RingShape,
// stored sparsely. Monomials beyond a cap do not exist in the ring, so
// arithmetic silently drops them; zero coefficients are never stored.
class CohElement {
 public:
  CohElement() = default;

  explicit CohElement(RingShape shape) : shape_(std::move(shape)) {}

  static CohElement constant(RingShape shape, const Rat& value) {
    CohElement e(std::move(shape));
    e.add_term(Exponents(e.shape_.factors(), 0), value);
    return e;
  }

  // The hyperplane class t_i of factor i. On a P^0 factor this is zero.
  static CohElement hyperplane(RingShape shape, std::size_t factor) {
    if (factor >= shape.factors())
      throw ShapeMismatch("hyperplane index " + std::to_string(factor) +
                          " out of range for " + shape.to_string());
    CohElement e(std::move(shape));
    Exponents exps(e.shape_.factors(), 0);
    exps[factor] = 1;
    e.add_term(exps, Rat(1));
    return e;
  }

  static CohElement monomial(RingShape shape, Exponents exps,
                             const Rat& coeff) {
    if (exps.size() != shape.factors())
      throw ShapeMismatch("exponent tuple has " +
                          std::to_string(exps.size()) + " entries for " +
                          shape.to_string());
    CohElement e(std::move(shape));
    e.add_term(exps, coeff);
    return e;
  }

  const RingShape& shape() const { return shape_; }
  const std::map<Exponents, Rat>& terms() const { return terms_; }

  Rat coefficient(const Exponents& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  bool is_zero() const { return terms_.empty(); }

  // Accumulates coeff onto the monomial, dropping it if a cap is exceeded
  // and erasing the entry if the sum cancels.
  void add_term(const Exponents& exps, const Rat& coeff) {
    if (exps.size() != shape_.factors())
      throw ShapeMismatch("exponent tuple has " +
                          std::to_string(exps.size()) + " entries for " +
                          shape_.to_string());
    if (coeff == 0) return;
    for (std::size_t i = 0; i < exps.size(); ++i)
      if (exps[i] > shape_.caps[i]) return;
    auto [it, fresh] = terms_.emplace(exps, coeff);
    if (!fresh) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  friend bool operator==(const CohElement&, const CohElement&) = default;

 private:
  RingShape shape_;
  std::map<Exponents, Rat> terms_;
};

inline void require_same_shape(const CohElement& a, const CohElement& b) {
  if (!(a.shape() == b.shape()))
    throw ShapeMismatch("elements live on " + a.shape().to_string() +
                        " and " + b.shape().to_string());
}

inline CohElement operator+(const CohElement& a, const CohElement& b) {
  require_same_shape(a, b);
  CohElement out = a;
  for (const auto& [exps, coeff] : b.terms()) out.add_term(exps, coeff);
  return out;
}

inline CohElement operator-(const CohElement& a) {
  CohElement out(a.shape());
  for (const auto& [exps, coeff] : a.terms()) out.add_term(exps, -coeff);
  return out;
}

inline CohElement operator-(const CohElement& a, const CohElement& b) {
  return a + (-b);
}

inline CohElement operator*(const CohElement& a, const CohElement& b) {
  require_same_shape(a, b);
  CohElement out(a.shape());
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) {
      Exponents exps(ea.size());
      for (std::size_t i = 0; i < ea.size(); ++i) exps[i] = ea[i] + eb[i];
      out.add_term(exps, ca * cb);
    }
  return out;
}

inline CohElement operator*(const Rat& s, const CohElement& a) {
  CohElement out(a.shape());
  for (const auto& [exps, coeff] : a.terms()) out.add_term(exps, s * coeff);
  return out;
}

inline CohElement operator*(const CohElement& a, const Rat& s) {
  return s * a;
}

// Tensor of elements on disjoint factor sets: shapes concatenate and
// exponent tuples are juxtaposed.
inline CohElement external_product(const CohElement& a, const CohElement& b) {
  std::vector<unsigned> caps = a.shape().caps;
  caps.insert(caps.end(), b.shape().caps.begin(), b.shape().caps.end());
  CohElement out(RingShape::product(std::move(caps)));
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) {
      Exponents exps = ea;
      exps.insert(exps.end(), eb.begin(), eb.end());
      out.add_term(exps, ca * cb);
    }
  return out;
}

// Evaluates a one-variable series at a nilpotent ring element. Terminates
// when the powers of arg die out; if the series runs out of known
// coefficients first, the result would depend on unknown data, so that is
// an error rather than a silent truncation.
inline CohElement substitute(const Series& series, const CohElement& arg) {
  Exponents origin(arg.shape().factors(), 0);
  if (!(arg.coefficient(origin) == 0))
    throw NonNilpotentArgument("substitution argument has constant term " +
                               rat_to_string(arg.coefficient(origin)));
  CohElement out(arg.shape());
  CohElement power = CohElement::constant(arg.shape(), Rat(1));
  for (std::size_t i = 0; !power.is_zero(); ++i) {
    if (i >= series.order())
      throw InsufficientOrder(
          "series of order " + std::to_string(series.order()) +
          " is too short to substitute on " + arg.shape().to_string());
    out = out + series[i] * power;
    power = power * arg;
  }
  return out;
}

inline std::string exponents_to_string(const Exponents& exps,
                                       bool single_factor) {
  std::string out;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    if (!out.empty()) out += " ";
    out += single_factor ? "t" : "t" + std::to_string(i + 1);
    if (exps[i] > 1) out += "^" + std::to_string(exps[i]);
  }
  return out;
}

inline std::string coh_to_string(const CohElement& a) {
  if (a.is_zero()) return "0";
  bool single = a.shape().factors() == 1;
  std::string out;
  for (const auto& [exps, coeff] : a.terms()) {
    Rat c = coeff;
    if (out.empty()) {
      if (c < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    std::string mono = exponents_to_string(exps, single);
    if (mono.empty()) {
      out += rat_to_string(c);
    } else {
      if (!(c == 1)) out += rat_to_string(c) + " ";
      out += mono;
    }
  }
  return out;
}

// A formal sum of line bundles O(d_1,...,d_k) with signs, over a fixed
// shape. Signs make the bundle virtual; the twist vector is the first Chern
// class written in the hyperplane basis.
struct LineRoot {
  int sign;                      // +1 or -1
  std::vector<long long> twist;  // one entry per factor

  friend bool operator==(const LineRoot&, const LineRoot&) = default;
};

class SplitBundle {
 public:
  SplitBundle() = default;

  explicit SplitBundle(RingShape shape) : shape_(std::move(shape)) {}

  // A single line bundle O(d_1,...,d_k).
  static SplitBundle line(RingShape shape, std::vector<long long> twist) {
    SplitBundle v(std::move(shape));
    v.add_root(1, std::move(twist));
    return v;
  }

  // rank copies of the trivial line bundle.
  static SplitBundle trivial(RingShape shape, unsigned rank) {
    SplitBundle v(std::move(shape));
    for (unsigned i = 0; i < rank; ++i)
      v.add_root(1, std::vector<long long>(v.shape_.factors(), 0));
    return v;
  }

  void add_root(int sign, std::vector<long long> twist) {
    if (sign != 1 && sign != -1)
      throw InvalidBundle("root sign must be +1 or -1");
    if (twist.size() != shape_.factors())
      throw ShapeMismatch("twist vector has " + std::to_string(twist.size()) +
                          " entries for " + shape_.to_string());
    roots_.push_back(LineRoot{sign, std::move(twist)});
  }

  const RingShape& shape() const { return shape_; }
  const std::vector<LineRoot>& roots() const { return roots_; }

  int virtual_rank() const {
    int rank = 0;
    for (const LineRoot& r : roots_) rank += r.sign;
    return rank;
  }

  bool is_effective() const {
    for (const LineRoot& r : roots_)
      if (r.sign < 0) return false;
    return true;
  }

  // The root as a cohomology class: sum of twist_i * t_i.
  CohElement root_element(std::size_t index) const {
    const LineRoot& r = roots_.at(index);
    CohElement out(shape_);
    for (std::size_t i = 0; i < shape_.factors(); ++i) {
      if (r.twist[i] == 0) continue;
      Exponents exps(shape_.factors(), 0);
      exps[i] = 1;
      out.add_term(exps, Rat(r.twist[i]));
    }
    return out;
  }

  SplitBundle direct_sum(const SplitBundle& other) const {
    if (!(shape_ == other.shape_))
      throw ShapeMismatch("bundles live on " + shape_.to_string() + " and " +
                          other.shape_.to_string());
    SplitBundle out = *this;
    out.roots_.insert(out.roots_.end(), other.roots_.begin(),
                      other.roots_.end());
    return out;
  }

  SplitBundle negated() const {
    SplitBundle out = *this;
    for (LineRoot& r : out.roots_) r.sign = -r.sign;
    return out;
  }

  friend bool operator==(const SplitBundle&, const SplitBundle&) = default;

 private:
  RingShape shape_;
  std::vector<LineRoot> roots_;
};

inline std::string bundle_to_string(const SplitBundle& v) {
  if (v.roots().empty()) return "0";
  std::string out;
  for (const LineRoot& r : v.roots()) {
    if (!out.empty()) out += " ";
    out += r.sign > 0 ? "+O(" : "-O(";
    for (std::size_t i = 0; i < r.twist.size(); ++i) {
      if (i > 0) out += ",";
      out += std::to_string(r.twist[i]);
    }
    out += ")";
  }
  return out;
}

// Tangent bundle via the per-factor Euler sequence
// 0 -> O -> O(1)^{n+1} -> TP^n -> 0, so each factor P^{n_i} contributes
// n_i + 1 copies of O(1) in its own variable and one negative trivial root.
inline SplitBundle tangent_bundle(const RingShape& shape) {
  SplitBundle v(shape);
  for (std::size_t i = 0; i < shape.factors(); ++i) {
    std::vector<long long> twist(shape.factors(), 0);
    twist[i] = 1;
    for (unsigned copy = 0; copy <= shape.caps[i]; ++copy)
      v.add_root(1, twist);
    v.add_root(-1, std::vector<long long>(shape.factors(), 0));
  }
  return v;
}

// Product over roots of s_A evaluated at the root. Only defined for actual
// bundles; a zero root correctly kills the class since s_A(0) = 0.
inline CohElement euler_class(const Orientation& A, const SplitBundle& V) {
  if (!V.is_effective())
    throw VirtualBundle("Euler class of a virtual bundle is undefined");
  Series s = A.euler_series(V.shape().total_cap() + 1);
  CohElement out = CohElement::constant(V.shape(), Rat(1));
  for (std::size_t i = 0; i < V.roots().size(); ++i)
    out = out * substitute(s, V.root_element(i));
  return out;
}

// Todd class of V relative to the orientation change A <- B. Per root the
// factor is (h_B/h_A)(root) where h_X(u) = s_X(u)/u; both unit parts have
// constant term 1, so zero roots contribute 1 and negative roots contribute
// the reciprocal factor. This evaluates td_{A,B} at the B-coordinate Chern
// roots without leaving the additive coordinate, because
// td_{A,B}(s_B(t)) = s_B(t)/s_A(t).
inline CohElement todd_class(const Orientation& A, const Orientation& B,
                             const SplitBundle& V) {
  std::size_t order = V.shape().total_cap() + 1;
  Series factor = B.unit_part(order) * invert(A.unit_part(order));
  Series factor_inv = invert(factor);
  CohElement out = CohElement::constant(V.shape(), Rat(1));
  for (std::size_t i = 0; i < V.roots().size(); ++i) {
    const Series& f = V.roots()[i].sign > 0 ? factor : factor_inv;
    out = out * substitute(f, V.root_element(i));
  }
  return out;
}

// The multiplier class is the unit relating the two Thom classes of V; it
// inverts the Todd class, which is the same as swapping the orientations.
inline CohElement multiplier_class(const Orientation& A, const Orientation& B,
                                   const SplitBundle& V) {
  return todd_class(B, A, V);
}

}  // namespace orientrr
