#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "orientrr/errors.hpp"
#include "orientrr/rational.hpp"
#include "orientrr/series.hpp"

namespace orientrr {

// A complex orientation, stored as the shifted Euler-class series s(t) of
// the universal line bundle in the additive coordinate t. Always s(0) = 0
// and s'(0) = 1. Preset orientations generate coefficients on demand at any
// order; custom ones carry a finite coefficient list.
class Orientation {
 public:
  enum class Kind { Additive, Ku, KuAlt, Custom };

  Orientation() : Orientation(additive()) {}

  static Orientation additive() { return Orientation(Kind::Additive, "additive"); }
  static Orientation ku() { return Orientation(Kind::Ku, "ku"); }
  static Orientation ku_alt() { return Orientation(Kind::KuAlt, "ku-alt"); }

  // Builds a custom orientation from the coefficients of t^1, t^2, ... (the
  // constant term is implicitly zero). The linear coefficient must be 1.
  static Orientation custom(std::string name, std::vector<Rat> coeffs) {
    if (name.empty()) throw InvalidOrientation("orientation name is empty");
    if (coeffs.empty() || !(coeffs[0] == 1))
      throw InvalidOrientation("orientation '" + name +
                               "' must have linear coefficient 1");
    Orientation o(Kind::Custom, std::move(name));
    o.coeffs_ = std::move(coeffs);
    return o;
  }

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }

  // Coefficients of t^1 upward for custom orientations; empty for presets.
  const std::vector<Rat>& custom_coeffs() const { return coeffs_; }

  // s(t) with `order` coefficients.
  Series euler_series(std::size_t order) const {
    switch (kind_) {
      case Kind::Additive:
        return Series::identity(order);
      case Kind::Ku:
        // 1 - e^{-t}
        return Series::constant(Rat(1), order) -
               exp_series(-Series::identity(order));
      case Kind::KuAlt:
        // e^t - 1
        return exp_series(Series::identity(order)) -
               Series::constant(Rat(1), order);
      case Kind::Custom:
        break;
    }
    if (order > coeffs_.size() + 1)
      throw InsufficientOrder("orientation '" + name_ + "' only carries " +
                              std::to_string(coeffs_.size() + 1) +
                              " coefficients");
    std::vector<Rat> c(order);
    for (std::size_t i = 1; i < order; ++i) c[i] = coeffs_[i - 1];
    return Series::from_coeffs(std::move(c));
  }

  // The unit part h(t) = s(t)/t, with `order` coefficients and h(0) = 1.
  Series unit_part(std::size_t order) const {
    return divide_by_u(euler_series(order + 1));
  }

  friend bool operator==(const Orientation& a, const Orientation& b) {
    return a.kind_ == b.kind_ && a.name_ == b.name_ && a.coeffs_ == b.coeffs_;
  }

 private:
  Orientation(Kind kind, std::string name)
      : kind_(kind), name_(std::move(name)) {}

  Kind kind_;
  std::string name_;
  std::vector<Rat> coeffs_;
};

// The three built-in orientations by name.
inline Orientation preset_orientation(const std::string& name) {
  if (name == "additive") return Orientation::additive();
  if (name == "ku") return Orientation::ku();
  if (name == "ku-alt") return Orientation::ku_alt();
  throw UnknownOrientation("unknown orientation '" + name + "'");
}

// Name-to-orientation table seeded with the presets. Preset names cannot be
// rebound; custom names can be re-registered freely.
class OrientationRegistry {
 public:
  OrientationRegistry() {
    for (const char* name : {"additive", "ku", "ku-alt"}) {
      Orientation o = preset_orientation(name);
      entries_.emplace(o.name(), o);
    }
  }

  void register_orientation(const Orientation& o) {
    auto it = entries_.find(o.name());
    if (it != entries_.end() && it->second.kind() != Orientation::Kind::Custom)
      throw InvalidOrientation("orientation name '" + o.name() +
                               "' is reserved");
    entries_.insert_or_assign(o.name(), o);
  }

  const Orientation& lookup(const std::string& name) const {
    auto it = entries_.find(name);
    if (it == entries_.end())
      throw UnknownOrientation("unknown orientation '" + name + "'");
    return it->second;
  }

  bool contains(const std::string& name) const {
    return entries_.count(name) != 0;
  }

  std::vector<std::string> names() const {
    std::vector<std::string> out;
    out.reserve(entries_.size());
    for (const auto& [name, o] : entries_) out.push_back(name);
    return out;
  }

 private:
  std::map<std::string, Orientation> entries_;
};

// A pair of orientations with their comparison data: phi = s_A o revert(s_B)
// translates the B coordinate into the A coordinate, todd = u/phi(u) is the
// correction factor for pushforwards, and multiplier = 1/todd = phi(u)/u.
struct OrientationPair {
  Orientation A;
  Orientation B;
  Series phi;         // order + 1 coefficients, phi(0) = 0, phi'(0) = 1
  Series todd;        // order coefficients, constant term 1
  Series multiplier;  // order coefficients, inverse of todd
};

// Computes the comparison data to the given order: todd and multiplier get
// `order` coefficients, phi one more so that todd * (phi/u) = 1 checks out
// at full length.
inline OrientationPair comparison(const Orientation& A, const Orientation& B,
                                  std::size_t order) {
  Series s_a = A.euler_series(order + 1);
  Series s_b = B.euler_series(order + 1);
  Series phi = compose(s_a, revert(s_b));
  Series multiplier = divide_by_u(phi);
  Series todd = invert(multiplier);
  return OrientationPair{A, B, std::move(phi), std::move(todd),
                         std::move(multiplier)};
}

// Solves for the unique series f with f(0) = 1 and [u^n] f(u)^{n+1} = 1 for
// all n < order. Writing f = p + f_n u^n with p the part already known below
// degree n, the condition reads [u^n] p^{n+1} + (n+1) f_n = 1, which pins
// f_n with pivot n+1. That triangular solve is also the uniqueness proof.
inline Series solve_todd_series(std::size_t order) {
  std::vector<Rat> f(order);
  if (order > 0) f[0] = 1;
  for (std::size_t n = 1; n < order; ++n) {
    std::vector<Rat> head(f.begin(), f.begin() + n);
    head.resize(n + 1);
    Series partial = Series::from_coeffs(std::move(head));
    Series p = pow_series(partial, static_cast<unsigned long>(n + 1));
    f[n] = (Rat(1) - p[n]) / Rat(static_cast<unsigned long>(n + 1));
  }
  return Series::from_coeffs(std::move(f));
}

// For each n < order, whether [u^n] f(u)^{n+1} = 1.
inline std::vector<bool> check_todd_condition(const Series& f,
                                              std::size_t order) {
  if (f.order() < order)
    throw InsufficientOrder("series carries " + std::to_string(f.order()) +
                            " coefficients, need " + std::to_string(order));
  std::vector<bool> ok(order);
  for (std::size_t n = 0; n < order; ++n) {
    Series p = pow_series(truncated(f, n + 1),
                          static_cast<unsigned long>(n + 1));
    ok[n] = (p[n] == 1);
  }
  return ok;
}

}  // namespace orientrr
