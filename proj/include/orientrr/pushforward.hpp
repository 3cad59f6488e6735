#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "orientrr/errors.hpp"
#include "orientrr/ktheory.hpp"
#include "orientrr/orientation.hpp"
#include "orientrr/projective.hpp"
#include "orientrr/rational.hpp"

namespace orientrr {

enum class MapKind { ToPoint, Inclusion, Projection };

inline std::string map_kind_to_string(MapKind kind) {
  switch (kind) {
    case MapKind::ToPoint:
      return "to-point";
    case MapKind::Inclusion:
      return "inclusion";
    case MapKind::Projection:
      return "projection";
  }
  throw BadMapKind("unhandled map kind");
}

inline MapKind map_kind_from_string(const std::string& name) {
  if (name == "to-point") return MapKind::ToPoint;
  if (name == "inclusion") return MapKind::Inclusion;
  if (name == "projection") return MapKind::Projection;
  throw BadMapKind("unknown map kind '" + name + "'");
}

// An oriented wrong-way map between products of projective spaces: collapse
// to a point, a factorwise linear inclusion, or a projection that drops one
// factor. Everything needed for the pushforward is derived from the shapes.
class PushforwardProblem {
 public:
  static PushforwardProblem to_point(Orientation A, RingShape source) {
    return PushforwardProblem(std::move(A), MapKind::ToPoint,
                              std::move(source), RingShape::point(), 0);
  }

  // The product of per-factor linear embeddings P^{m_i} into P^{n_i}.
  static PushforwardProblem inclusion(Orientation A, RingShape source,
                                      RingShape target) {
    if (source.factors() != target.factors())
      throw ShapeMismatch("inclusion needs matching factor counts, got " +
                          source.to_string() + " into " + target.to_string());
    for (std::size_t i = 0; i < source.factors(); ++i)
      if (source.caps[i] > target.caps[i])
        throw DimensionMismatch("factor " + std::to_string(i + 1) + " of " +
                                source.to_string() + " does not include into " +
                                target.to_string());
    return PushforwardProblem(std::move(A), MapKind::Inclusion,
                              std::move(source), std::move(target), 0);
  }

  // Forgets factor `drop` of the source product.
  static PushforwardProblem projection(Orientation A, RingShape source,
                                       std::size_t drop) {
    if (drop >= source.factors())
      throw ShapeMismatch("cannot drop factor " + std::to_string(drop + 1) +
                          " of " + source.to_string());
    RingShape target = source;
    target.caps.erase(target.caps.begin() +
                      static_cast<std::ptrdiff_t>(drop));
    return PushforwardProblem(std::move(A), MapKind::Projection,
                              std::move(source), std::move(target), drop);
  }

  const Orientation& orientation() const { return A_; }
  MapKind kind() const { return kind_; }
  const RingShape& source() const { return source_; }
  const RingShape& target() const { return target_; }
  std::size_t dropped_factor() const { return drop_; }

  // Same map with a different orientation.
  PushforwardProblem with_orientation(Orientation A) const {
    PushforwardProblem p = *this;
    p.A_ = std::move(A);
    return p;
  }

  // The virtual bundle T_f = T(source) - pullback(T(target)), as a split
  // bundle on the source. Pullback identifies the target hyperplane classes
  // with the source ones, so twist vectors carry over unchanged.
  SplitBundle relative_tangent() const {
    switch (kind_) {
      case MapKind::ToPoint:
        return tangent_bundle(source_);
      case MapKind::Inclusion: {
        SplitBundle t_f = tangent_bundle(source_);
        SplitBundle t_target = tangent_bundle(target_);
        for (const LineRoot& r : t_target.roots())
          t_f.add_root(-r.sign, r.twist);
        return t_f;
      }
      case MapKind::Projection: {
        SplitBundle t_f(source_);
        std::vector<long long> twist(source_.factors(), 0);
        twist[drop_] = 1;
        for (unsigned copy = 0; copy <= source_.caps[drop_]; ++copy)
          t_f.add_root(1, twist);
        t_f.add_root(-1, std::vector<long long>(source_.factors(), 0));
        return t_f;
      }
    }
    throw BadMapKind("unhandled map kind");
  }

  // f^*: restriction of a class on the target to the source.
  CohElement pullback(const CohElement& a) const {
    if (!(a.shape() == target_))
      throw ShapeMismatch("pullback input lives on " +
                          a.shape().to_string() + ", target is " +
                          target_.to_string());
    CohElement out(source_);
    for (const auto& [exps, coeff] : a.terms()) {
      Exponents lifted;
      switch (kind_) {
        case MapKind::ToPoint:
          lifted.assign(source_.factors(), 0);
          break;
        case MapKind::Inclusion:
          lifted = exps;
          break;
        case MapKind::Projection:
          lifted = exps;
          lifted.insert(lifted.begin() + static_cast<std::ptrdiff_t>(drop_),
                        0u);
          break;
      }
      out.add_term(lifted, coeff);
    }
    return out;
  }

  std::string to_string() const {
    switch (kind_) {
      case MapKind::ToPoint:
        return source_.to_string() + "->pt";
      case MapKind::Inclusion:
        return source_.to_string() + "->" + target_.to_string();
      case MapKind::Projection:
        return source_.to_string() + "->" + target_.to_string() +
               " drop " + std::to_string(drop_ + 1);
    }
    throw BadMapKind("unhandled map kind");
  }

 private:
  PushforwardProblem(Orientation A, MapKind kind, RingShape source,
                     RingShape target, std::size_t drop)
      : A_(std::move(A)),
        kind_(kind),
        source_(std::move(source)),
        target_(std::move(target)),
        drop_(drop) {}

  Orientation A_;
  MapKind kind_;
  RingShape source_;
  RingShape target_;
  std::size_t drop_;
};

namespace detail {

// Pushforward for the additive orientation, where the map is elementary:
// collapse extracts the top coefficient, an inclusion raises each exponent
// by the codimension of its factor, and a projection reads off the top
// power of the dropped variable.
inline CohElement additive_pushforward(const PushforwardProblem& problem,
                                       const CohElement& a) {
  const RingShape& src = problem.source();
  const RingShape& tgt = problem.target();
  CohElement out(tgt);
  switch (problem.kind()) {
    case MapKind::ToPoint: {
      Exponents top(src.caps.begin(), src.caps.end());
      out.add_term(Exponents{}, a.coefficient(top));
      return out;
    }
    case MapKind::Inclusion: {
      for (const auto& [exps, coeff] : a.terms()) {
        Exponents shifted = exps;
        for (std::size_t i = 0; i < shifted.size(); ++i)
          shifted[i] += tgt.caps[i] - src.caps[i];
        out.add_term(shifted, coeff);
      }
      return out;
    }
    case MapKind::Projection: {
      std::size_t drop = problem.dropped_factor();
      for (const auto& [exps, coeff] : a.terms()) {
        if (exps[drop] != src.caps[drop]) continue;
        Exponents kept = exps;
        kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(drop));
        out.add_term(kept, coeff);
      }
      return out;
    }
  }
  throw BadMapKind("unhandled map kind");
}

}  // namespace detail

// f_*^A(a), computed as the additive pushforward of a corrected by the Todd
// class of the relative tangent bundle: f_*^A(a) = f_*^add(a * td_{A,add}(T_f)).
inline CohElement pushforward(const PushforwardProblem& problem,
                              const CohElement& a) {
  if (!(a.shape() == problem.source()))
    throw ShapeMismatch("class lives on " + a.shape().to_string() +
                        ", map source is " + problem.source().to_string());
  CohElement corrected =
      a * todd_class(problem.orientation(), Orientation::additive(),
                     problem.relative_tangent());
  return detail::additive_pushforward(problem, corrected);
}

// Integration over the whole space: the pushforward to a point, unwrapped
// to a scalar.
inline Rat integrate(const Orientation& A, const RingShape& shape,
                     const CohElement& a) {
  if (!(a.shape() == shape))
    throw ShapeMismatch("class lives on " + a.shape().to_string() +
                        ", integrating over " + shape.to_string());
  CohElement value =
      pushforward(PushforwardProblem::to_point(A, shape), a);
  return value.coefficient(Exponents{});
}

// Euler characteristic of O(d) on P^n computed cohomologically:
// the integral of ch(O(d)) times the Todd class of the tangent bundle.
// The result is asserted to be an integer.
inline Rat chi_hrr(unsigned n, long long d) {
  RingShape shape = RingShape::projective(n);
  CohElement ch = chern_character(o_bundle(n, d));
  CohElement td = todd_class(Orientation::ku(), Orientation::additive(),
                             tangent_bundle(shape));
  Rat chi = integrate(Orientation::additive(), shape, ch * td);
  to_integer(chi);
  return chi;
}

// The classical sheaf cohomology value of chi(P^n, O(d)) in polynomial
// form: the binomial coefficient C(n+d, n) written as
// (d+1)(d+2)...(d+n)/n!, which stays valid for every integer d.
inline BigInt chi_oracle(unsigned n, long long d) {
  Rat acc(1);
  for (unsigned k = 1; k <= n; ++k)
    acc *= Rat(d + static_cast<long long>(k)) / Rat(k);
  return to_integer(acc);
}

}  // namespace orientrr
