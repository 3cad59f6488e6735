#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "orientrr/errors.hpp"
#include "orientrr/orientation.hpp"
#include "orientrr/projective.hpp"
#include "orientrr/rational.hpp"
#include "orientrr/series.hpp"
#include "orientrr/verify.hpp"

namespace orientrr {

// Insertion-ordered documents so a serialized report is byte-stable.
using Json = nlohmann::ordered_json;

namespace jsondetail {

inline const Json& expect(const Json& j, const char* key,
                          const std::string& what) {
  auto it = j.find(key);
  if (!j.is_object() || it == j.end())
    throw ParseError(what + ": missing field '" + key + "'");
  return *it;
}

inline std::string expect_string(const Json& j, const std::string& what) {
  if (!j.is_string()) throw ParseError(what + ": expected a string");
  return j.get<std::string>();
}

inline long long expect_integer(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) throw ParseError(what + ": expected an integer");
  return j.get<long long>();
}

inline const Json& expect_array(const Json& j, const std::string& what) {
  if (!j.is_array()) throw ParseError(what + ": expected an array");
  return j;
}

}  // namespace jsondetail

// Rationals travel as strings ("p" or "p/q") so no JSON consumer can lose
// precision on them.
inline Json series_to_json(const Series& s) {
  Json out = Json::array();
  for (std::size_t i = 0; i < s.order(); ++i)
    out.push_back(rat_to_string(s[i]));
  return out;
}

inline Series series_from_json(const Json& j) {
  jsondetail::expect_array(j, "series");
  std::vector<Rat> coeffs;
  coeffs.reserve(j.size());
  for (const Json& entry : j)
    coeffs.push_back(
        rat_from_string(jsondetail::expect_string(entry, "series entry")));
  return Series::from_coeffs(std::move(coeffs));
}

inline Json shape_to_json(const RingShape& shape) {
  Json out = Json::array();
  for (unsigned n : shape.caps) out.push_back(n);
  return out;
}

inline RingShape shape_from_json(const Json& j) {
  jsondetail::expect_array(j, "shape");
  std::vector<unsigned> caps;
  caps.reserve(j.size());
  for (const Json& entry : j) {
    long long n = jsondetail::expect_integer(entry, "shape entry");
    if (n < 0) throw ParseError("shape entry is negative");
    caps.push_back(static_cast<unsigned>(n));
  }
  return RingShape::product(std::move(caps));
}

// {"shape":[n1,...], "terms":[{"e":[e1,...], "c":"p/q"}, ...]}
inline Json coh_to_json(const CohElement& a) {
  Json terms = Json::array();
  for (const auto& [exps, coeff] : a.terms()) {
    Json e = Json::array();
    for (unsigned v : exps) e.push_back(v);
    terms.push_back(Json{{"e", e}, {"c", rat_to_string(coeff)}});
  }
  return Json{{"shape", shape_to_json(a.shape())}, {"terms", terms}};
}

inline CohElement coh_from_json(const Json& j) {
  RingShape shape = shape_from_json(jsondetail::expect(j, "shape", "class"));
  CohElement out(shape);
  for (const Json& term :
       jsondetail::expect_array(jsondetail::expect(j, "terms", "class"),
                                "class terms")) {
    const Json& exps_json = jsondetail::expect(term, "e", "class term");
    jsondetail::expect_array(exps_json, "class term exponents");
    Exponents exps;
    exps.reserve(exps_json.size());
    for (const Json& e : exps_json) {
      long long v = jsondetail::expect_integer(e, "class term exponent");
      if (v < 0) throw ParseError("class term exponent is negative");
      exps.push_back(static_cast<unsigned>(v));
    }
    Rat coeff = rat_from_string(jsondetail::expect_string(
        jsondetail::expect(term, "c", "class term"), "class coefficient"));
    if (exps.size() != shape.factors())
      throw ParseError("class term has " + std::to_string(exps.size()) +
                       " exponents, shape has " +
                       std::to_string(shape.factors()) + " factors");
    out.add_term(exps, coeff);
  }
  return out;
}

// {"shape":[n1,...], "roots":[{"sign":1, "d":[d1,...]}, ...]}
inline Json bundle_to_json(const SplitBundle& v) {
  Json roots = Json::array();
  for (const LineRoot& r : v.roots()) {
    Json d = Json::array();
    for (long long twist : r.twist) d.push_back(twist);
    roots.push_back(Json{{"sign", r.sign}, {"d", d}});
  }
  return Json{{"shape", shape_to_json(v.shape())}, {"roots", roots}};
}

inline SplitBundle bundle_from_json(const Json& j) {
  RingShape shape = shape_from_json(jsondetail::expect(j, "shape", "bundle"));
  SplitBundle out(shape);
  for (const Json& root :
       jsondetail::expect_array(jsondetail::expect(j, "roots", "bundle"),
                                "bundle roots")) {
    long long sign = jsondetail::expect_integer(
        jsondetail::expect(root, "sign", "bundle root"), "bundle root sign");
    if (sign != 1 && sign != -1)
      throw ParseError("bundle root sign must be 1 or -1");
    const Json& d_json = jsondetail::expect(root, "d", "bundle root");
    jsondetail::expect_array(d_json, "bundle root twists");
    std::vector<long long> twist;
    twist.reserve(d_json.size());
    for (const Json& d : d_json)
      twist.push_back(jsondetail::expect_integer(d, "bundle root twist"));
    if (twist.size() != shape.factors())
      throw ParseError("bundle root has " + std::to_string(twist.size()) +
                       " twists, shape has " +
                       std::to_string(shape.factors()) + " factors");
    out.add_root(static_cast<int>(sign), std::move(twist));
  }
  return out;
}

// {"name":..., "coeffs":[...]} with coeffs the series of t^1, t^2, ...; the
// constant term is implicitly zero.
inline Json orientation_to_json(const Orientation& o, std::size_t order) {
  std::size_t avail = o.kind() == Orientation::Kind::Custom
                          ? o.custom_coeffs().size() + 1
                          : order;
  std::size_t n = order < avail ? order : avail;
  Series s = o.euler_series(n);
  Json coeffs = Json::array();
  for (std::size_t i = 1; i < s.order(); ++i)
    coeffs.push_back(rat_to_string(s[i]));
  return Json{{"name", o.name()}, {"coeffs", coeffs}};
}

inline Orientation orientation_from_json(const Json& j) {
  std::string name = jsondetail::expect_string(
      jsondetail::expect(j, "name", "orientation"), "orientation name");
  std::vector<Rat> coeffs;
  for (const Json& entry : jsondetail::expect_array(
           jsondetail::expect(j, "coeffs", "orientation"),
           "orientation coeffs"))
    coeffs.push_back(rat_from_string(
        jsondetail::expect_string(entry, "orientation coefficient")));
  return Orientation::custom(std::move(name), std::move(coeffs));
}

inline Json report_to_json(const VerificationReport& report) {
  Json cases = Json::array();
  for (const CaseResult& c : report.cases)
    cases.push_back(
        Json{{"index", c.index}, {"input", c.input}, {"pass", c.pass}});
  return Json{{"suite", report.suite},
              {"seed", report.seed},
              {"cases", cases},
              {"verdict", report.verdict()}};
}

}  // namespace orientrr
