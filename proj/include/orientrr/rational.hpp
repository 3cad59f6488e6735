#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <string_view>

#include "orientrr/errors.hpp"

namespace orientrr {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational scalar. The backend keeps every value canonical (lowest
// terms, positive denominator) and no operation ever rounds. Expression
// templates are switched off so arithmetic results are plain Rat values.
using Rat = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<
        boost::multiprecision::cpp_int::backend_type>,
    boost::multiprecision::et_off>;

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

inline BigInt to_integer(const Rat& r) {
  if (!is_integer(r))
    throw NonIntegerResult("expected an integer, got " + r.str());
  return numerator(r);
}

inline std::string rat_to_string(const Rat& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

// Parses "p" or "p/q" with decimal digits and q > 0. The value is
// canonicalized, so non-lowest-terms input round-trips to its reduced form.
inline Rat rat_from_string(std::string_view text) {
  auto fail = [&]() -> Rat {
    throw ParseError("bad rational literal '" + std::string(text) + "'");
  };
  std::size_t pos = 0;
  auto scan_int = [&](bool allow_sign) -> std::string_view {
    std::size_t start = pos;
    if (allow_sign && pos < text.size() && text[pos] == '-') ++pos;
    std::size_t digits = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      ++pos;
      ++digits;
    }
    if (digits == 0) return {};
    return text.substr(start, pos - start);
  };

  std::string_view num_part = scan_int(true);
  if (num_part.empty()) return fail();
  std::string_view den_part = "1";
  if (pos < text.size()) {
    if (text[pos] != '/') return fail();
    ++pos;
    den_part = scan_int(false);
    if (den_part.empty() || pos != text.size()) return fail();
  }
  BigInt num{std::string(num_part)};
  BigInt den{std::string(den_part)};
  if (den == 0) return fail();
  return Rat(num, den);
}

}  // namespace orientrr
