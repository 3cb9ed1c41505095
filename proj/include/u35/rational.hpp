#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace u35 {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

// Parses "p/q" or "p". Throws std::invalid_argument on malformed input.
inline Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational literal: " + s);
  }
}

// "p/q", or "p" when the denominator is 1.
inline std::string rat_str(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

// r * scale, required to be an integer fitting in int64.
inline int64_t rat_scaled(const Rat& r, int64_t scale) {
  Rat v = r * scale;
  if (denominator(v) != 1)
    throw std::invalid_argument("value " + rat_str(r) + " not integral at scale " +
                                std::to_string(scale));
  return static_cast<int64_t>(numerator(v));
}

}  // namespace u35
