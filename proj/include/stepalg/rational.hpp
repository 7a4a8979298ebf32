#pragma once

#include <gmpxx.h>
#include <string>
#include <stdexcept>

namespace stepalg {

// Exact rational scalar. All arithmetic in the library is exact; no
// floating point is used anywhere.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }
inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline std::string to_string(const Rat& r) { return r.get_str(); }

// Parses "p" or "p/q". Throws on malformed input.
inline Rat parse_rat(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("malformed rational: '" + s + "'");
  r.canonicalize();
  return r;
}

}  // namespace stepalg
