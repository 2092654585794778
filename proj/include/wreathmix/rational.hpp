#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <cstdio>
#include <string>

namespace wreathmix {

// Arbitrary-precision integers and rationals. Every exact-arithmetic code
// path in the library uses these; doubles appear only in float-mode scans,
// Monte Carlo estimates, and the closed-form bound evaluators.
using Int = mpz_class;
using Rat = mpq_class;

inline Int factorial(unsigned n) {
  Int r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Int int_pow(Int base, unsigned e) {
  Int r = 1;
  while (e != 0) {
    if (e & 1u) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

inline Rat make_rat(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat rat_pow(const Rat& base, unsigned e) {
  Rat r = 1;
  Rat b = base;
  while (e != 0) {
    if (e & 1u) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

// Canonical "num/den" rendering; the denominator is always printed so that
// exported rows are unambiguous ("1/1", "-1/2", ...).
inline std::string rat_string(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// 12-significant-digit decimal used by every CSV writer.
inline std::string sig12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::string(buf);
}

inline std::string sig12(const Rat& r) { return sig12(r.get_d()); }

}  // namespace wreathmix
