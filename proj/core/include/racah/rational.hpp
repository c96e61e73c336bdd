#ifndef RACAH_RATIONAL_HPP
#define RACAH_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace racah {

/// Exact arbitrary-precision arithmetic. mpq_class keeps values canonical
/// (reduced, positive denominator) through arithmetic, which is all the
/// rational contract requires.
using Rational = mpq_class;
using Integer = mpz_class;

inline Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

/// "num" for integers, "num/den" otherwise (the mpq canonical form).
inline std::string rational_to_string(const Rational& q) {
  return q.get_str();
}

/// Inverse of rational_to_string; also accepts plain integers.
inline Rational rational_from_string(const std::string& s) {
  Rational q(s);
  q.canonicalize();
  return q;
}

}  // namespace racah

#endif
