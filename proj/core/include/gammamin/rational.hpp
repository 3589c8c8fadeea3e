#pragma once

#include <gmpxx.h>

#include <string>

namespace gammamin {

// Exact integer and rational arithmetic (Bernoulli numbers, multinomials,
// partition weights). mpq_class values are kept in canonical form by GMP.
using Integer = mpz_class;
using Rational = mpq_class;

inline Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Rational rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace gammamin
