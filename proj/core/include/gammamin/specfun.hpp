#pragma once

#include <vector>

#include "gammamin/bigreal.hpp"
#include "gammamin/precision.hpp"
#include "gammamin/rational.hpp"

namespace gammamin {

struct Constants {
  BigReal gamma;  // Euler-Mascheroni constant
  BigReal pi;
  BigReal ln2;
};

// The three base constants to cfg.digits significant digits (ln 4 = 2*ln2).
Constants constants(const PrecisionConfig& cfg = {});

// Exact Bernoulli numbers B_0 .. B_{2*count} from the recurrence
// B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j  (B_1 = -1/2 convention).
// Backed by an append-only cache that is safe for concurrent use.
std::vector<Rational> bernoulli_numbers(int count);

// Hurwitz zeta  zeta(u, v) = sum_{k>=0} 1/(k+v)^u  for integer u >= 2, v > 0.
// Direct summation until the summation argument exceeds max(u, digits+guard),
// then the Euler-Maclaurin tail; Bernoulli corrections stop at the first term
// below 10^-(digits+guard), which bounds the truncated remainder.
BigReal hurwitz_zeta(int u, const BigReal& v, const PrecisionConfig& cfg = {});

// zeta(u) = zeta(u, 1) for integer u >= 2.
BigReal riemann_zeta(int u, const PrecisionConfig& cfg = {});

// psi(z) for z > 0: upward recurrence psi(z) = psi(z+1) - 1/z until the
// argument exceeds digits+guard, then the Bernoulli asymptotic series
// ln x - 1/(2x) - sum_j B_{2j}/(2j x^{2j}); the remainder after truncation is
// bounded by the first omitted term.
BigReal digamma(const BigReal& z, const PrecisionConfig& cfg = {});

// Partial sum of the defining series
//   psi(z) = -gamma + sum_{n=0..terms-1} (1/(n+1) - 1/(n+z)),  z > 0,
// kept verbatim as a slow independent cross-check; error ~ |1-z|/terms.
BigReal digamma_reference(const BigReal& z, long terms);

// psi^{(n)}(z) = (-1)^{n+1} n! zeta(n+1, z) for n >= 1, z > 0.
BigReal polygamma(int n, const BigReal& z, const PrecisionConfig& cfg = {});

}  // namespace gammamin
