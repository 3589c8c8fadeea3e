#include "gammamin/specfun.hpp"

#include <cmath>
#include <stdexcept>

#include "gammamin/errors.hpp"

namespace gammamin {

namespace {

// Working precision in bits (with the BigReal representation margin applied
// by round_to on the way out, intermediate values just use the inner tag).
BigReal make_working(long value, int working_digits) {
  return BigReal(value, working_digits);
}

// Number of integer shifts needed to push `x` past `threshold`.
long shifts_to_reach(const BigReal& x, long threshold) {
  const double xd = x.to_double();
  if (xd >= static_cast<double>(threshold)) return 0;
  const long k = static_cast<long>(std::ceil(static_cast<double>(threshold) - xd));
  return k < 0 ? 0 : k;
}

}  // namespace

Constants constants(const PrecisionConfig& cfg) {
  cfg.validate();
  const int w = cfg.working_digits();
  // MPFR's constants are correctly rounded at any precision; independent
  // series oracles for them live in the test suite.
  return Constants{BigReal::const_euler(w).round_to(cfg.digits),
                   BigReal::const_pi(w).round_to(cfg.digits),
                   BigReal::const_ln2(w).round_to(cfg.digits)};
}

BigReal hurwitz_zeta(int u, const BigReal& v, const PrecisionConfig& cfg) {
  cfg.validate();
  if (u < 2) throw DomainError("hurwitz_zeta: order must be an integer >= 2");
  if (v.sign() <= 0) throw DomainError("hurwitz_zeta: second argument must be > 0");

  const int w = cfg.working_digits();
  const BigReal vw = v.round_to(w);
  const BigReal eps = BigReal::pow10(-w, w);

  // Direct partial sum over k = 0 .. K-1 with K chosen so that the remaining
  // summation argument N = K + v exceeds max(u, digits+guard).
  const long threshold = std::max<long>(u, w);
  const long count = shifts_to_reach(vw, threshold);
  BigReal sum = make_working(0, w);
  for (long k = 0; k < count; ++k) {
    sum = sum + 1L / (vw + k).pow_int(u);
  }

  // Euler-Maclaurin tail from N = K + v:
  //   N^{1-u}/(u-1) + N^{-u}/2 + sum_{j>=1} B_{2j}/(2j)! (u)_{2j-1} N^{1-u-2j}.
  const BigReal big_n = vw + count;
  sum = sum + big_n.pow_int(1L - u) / (static_cast<long>(u) - 1L);
  sum = sum + big_n.pow_int(-static_cast<long>(u)) / 2L;

  std::vector<Rational> bernoulli = bernoulli_numbers(16);
  const BigReal n_sq_inv = 1L / (big_n * big_n);
  BigReal n_pow = big_n.pow_int(-(static_cast<long>(u) + 1));  // N^{1-u-2j} at j=1
  Integer rising{u};  // (u)_{2j-1} = u (u+1) ... (u+2j-2), starts at j=1
  const long max_j = 8L * w;
  for (long j = 1;; ++j) {
    if (j > max_j) throw std::runtime_error("hurwitz_zeta: correction series did not converge");
    if (2 * j + 1 >= static_cast<long>(bernoulli.size())) {
      bernoulli = bernoulli_numbers(static_cast<int>(2 * j));
    }
    Rational factor = bernoulli[static_cast<size_t>(2 * j)] * Rational(rising);
    factor /= Rational(factorial(static_cast<unsigned long>(2 * j)));
    const BigReal term = BigReal::from_rational(factor, w) * n_pow;
    if (abs(term) < eps) break;  // remainder is bounded by this first omitted term
    sum = sum + term;
    n_pow = n_pow * n_sq_inv;
    rising *= (u + 2 * j - 1);
    rising *= (u + 2 * j);
  }
  return sum.round_to(cfg.digits);
}

BigReal riemann_zeta(int u, const PrecisionConfig& cfg) {
  cfg.validate();
  if (u < 2) throw DomainError("riemann_zeta: order must be an integer >= 2");
  return hurwitz_zeta(u, make_working(1, cfg.working_digits()), cfg);
}

BigReal digamma(const BigReal& z, const PrecisionConfig& cfg) {
  cfg.validate();
  if (z.sign() <= 0) throw DomainError("digamma: argument must be > 0");

  const int w = cfg.working_digits();
  const BigReal zw = z.round_to(w);
  const BigReal eps = BigReal::pow10(-w, w);

  // psi(z) = psi(z + count) - sum_{i<count} 1/(z+i)
  const long count = shifts_to_reach(zw, w);
  BigReal shifted_away = make_working(0, w);
  for (long i = 0; i < count; ++i) {
    shifted_away = shifted_away + 1L / (zw + i);
  }
  const BigReal x = zw + count;

  // Asymptotic series at x >= digits+guard; first omitted term bounds the rest.
  BigReal result = log(x) - 1L / (x * 2L);
  std::vector<Rational> bernoulli = bernoulli_numbers(16);
  const BigReal x_sq_inv = 1L / (x * x);
  BigReal x_pow = x_sq_inv;
  const long max_j = 8L * w;
  for (long j = 1;; ++j) {
    if (j > max_j) throw std::runtime_error("digamma: asymptotic series did not converge");
    if (2 * j + 1 >= static_cast<long>(bernoulli.size())) {
      bernoulli = bernoulli_numbers(static_cast<int>(2 * j));
    }
    Rational factor = bernoulli[static_cast<size_t>(2 * j)] / Rational(2 * j);
    const BigReal term = BigReal::from_rational(factor, w) * x_pow;
    if (abs(term) < eps) break;
    result = result - term;
    x_pow = x_pow * x_sq_inv;
  }
  return (result - shifted_away).round_to(cfg.digits);
}

BigReal digamma_reference(const BigReal& z, long terms) {
  if (z.sign() <= 0) throw DomainError("digamma_reference: argument must be > 0");
  if (terms < 100) throw DomainError("digamma_reference: need at least 100 terms");

  const int w = z.precision() + 10;
  const BigReal zw = z.round_to(w);
  BigReal sum = -constants(PrecisionConfig{std::max(w, 16), 10}).gamma.round_to(w);
  for (long n = 0; n < terms; ++n) {
    sum = sum + (1L / BigReal(n + 1, w) - 1L / (zw + n));
  }
  return sum.round_to(z.precision());
}

BigReal polygamma(int n, const BigReal& z, const PrecisionConfig& cfg) {
  cfg.validate();
  if (n < 1) throw DomainError("polygamma: derivative order must be >= 1");
  if (z.sign() <= 0) throw DomainError("polygamma: argument must be > 0");
  const BigReal zeta_part = hurwitz_zeta(n + 1, z, cfg);
  Integer scale = factorial(static_cast<unsigned long>(n));
  if (n % 2 == 0) scale = -scale;  // (-1)^{n+1} n!
  return BigReal::from_integer(scale, zeta_part.precision()) * zeta_part;
}

}  // namespace gammamin
