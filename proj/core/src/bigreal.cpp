#include "gammamin/bigreal.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "gammamin/errors.hpp"

namespace gammamin {

namespace {

// Smaller of the two tags governs the result, per the carrying rule.
int joint_digits(const BigReal& a, const BigReal& b) {
  return std::min(a.precision(), b.precision());
}

}  // namespace

int BigReal::check_digits(int digits) {
  if (digits < kMinDigits) {
    throw DomainError("BigReal: precision must be >= 16 decimal digits");
  }
  return digits;
}

// ceil(digits * log2(10)) plus a fixed 16-bit representation margin, so that
// narrowing to `digits` and then printing `digits` decimal digits never flips
// a rounding decision for values this project produces.
mpfr_prec_t BigReal::bits_for(int digits) {
  const long long scaled = static_cast<long long>(digits) * 3321928095LL;
  return static_cast<mpfr_prec_t>((scaled + 999999999LL) / 1000000000LL) + 16;
}

BigReal::BigReal(RawTag, int digits) : digits_(check_digits(digits)) {
  mpfr_init2(v_, bits_for(digits_));
}

BigReal::BigReal(long value, int digits) : BigReal(RawTag{}, digits) {
  mpfr_set_si(v_, value, MPFR_RNDN);
}

BigReal::BigReal(const BigReal& other) : digits_(other.digits_) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept : digits_(other.digits_) {
  v_[0] = other.v_[0];
  mpfr_init2(other.v_, MPFR_PREC_MIN);  // leave the source destructible
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
    digits_ = other.digits_;
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  if (this != &other) {
    mpfr_swap(v_, other.v_);
    std::swap(digits_, other.digits_);
  }
  return *this;
}

BigReal::~BigReal() { mpfr_clear(v_); }

BigReal BigReal::from_ratio(long num, long den, int digits) {
  if (den == 0) throw DomainError("BigReal: zero denominator");
  return from_rational(rational(num, den), digits);
}

BigReal BigReal::from_rational(const Rational& q, int digits) {
  BigReal r(RawTag{}, digits);
  mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
  return r;
}

BigReal BigReal::from_integer(const Integer& n, int digits) {
  BigReal r(RawTag{}, digits);
  mpfr_set_z(r.v_, n.get_mpz_t(), MPFR_RNDN);
  return r;
}

BigReal BigReal::parse(std::string_view text, int digits) {
  const std::string s(text);
  if (s.empty()) throw std::invalid_argument("BigReal: empty number literal");
  if (const auto slash = s.find('/'); slash != std::string::npos) {
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0) {
      throw std::invalid_argument("BigReal: malformed rational '" + s + "'");
    }
    if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0) {
      throw DomainError("BigReal: zero denominator in '" + s + "'");
    }
    q.canonicalize();
    return from_rational(q, digits);
  }
  BigReal r(RawTag{}, digits);
  char* end = nullptr;
  mpfr_strtofr(r.v_, s.c_str(), &end, 10, MPFR_RNDN);
  if (end == s.c_str() || *end != '\0') {
    throw std::invalid_argument("BigReal: malformed number '" + s + "'");
  }
  return r;
}

BigReal BigReal::pow10(long exp, int digits) {
  BigReal r(RawTag{}, digits);
  if (exp >= 0) {
    mpfr_ui_pow_ui(r.v_, 10u, static_cast<unsigned long>(exp), MPFR_RNDN);
  } else {
    mpfr_t p;
    mpfr_init2(p, mpfr_get_prec(r.v_) + 8);
    mpfr_ui_pow_ui(p, 10u, static_cast<unsigned long>(-exp), MPFR_RNDN);
    mpfr_ui_div(r.v_, 1u, p, MPFR_RNDN);
    mpfr_clear(p);
  }
  return r;
}

BigReal BigReal::const_pi(int digits) {
  BigReal r(RawTag{}, digits);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

BigReal BigReal::const_euler(int digits) {
  BigReal r(RawTag{}, digits);
  mpfr_const_euler(r.v_, MPFR_RNDN);
  return r;
}

BigReal BigReal::const_ln2(int digits) {
  BigReal r(RawTag{}, digits);
  mpfr_const_log2(r.v_, MPFR_RNDN);
  return r;
}

BigReal BigReal::round_to(int digits) const {
  BigReal r(RawTag{}, digits);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

BigReal BigReal::operator-() const {
  BigReal r(RawTag{}, digits_);
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

BigReal operator+(const BigReal& a, const BigReal& b) {
  BigReal r(BigReal::RawTag{}, joint_digits(a, b));
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigReal operator-(const BigReal& a, const BigReal& b) {
  BigReal r(BigReal::RawTag{}, joint_digits(a, b));
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigReal operator*(const BigReal& a, const BigReal& b) {
  BigReal r(BigReal::RawTag{}, joint_digits(a, b));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigReal operator/(const BigReal& a, const BigReal& b) {
  if (b.is_zero()) throw DomainError("BigReal: division by zero");
  BigReal r(BigReal::RawTag{}, joint_digits(a, b));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigReal operator+(const BigReal& a, long b) {
  BigReal r(BigReal::RawTag{}, a.digits_);
  mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}

BigReal operator-(const BigReal& a, long b) {
  BigReal r(BigReal::RawTag{}, a.digits_);
  mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}

BigReal operator-(long a, const BigReal& b) {
  BigReal r(BigReal::RawTag{}, b.digits_);
  mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
  return r;
}

BigReal operator*(const BigReal& a, long b) {
  BigReal r(BigReal::RawTag{}, a.digits_);
  mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}

BigReal operator/(const BigReal& a, long b) {
  if (b == 0) throw DomainError("BigReal: division by zero");
  BigReal r(BigReal::RawTag{}, a.digits_);
  mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}

BigReal operator/(long a, const BigReal& b) {
  if (b.is_zero()) throw DomainError("BigReal: division by zero");
  BigReal r(BigReal::RawTag{}, b.digits_);
  mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
  return r;
}

BigReal BigReal::pow_int(long e) const {
  BigReal r(RawTag{}, digits_);
  mpfr_pow_si(r.v_, v_, e, MPFR_RNDN);
  return r;
}

BigReal abs(const BigReal& x) {
  BigReal r(BigReal::RawTag{}, x.digits_);
  mpfr_abs(r.v_, x.v_, MPFR_RNDN);
  return r;
}

BigReal exp(const BigReal& x) {
  BigReal r(BigReal::RawTag{}, x.digits_);
  mpfr_exp(r.v_, x.v_, MPFR_RNDN);
  return r;
}

BigReal log(const BigReal& x) {
  if (x.sign() <= 0) throw DomainError("BigReal: log of non-positive value");
  BigReal r(BigReal::RawTag{}, x.digits_);
  mpfr_log(r.v_, x.v_, MPFR_RNDN);
  return r;
}

}  // namespace gammamin
