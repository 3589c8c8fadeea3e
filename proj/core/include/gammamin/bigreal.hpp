#pragma once

#include <mpfr.h>

#include <string_view>

#include "gammamin/rational.hpp"

namespace gammamin {

// Arbitrary-precision real number tagged with the number of significant
// decimal digits it carries. Arithmetic between two BigReals rounds to the
// smaller of the two precision tags. Every operation is a single correctly
// rounded MPFR call (round to nearest, ties to even), so results are
// deterministic: same inputs and same precision give bit-identical output.
class BigReal {
 public:
  static constexpr int kMinDigits = 16;

  BigReal(long value, int digits);
  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  static BigReal from_ratio(long num, long den, int digits);
  static BigReal from_rational(const Rational& q, int digits);
  static BigReal from_integer(const Integer& n, int digits);
  // Accepts plain decimals ("1.5", "2.5e-3") and small rationals ("3/2").
  static BigReal parse(std::string_view text, int digits);
  // 10^exp, correctly rounded (exact for exp >= 0).
  static BigReal pow10(long exp, int digits);
  // Correctly rounded mathematical constants.
  static BigReal const_pi(int digits);
  static BigReal const_euler(int digits);
  static BigReal const_ln2(int digits);

  int precision() const { return digits_; }
  // Same value re-rounded (half-even) to a new precision tag.
  BigReal round_to(int digits) const;

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  BigReal operator-() const;
  friend BigReal operator+(const BigReal& a, const BigReal& b);
  friend BigReal operator-(const BigReal& a, const BigReal& b);
  friend BigReal operator*(const BigReal& a, const BigReal& b);
  friend BigReal operator/(const BigReal& a, const BigReal& b);

  // Machine integers enter as exact values at the BigReal's own precision.
  friend BigReal operator+(const BigReal& a, long b);
  friend BigReal operator+(long a, const BigReal& b) { return b + a; }
  friend BigReal operator-(const BigReal& a, long b);
  friend BigReal operator-(long a, const BigReal& b);
  friend BigReal operator*(const BigReal& a, long b);
  friend BigReal operator*(long a, const BigReal& b) { return b * a; }
  friend BigReal operator/(const BigReal& a, long b);
  friend BigReal operator/(long a, const BigReal& b);

  BigReal pow_int(long e) const;  // integer power, correctly rounded

  friend BigReal abs(const BigReal& x);
  friend BigReal exp(const BigReal& x);
  friend BigReal log(const BigReal& x);

  // Value comparison; precision tags do not participate.
  int compare(const BigReal& other) const { return mpfr_cmp(v_, other.v_); }
  friend bool operator==(const BigReal& a, const BigReal& b) { return a.compare(b) == 0; }
  friend bool operator!=(const BigReal& a, const BigReal& b) { return a.compare(b) != 0; }
  friend bool operator<(const BigReal& a, const BigReal& b) { return a.compare(b) < 0; }
  friend bool operator<=(const BigReal& a, const BigReal& b) { return a.compare(b) <= 0; }
  friend bool operator>(const BigReal& a, const BigReal& b) { return a.compare(b) > 0; }
  friend bool operator>=(const BigReal& a, const BigReal& b) { return a.compare(b) >= 0; }

  // Bit-identical: equal value and equal precision tag.
  bool identical(const BigReal& other) const {
    return digits_ == other.digits_ && mpfr_equal_p(v_, other.v_) != 0;
  }

  mpfr_srcptr raw() const { return v_; }

 private:
  // Uninitialised storage at the working precision for `digits`.
  struct RawTag {};
  BigReal(RawTag, int digits);

  static mpfr_prec_t bits_for(int digits);
  static int check_digits(int digits);

  mpfr_t v_;
  int digits_;
};

}  // namespace gammamin
