#include "gammamin/format.hpp"

#include <algorithm>
#include <stdexcept>

namespace gammamin {

namespace {

struct DecimalDigits {
  bool negative = false;
  std::string digits;  // exactly the requested significant digits
  long exponent = 0;   // value = +-0.digits * 10^exponent
};

DecimalDigits significant_digits(const BigReal& x, int sig_digits) {
  DecimalDigits out;
  mpfr_exp_t e = 0;
  char* raw = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(sig_digits),
                           x.raw(), MPFR_RNDN);
  if (raw == nullptr) throw std::runtime_error("mpfr_get_str failed");
  std::string s(raw);
  mpfr_free_str(raw);
  if (!s.empty() && s[0] == '-') {
    out.negative = true;
    s.erase(0, 1);
  }
  out.digits = s;
  out.exponent = static_cast<long>(e);
  return out;
}

}  // namespace

std::string to_string_significant(const BigReal& x, int sig_digits) {
  if (sig_digits < 1) throw std::invalid_argument("to_string_significant: sig_digits < 1");
  if (x.is_zero()) return "0";

  const DecimalDigits d = significant_digits(x, sig_digits);
  const long e = d.exponent;
  const long len = static_cast<long>(d.digits.size());
  std::string body;
  if (e >= -2 && e <= 3) {
    // 1e-3 <= |x| < 1e3 after rounding: plain decimal.
    if (e <= 0) {
      body = "0." + std::string(static_cast<size_t>(-e), '0') + d.digits;
    } else if (e < len) {
      body = d.digits.substr(0, static_cast<size_t>(e)) + "." +
             d.digits.substr(static_cast<size_t>(e));
    } else {
      body = d.digits + std::string(static_cast<size_t>(e - len), '0');
    }
  } else {
    body = d.digits.substr(0, 1);
    if (len > 1) body += "." + d.digits.substr(1);
    body += "e" + std::string(e - 1 >= 0 ? "+" : "") + std::to_string(e - 1);
  }
  return d.negative ? "-" + body : body;
}

std::string to_string_fixed(const BigReal& x, int decimals) {
  if (decimals < 1) throw std::invalid_argument("to_string_fixed: decimals < 1");

  // Round at the fixed decimal place: scale by 10^decimals, then round the
  // scaled value to an integer (ties to even).
  mpfr_t scaled;
  mpfr_init2(scaled, mpfr_get_prec(x.raw()) + 64);
  mpfr_t p10;
  mpfr_init2(p10, 64 + 4 * decimals);
  mpfr_ui_pow_ui(p10, 10u, static_cast<unsigned long>(decimals), MPFR_RNDN);
  mpfr_mul(scaled, x.raw(), p10, MPFR_RNDN);
  Integer units;
  mpfr_get_z(units.get_mpz_t(), scaled, MPFR_RNDN);
  mpfr_clear(p10);
  mpfr_clear(scaled);

  const bool negative = units < 0;
  const Integer magnitude = abs(units);
  std::string digits = magnitude.get_str();
  if (static_cast<int>(digits.size()) <= decimals) {
    digits.insert(0, static_cast<size_t>(decimals + 1) - digits.size(), '0');
  }
  std::string body = digits.substr(0, digits.size() - static_cast<size_t>(decimals)) +
                     "." + digits.substr(digits.size() - static_cast<size_t>(decimals));
  if (negative && units != 0) return "-" + body;
  return body;
}

std::ostream& operator<<(std::ostream& os, const BigReal& x) {
  return os << to_string_significant(x, std::min(x.precision(), 24));
}

}  // namespace gammamin
