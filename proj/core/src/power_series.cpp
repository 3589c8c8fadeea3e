#include "gammamin/power_series.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "gammamin/errors.hpp"
#include "gammamin/specfun.hpp"

namespace gammamin {

namespace {

void require_same_anchor(const PowerSeries& p, const PowerSeries& q) {
  if (p.anchor() != q.anchor()) {
    throw std::invalid_argument("PowerSeries: anchor mismatch");
  }
}

}  // namespace

PowerSeries::PowerSeries(BigReal anchor, std::vector<BigReal> coeffs)
    : anchor_(std::move(anchor)), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw std::invalid_argument("PowerSeries: at least the constant coefficient is required");
  }
}

PowerSeries operator*(const PowerSeries& p, const PowerSeries& q) {
  require_same_anchor(p, q);
  const int order = std::min(p.order(), q.order());
  std::vector<BigReal> out;
  out.reserve(static_cast<size_t>(order) + 1);
  for (int k = 0; k <= order; ++k) {
    BigReal c = p.coeff(0) * q.coeff(k);
    for (int i = 1; i <= k; ++i) {
      c = c + p.coeff(i) * q.coeff(k - i);
    }
    out.push_back(std::move(c));
  }
  return PowerSeries(p.anchor(), std::move(out));
}

PowerSeries operator/(const PowerSeries& p, const PowerSeries& q) {
  require_same_anchor(p, q);
  if (q.coeff(0).is_zero()) {
    throw DomainError("PowerSeries: non-unit divisor (zero constant term)");
  }
  const int order = std::min(p.order(), q.order());
  // r_k = (p_k - sum_{i=1..k} q_i r_{k-i}) / q_0
  std::vector<BigReal> out;
  out.reserve(static_cast<size_t>(order) + 1);
  out.push_back(p.coeff(0) / q.coeff(0));
  for (int k = 1; k <= order; ++k) {
    BigReal acc = p.coeff(k);
    for (int i = 1; i <= k; ++i) {
      acc = acc - q.coeff(i) * out[static_cast<size_t>(k - i)];
    }
    out.push_back(acc / q.coeff(0));
  }
  return PowerSeries(p.anchor(), std::move(out));
}

PowerSeries pow(const PowerSeries& p, int n) {
  if (n < 1) throw std::invalid_argument("PowerSeries: power must be >= 1");
  PowerSeries result = p;
  for (int i = 1; i < n; ++i) {
    result = result * p;
  }
  return result;
}

BigReal eval(const PowerSeries& p, const BigReal& offset) {
  BigReal acc = p.coeff(p.order());
  for (int k = p.order() - 1; k >= 0; --k) {
    acc = acc * offset + p.coeff(k);
  }
  return acc;
}

PowerSeries slope_series(const BigReal& a, int order, const PrecisionConfig& cfg) {
  cfg.validate();
  if (order < 0) throw std::invalid_argument("slope_series: order must be >= 0");
  std::vector<BigReal> coeffs;
  coeffs.reserve(static_cast<size_t>(order) + 1);
  for (int j = 0; j <= order; ++j) {
    const BigReal d = polygamma(j + 1, a, cfg.inner());
    const Integer fact = factorial(static_cast<unsigned long>(j) + 1);
    coeffs.push_back((d / BigReal::from_integer(fact, d.precision())).round_to(cfg.digits));
  }
  return PowerSeries(a, std::move(coeffs));
}

PowerSeries lagrange_invert(const BigReal& a, const PowerSeries& f_slope, int order) {
  if (order < 0) throw std::invalid_argument("lagrange_invert: order must be >= 0");
  if (f_slope.coeff(0).is_zero()) {
    throw DomainError("lagrange_invert: inversion undefined (f'(a) = 0)");
  }
  if (order >= 1 && f_slope.order() < order - 1) {
    throw std::invalid_argument("lagrange_invert: slope series order too small for requested order");
  }

  int prec = a.precision();
  for (const BigReal& c : f_slope.coeffs()) prec = std::min(prec, c.precision());

  std::vector<BigReal> out;
  out.reserve(static_cast<size_t>(order) + 1);
  out.push_back(a.round_to(prec));
  if (order >= 1) {
    // kernel = 1/M truncated to order-1; c_n = [h^{n-1}] kernel^n / n.
    std::vector<BigReal> ones(static_cast<size_t>(order), BigReal(0, prec));
    ones[0] = BigReal(1, prec);
    const PowerSeries kernel =
        PowerSeries(f_slope.anchor(), std::move(ones)) / f_slope;
    PowerSeries kernel_power = kernel;
    for (int n = 1; n <= order; ++n) {
      if (n > 1) kernel_power = kernel_power * kernel;
      out.push_back(kernel_power.coeff(n - 1) / static_cast<long>(n));
    }
  }
  return PowerSeries(BigReal(0, prec), std::move(out));
}

}  // namespace gammamin
