#pragma once

#include <span>
#include <vector>

#include "gammamin/bigreal.hpp"
#include "gammamin/precision.hpp"

namespace gammamin {

// Truncated Taylor expansion sum_{k=0..order} c_k h^k about `anchor`,
// h = z - anchor. Immutable once constructed. Binary operations require
// equal anchor values and truncate to the smaller order.
class PowerSeries {
 public:
  PowerSeries(BigReal anchor, std::vector<BigReal> coeffs);

  const BigReal& anchor() const { return anchor_; }
  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const BigReal& coeff(int k) const { return coeffs_.at(static_cast<size_t>(k)); }
  std::span<const BigReal> coeffs() const { return coeffs_; }

 private:
  BigReal anchor_;
  std::vector<BigReal> coeffs_;
};

// Cauchy product, truncated to the smaller order.
PowerSeries operator*(const PowerSeries& p, const PowerSeries& q);

// Series r with r*q = p up to the common order; q must be a unit
// (q.coeff(0) != 0).
PowerSeries operator/(const PowerSeries& p, const PowerSeries& q);

// p^n for n >= 1, truncated to p.order().
PowerSeries pow(const PowerSeries& p, int n);

// Horner evaluation at the given offset h = z - anchor.
BigReal eval(const PowerSeries& p, const BigReal& offset);

// Difference-quotient series of the digamma function about a > 0:
//   M(h) = (psi(a+h) - psi(a))/h,  coefficients m_j = psi^{(j+1)}(a)/(j+1)!.
// m_0 = psi'(a) > 0, so M is a unit and 1/M is the inversion kernel.
PowerSeries slope_series(const BigReal& a, int order, const PrecisionConfig& cfg = {});

// Lagrange inversion by coefficient extraction. Given the slope series of f
// about a (f analytic, f'(a) != 0), returns
//   a + sum_{n=1..order} (h_n/n!) wt^n,   h_n = (n-1)! [h^{n-1}] (1/M)^n,
// as a series in the offset wt = w - f(a), anchored at 0. Evaluating it at a
// given wt yields successive approximations of the z solving f(z) = w.
PowerSeries lagrange_invert(const BigReal& a, const PowerSeries& f_slope, int order);

}  // namespace gammamin
