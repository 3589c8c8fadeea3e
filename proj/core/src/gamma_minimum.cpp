#include "gammamin/gamma_minimum.hpp"

#include <array>
#include <stdexcept>
#include <utility>

#include "gammamin/combinatorics.hpp"
#include "gammamin/errors.hpp"
#include "gammamin/power_series.hpp"
#include "gammamin/specfun.hpp"

namespace gammamin {

namespace {

constexpr std::array<std::string_view, 6> kTable1PaperRows = {
    "1.213324688", "1.303306712", "1.433026242",
    "1.465429144", "1.471535623", "1.472388063"};

constexpr std::array<std::string_view, 3> kTable2PaperRows = {
    "1.460965032", "1.461640502", "1.461632068"};

constexpr std::string_view kTable1Note =
    "computed rows are 1 + sum_{i<=n} r_i*gamma^i with the printed coefficient "
    "formulas; published rows 1-2 match, rows 3-6 are known not to match "
    "(row 3 differs from the printed-r_3 partial sum by more than 1e-3)";

constexpr std::string_view kTable2Note =
    "computed rows are cumulative per-order reversion terms at a = 3/2; the "
    "published per-order definitions of q_2 and q_3 re-include lower-order "
    "terms and are audited separately";

// Coefficients h_n/n! for n = 1..order at working precision, by the series
// reversion engine.
std::vector<BigReal> reversion_coefficients(const BigReal& a, int order,
                                            const PrecisionConfig& cfg) {
  std::vector<BigReal> out;
  if (order < 1) return out;
  const PowerSeries slope = slope_series(a, order - 1, cfg);
  const PowerSeries inverse = lagrange_invert(a, slope, order);
  out.reserve(static_cast<size_t>(order));
  for (int n = 1; n <= order; ++n) {
    out.push_back(inverse.coeff(n));
  }
  return out;
}

// Same coefficients by the combinatorial route: h_n = (L^n)^{(n-1)}(a).
std::vector<BigReal> faa_di_bruno_coefficients(const BigReal& a, int order,
                                               const PrecisionConfig& cfg) {
  std::vector<BigReal> out;
  if (order < 1) return out;
  const std::vector<BigReal> derivs = kernel_derivatives(a, order - 1, cfg);
  out.reserve(static_cast<size_t>(order));
  for (int n = 1; n <= order; ++n) {
    const BigReal h_n = kernel_power_derivative(derivs, n);
    out.push_back(h_n / BigReal::from_integer(factorial(static_cast<unsigned long>(n)),
                                              h_n.precision()));
  }
  return out;
}

}  // namespace

std::string_view method_name(Method m) {
  switch (m) {
    case Method::kReversion: return "reversion";
    case Method::kFaaDiBruno: return "faadibruno";
    case Method::kPrinted: return "printed";
  }
  throw std::logic_error("method_name: unknown method");
}

std::optional<Method> method_from_name(std::string_view name) {
  if (name == "reversion") return Method::kReversion;
  if (name == "faadibruno") return Method::kFaaDiBruno;
  if (name == "printed") return Method::kPrinted;
  return std::nullopt;
}

BigReal psi_root(const PrecisionConfig& cfg) {
  cfg.validate();
  const int w = cfg.working_digits();
  const PrecisionConfig inner = cfg.inner();
  const BigReal eps = BigReal::pow10(-(cfg.digits + 3), w);

  BigReal lo = BigReal::from_ratio(6, 5, w);   // 1.2
  BigReal hi = BigReal::from_ratio(9, 5, w);   // 1.8
  if (!(digamma(lo, inner).sign() < 0 && digamma(hi, inner).sign() > 0)) {
    throw std::runtime_error("psi_root: bracket [1.2, 1.8] does not straddle the root");
  }

  BigReal x = (lo + hi) / 2L;
  BigReal step = hi - lo;
  for (int iteration = 0; iteration < 200; ++iteration) {
    const BigReal fx = digamma(x, inner);
    if (abs(fx) < eps && abs(step) < eps) {
      return x.round_to(cfg.digits);
    }
    if (fx.sign() < 0) {
      lo = x;
    } else {
      hi = x;
    }
    // Newton step with psi' = zeta(2, x); bisect if it leaves the bracket.
    BigReal next = x - fx / hurwitz_zeta(2, x, inner);
    if (next <= lo || next >= hi) {
      next = (lo + hi) / 2L;
    }
    step = next - x;
    x = std::move(next);
  }
  throw std::runtime_error("psi_root: no convergence after 200 iterations");
}

ExpansionResult expand(const BigReal& a, int order, Method method,
                       const PrecisionConfig& cfg) {
  cfg.validate();
  if (a.sign() <= 0) throw DomainError("expand: anchor must be > 0");
  if (order < 0) throw std::invalid_argument("expand: order must be >= 0");
  if (method != Method::kReversion && method != Method::kFaaDiBruno) {
    throw std::invalid_argument("expand: method must be reversion or faadibruno");
  }

  const PrecisionConfig inner = cfg.inner();
  const BigReal offset_w = -digamma(a, inner);
  std::vector<BigReal> coeffs_w = method == Method::kReversion
                                      ? reversion_coefficients(a, order, inner)
                                      : faa_di_bruno_coefficients(a, order, inner);

  ExpansionResult result{a.round_to(cfg.digits), method, offset_w.round_to(cfg.digits),
                         {}, {}, {}};
  result.coefficients.reserve(coeffs_w.size());
  result.terms.reserve(coeffs_w.size());
  result.partial_sums.reserve(coeffs_w.size());
  BigReal sum = result.anchor;
  for (int n = 1; n <= order; ++n) {
    const BigReal coeff = coeffs_w[static_cast<size_t>(n - 1)].round_to(cfg.digits);
    const BigReal term = coeff * result.offset.pow_int(n);
    sum = sum + term;
    result.coefficients.push_back(coeff);
    result.terms.push_back(term);
    result.partial_sums.push_back(sum);
  }
  return result;
}

std::vector<BigReal> printed_r_coefficients(const PrecisionConfig& cfg) {
  cfg.validate();
  const int w = cfg.working_digits();
  const PrecisionConfig inner = cfg.inner();
  const BigReal z2 = riemann_zeta(2, inner).round_to(w);
  const BigReal z3 = riemann_zeta(3, inner).round_to(w);
  const BigReal z4 = riemann_zeta(4, inner).round_to(w);
  const BigReal z5 = riemann_zeta(5, inner).round_to(w);
  const BigReal z6 = riemann_zeta(6, inner).round_to(w);
  const BigReal z7 = riemann_zeta(7, inner).round_to(w);
  const BigReal z8 = riemann_zeta(8, inner).round_to(w);

  std::vector<BigReal> r;
  r.reserve(6);
  r.push_back(1L / z2.pow_int(2));
  r.push_back(z3 / z2.pow_int(3));
  r.push_back((z3.pow_int(2) * 2L / z2 - z4) / z2.pow_int(4));
  r.push_back((z3 * z2 * -2L + z3.pow_int(2) * 2L / z4 + z5) / z2.pow_int(5));
  r.push_back((z3.pow_int(2) * BigReal::from_ratio(-42, 5, w) +
               z3.pow_int(4) / z6 * BigReal::from_ratio(16, 5, w) +
               z3 * z5 * 6L / z2 + z6 * BigReal::from_ratio(11, 10, w)) /
              z2.pow_int(6));
  r.push_back((z3 * z4 * BigReal::from_ratio(36, 5, w) -
               z3.pow_int(2) * 168L / z2 +
               z3.pow_int(5) / z8 * BigReal::from_ratio(144, 25, w) -
               z2 * z5 * BigReal::from_ratio(14, 5, w) +
               z3.pow_int(2) * z5 * BigReal::from_ratio(56, 5, w) / z4 + z7) /
              z2.pow_int(7));
  for (BigReal& coeff : r) coeff = coeff.round_to(cfg.digits);
  return r;
}

std::vector<BigReal> printed_q_terms(const PrecisionConfig& cfg) {
  cfg.validate();
  const int w = cfg.working_digits();
  const PrecisionConfig inner = cfg.inner();
  const Constants c = constants(inner);
  const BigReal pi_sq = (c.pi * c.pi).round_to(w);
  const BigReal z3 = riemann_zeta(3, inner).round_to(w);
  const BigReal eta = (c.gamma + c.ln2 * 2L - 2L).round_to(w);  // -2 + gamma + ln 4
  const BigReal denom = pi_sq - 8L;                             // pi^2 - 8
  const BigReal zeta_factor = z3 * 7L - 8L;                     // 7 zeta(3) - 8

  const BigReal q1 = eta * 2L / denom;
  const BigReal q2 = eta * 2L / denom +
                     zeta_factor * 8L / denom.pow_int(3) * eta.pow_int(2);
  const BigReal q3 = (zeta_factor.pow_int(3) * 64L / denom.pow_int(5) -
                      (pi_sq - 96L) * 8L / (denom.pow_int(4) * 3L)) *
                     eta.pow_int(3);
  return {q1.round_to(cfg.digits), q2.round_to(cfg.digits), q3.round_to(cfg.digits)};
}

TableReport table(int table_id, const PrecisionConfig& cfg) {
  cfg.validate();
  if (table_id != 1 && table_id != 2) {
    throw std::invalid_argument("table: id must be 1 or 2");
  }
  const PrecisionConfig inner = cfg.inner();
  TableReport report;
  report.table_id = table_id;

  if (table_id == 1) {
    report.method_note = std::string(kTable1Note);
    const std::vector<BigReal> r = printed_r_coefficients(inner);
    const BigReal gamma = constants(inner).gamma;
    BigReal sum(1, inner.digits);
    BigReal gamma_power(1, inner.digits);
    for (int n = 1; n <= 6; ++n) {
      gamma_power = gamma_power * gamma;
      sum = sum + r[static_cast<size_t>(n - 1)] * gamma_power;
      const BigReal computed = sum.round_to(cfg.digits);
      const BigReal paper =
          BigReal::parse(kTable1PaperRows[static_cast<size_t>(n - 1)], cfg.digits);
      report.rows.push_back(TableRow{"order " + std::to_string(n), computed, paper,
                                     computed - paper});
    }
  } else {
    report.method_note = std::string(kTable2Note);
    const ExpansionResult e =
        expand(BigReal::from_ratio(3, 2, inner.digits), 3, Method::kReversion, cfg);
    for (int n = 1; n <= 3; ++n) {
      const BigReal& computed = e.partial_sums[static_cast<size_t>(n - 1)];
      const BigReal paper =
          BigReal::parse(kTable2PaperRows[static_cast<size_t>(n - 1)], cfg.digits);
      report.rows.push_back(TableRow{"order " + std::to_string(n), computed, paper,
                                     computed - paper});
    }
  }
  return report;
}

DiscrepancyReport discrepancy_report(const PrecisionConfig& cfg) {
  cfg.validate();
  const PrecisionConfig inner = cfg.inner();
  const BigReal root = psi_root(cfg);

  DiscrepancyReport report{root, {}};

  // Anchor a = 1: printed terms are r_i * gamma^i; published column is table 1.
  {
    const ExpansionResult rev = expand(BigReal(1, inner.digits), 6, Method::kReversion, cfg);
    const std::vector<BigReal> r = printed_r_coefficients(inner);
    const BigReal gamma = constants(inner).gamma;

    AnchorAudit audit{rev.anchor.round_to(cfg.digits), rev.offset, {}, {}};
    BigReal printed_sum(1, inner.digits);
    BigReal gamma_power(1, inner.digits);
    for (int n = 1; n <= 6; ++n) {
      gamma_power = gamma_power * gamma;
      const BigReal printed_term =
          (r[static_cast<size_t>(n - 1)] * gamma_power).round_to(cfg.digits);
      printed_sum = printed_sum + r[static_cast<size_t>(n - 1)] * gamma_power;
      const BigReal printed_sum_out = printed_sum.round_to(cfg.digits);
      const BigReal paper =
          BigReal::parse(kTable1PaperRows[static_cast<size_t>(n - 1)], cfg.digits);

      const BigReal& term = rev.terms[static_cast<size_t>(n - 1)];
      const BigReal& sum = rev.partial_sums[static_cast<size_t>(n - 1)];
      audit.rows.push_back(AuditRow{n,
                                    rev.coefficients[static_cast<size_t>(n - 1)],
                                    term,
                                    sum,
                                    sum - root,
                                    printed_term,
                                    printed_sum_out,
                                    paper,
                                    printed_term - term,
                                    sum - paper,
                                    printed_sum_out - paper});
    }
    audit.notes.push_back(
        "published rows 1-2 match the printed r_1, r_2 partial sums; rows 3-6 "
        "match neither the printed coefficients nor the reversion series");
    audit.notes.push_back(
        "the order-1 reversion term -psi(1)/psi'(1) = gamma/zeta(2) differs "
        "from the printed r_1*gamma = gamma/zeta^2(2)");
    report.anchors.push_back(std::move(audit));
  }

  // Anchor a = 3/2: printed terms are the published q_1..q_3 as typeset;
  // the printed partial sums follow the published caption 3/2 + q_1 + ... + q_n.
  {
    const ExpansionResult rev =
        expand(BigReal::from_ratio(3, 2, inner.digits), 3, Method::kReversion, cfg);
    const std::vector<BigReal> q = printed_q_terms(inner);

    AnchorAudit audit{rev.anchor.round_to(cfg.digits), rev.offset, {}, {}};
    BigReal printed_sum = BigReal::from_ratio(3, 2, inner.digits);
    for (int n = 1; n <= 3; ++n) {
      const BigReal printed_term = q[static_cast<size_t>(n - 1)].round_to(cfg.digits);
      printed_sum = printed_sum + q[static_cast<size_t>(n - 1)];
      const BigReal printed_sum_out = printed_sum.round_to(cfg.digits);
      const BigReal paper =
          BigReal::parse(kTable2PaperRows[static_cast<size_t>(n - 1)], cfg.digits);

      const BigReal& term = rev.terms[static_cast<size_t>(n - 1)];
      const BigReal& sum = rev.partial_sums[static_cast<size_t>(n - 1)];
      audit.rows.push_back(AuditRow{n,
                                    rev.coefficients[static_cast<size_t>(n - 1)],
                                    term,
                                    sum,
                                    sum - root,
                                    printed_term,
                                    printed_sum_out,
                                    paper,
                                    printed_term - term,
                                    sum - paper,
                                    printed_sum_out - paper});
    }
    audit.notes.push_back(
        "published rows equal cumulative per-order reversion terms; the printed "
        "q_2 re-includes the order-1 term, so the caption sum 3/2+q_1+q_2 "
        "double-counts it");
    audit.notes.push_back(
        "printed q_3 does not match the order-3 reversion term: second-order "
        "inversion implies the square of (7*zeta(3)-8) where the text prints a "
        "cube, and the third digamma derivative at 3/2 is pi^4-96 where the "
        "text prints pi^2-96");
    report.anchors.push_back(std::move(audit));
  }

  return report;
}

}  // namespace gammamin
