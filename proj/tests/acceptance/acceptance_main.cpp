// Acceptance suite: runs every exit criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion. Exit code 0 only if all pass.

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <gammamin/combinatorics.hpp>
#include <gammamin/format.hpp>
#include <gammamin/gamma_minimum.hpp>
#include <gammamin/power_series.hpp>
#include <gammamin/specfun.hpp>

#ifndef GAMMA_MIN_CLI_PATH
#define GAMMA_MIN_CLI_PATH "gamma-min"
#endif
#ifndef GAMMA_MIN_GOLDEN_DIR
#define GAMMA_MIN_GOLDEN_DIR "."
#endif

namespace {

using namespace gammamin;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& message) {
    if (!condition && ok) {
      ok = false;
      detail = message;
    }
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

BigReal tol(const char* text) { return BigReal::parse(text, 16); }

BigReal rel(const BigReal& value, const BigReal& reference) {
  return abs(value - reference) / abs(reference);
}

std::string format_seconds(double s) {
  std::ostringstream out;
  out.precision(2);
  out << std::fixed << s << "s";
  return out.str();
}

// ---- criterion implementations ------------------------------------------

Outcome root_reproduction() {
  Outcome out;
  const auto start = Clock::now();
  const std::string printed = to_string_significant(psi_root(PrecisionConfig{20, 10}), 20);
  const double elapsed = seconds_since(start);
  out.require(printed == "1.4616321449683623413",
              "psi_root printed '" + printed + "'");
  out.require(elapsed < 1.0, "runtime " + format_seconds(elapsed) + " >= 1s");
  out.detail = printed + " in " + format_seconds(elapsed);
  return out;
}

Outcome table2_reproduction() {
  Outcome out;
  const auto start = Clock::now();
  const ExpansionResult e = expand(BigReal::from_ratio(3, 2, 40), 3,
                                   Method::kReversion, PrecisionConfig{20, 10});
  const double elapsed = seconds_since(start);
  const std::array<const char*, 3> published = {"1.460965032", "1.461640502",
                                                "1.461632068"};
  for (size_t i = 0; i < 3; ++i) {
    const BigReal delta = e.partial_sums[i] - BigReal::parse(published[i], 20);
    out.require(abs(delta) <= tol("5e-10"),
                "row " + std::to_string(i + 1) + " delta " +
                    to_string_significant(delta, 3));
  }
  out.require(elapsed < 1.0, "runtime " + format_seconds(elapsed) + " >= 1s");
  if (out.ok) out.detail = "all three rows within 5e-10, " + format_seconds(elapsed);
  return out;
}

Outcome table1_partial_reproduction() {
  Outcome out;
  const TableReport report = table(1, PrecisionConfig{20, 10});
  out.require(abs(report.rows[0].delta) <= tol("5e-9"),
              "row 1 delta " + to_string_significant(report.rows[0].delta, 3));
  out.require(abs(report.rows[1].delta) <= tol("5e-9"),
              "row 2 delta " + to_string_significant(report.rows[1].delta, 3));

  const DiscrepancyReport audit = discrepancy_report(PrecisionConfig{30, 10});
  const std::vector<AuditRow>& rows = audit.anchors[0].rows;
  out.require(rows.size() == 6, "audit did not emit six rows for a = 1");
  int deltas = 0;
  for (const AuditRow& row : rows) {
    if (row.delta_printed_sum_vs_paper.has_value()) ++deltas;
  }
  out.require(deltas == 6, "audit emitted " + std::to_string(deltas) +
                               " printed-vs-published deltas instead of 6");
  out.require(abs(*rows[2].delta_printed_sum_vs_paper) > tol("1e-3"),
              "row 3 delta not above 1e-3");
  if (out.ok) {
    out.detail = "rows 1-2 match, row-3 delta " +
                 to_string_significant(*rows[2].delta_printed_sum_vs_paper, 3);
  }
  return out;
}

Outcome engine_equivalence() {
  Outcome out;
  const auto start = Clock::now();
  const PrecisionConfig cfg{50, 10};
  BigReal worst(0, 16);
  for (const char* text : {"1", "3/2"}) {
    const BigReal a = BigReal::parse(text, 70);
    const ExpansionResult rev = expand(a, 8, Method::kReversion, cfg);
    const ExpansionResult fdb = expand(a, 8, Method::kFaaDiBruno, cfg);
    for (size_t n = 0; n < 8; ++n) {
      const BigReal deviation = rel(fdb.coefficients[n], rev.coefficients[n]);
      if (deviation > worst) worst = deviation;
    }
  }
  const double elapsed = seconds_since(start);
  out.require(worst <= tol("1e-35"),
              "worst relative deviation " + to_string_significant(worst, 3));
  out.require(elapsed < 10.0, "runtime " + format_seconds(elapsed) + " >= 10s");
  if (out.ok) {
    out.detail = "h_n deviation <= " + to_string_significant(worst, 3) + " for n <= 8, " +
                 format_seconds(elapsed);
  }
  return out;
}

Outcome polygamma_identity() {
  Outcome out;
  const PrecisionConfig cfg{50, 10};
  BigReal worst(0, 16);
  for (const char* text : {"1", "3/2"}) {
    const BigReal s = BigReal::parse(text, 70);
    for (int n = 1; n <= 8; ++n) {
      Integer scale = factorial(static_cast<unsigned long>(n));
      if (n % 2 == 0) scale = -scale;
      const BigReal zeta_part = hurwitz_zeta(n + 1, s, cfg);
      const BigReal expected =
          BigReal::from_integer(scale, zeta_part.precision()) * zeta_part;
      const BigReal deviation = rel(polygamma(n, s, cfg), expected);
      if (deviation > worst) worst = deviation;
    }
  }
  out.require(worst <= tol("1e-40"),
              "worst relative deviation " + to_string_significant(worst, 3));
  if (out.ok) out.detail = "deviation <= " + to_string_significant(worst, 3);
  return out;
}

Outcome reversion_round_trip() {
  Outcome out;
  const int digits = 50;
  const PrecisionConfig inner{digits + 10, 10};
  constexpr int kOrder = 12;

  const auto compose_residual = [&](const PowerSeries& slope, const PowerSeries& inverse) {
    // outer(inner(h)) with outer = inverse offset coefficients, inner = h*M(h).
    const int prec = digits + 10;
    std::vector<BigReal> forward{BigReal(0, prec)};
    for (int j = 0; j + 1 <= kOrder; ++j) forward.push_back(slope.coeff(j));
    std::vector<BigReal> acc{inverse.coeff(kOrder)};
    for (int k = kOrder - 1; k >= 1; --k) {
      // acc = acc * forward + c_k, truncated to kOrder
      std::vector<BigReal> next(static_cast<size_t>(kOrder) + 1, BigReal(0, prec));
      for (size_t i = 0; i < acc.size(); ++i) {
        for (size_t j = 0; j < forward.size() && i + j <= kOrder; ++j) {
          next[i + j] = next[i + j] + acc[i] * forward[j];
        }
      }
      next[0] = next[0] + inverse.coeff(k);
      acc = std::move(next);
    }
    // One more multiplication by forward applies the innermost power.
    std::vector<BigReal> composed(static_cast<size_t>(kOrder) + 1, BigReal(0, prec));
    for (size_t i = 0; i < acc.size(); ++i) {
      for (size_t j = 0; j < forward.size() && i + j <= kOrder; ++j) {
        composed[i + j] = composed[i + j] + acc[i] * forward[j];
      }
    }
    BigReal worst(0, 16);
    for (int k = 0; k <= kOrder; ++k) {
      const BigReal expected(k == 1 ? 1 : 0, prec);
      const BigReal err = abs(composed[static_cast<size_t>(k)] - expected);
      if (err > worst) worst = err;
    }
    return worst;
  };

  // exp about 0: slope coefficients 1/(j+1)!.
  std::vector<BigReal> exp_coeffs;
  for (int j = 0; j <= kOrder - 1; ++j) {
    exp_coeffs.push_back(
        1L / BigReal::from_integer(factorial(static_cast<unsigned long>(j) + 1), digits + 10));
  }
  const PowerSeries exp_slope(BigReal(0, digits + 10), exp_coeffs);
  const BigReal exp_residual =
      compose_residual(exp_slope, lagrange_invert(BigReal(0, digits + 10), exp_slope, kOrder));
  out.require(exp_residual <= tol("1e-38"),
              "exp residual " + to_string_significant(exp_residual, 3));

  const BigReal a = BigReal::from_ratio(3, 2, digits + 10);
  const PowerSeries psi_slope = slope_series(a, kOrder - 1, inner);
  const BigReal psi_residual =
      compose_residual(psi_slope, lagrange_invert(a, psi_slope, kOrder));
  out.require(psi_residual <= tol("1e-38"),
              "digamma residual " + to_string_significant(psi_residual, 3));

  if (out.ok) {
    out.detail = "residuals " + to_string_significant(exp_residual, 3) + " (exp), " +
                 to_string_significant(psi_residual, 3) + " (digamma at 3/2)";
  }
  return out;
}

Outcome half_integer_identity() {
  Outcome out;
  const PrecisionConfig cfg{50, 10};
  const BigReal three_halves = BigReal::from_ratio(3, 2, 70);
  BigReal worst(0, 16);
  for (int u = 2; u <= 8; ++u) {
    const BigReal lhs = hurwitz_zeta(u, three_halves, cfg);
    const BigReal rhs = riemann_zeta(u, cfg) * ((1L << u) - 1L) - (1L << u);
    const BigReal deviation = rel(lhs, rhs);
    if (deviation > worst) worst = deviation;
  }
  out.require(worst <= tol("1e-45"),
              "worst relative deviation " + to_string_significant(worst, 3));
  if (out.ok) out.detail = "deviation <= " + to_string_significant(worst, 3) + " for u = 2..8";
  return out;
}

Outcome combinatorial_counts() {
  Outcome out;
  for (int n = 1; n <= 10; ++n) {
    const Integer expected = binomial(2 * static_cast<unsigned long>(n) - 2,
                                      static_cast<unsigned long>(n) - 1);
    const Integer actual(static_cast<long>(enumerate_compositions(n).size()));
    out.require(actual == expected, "composition count off at n = " + std::to_string(n));
  }
  constexpr long partition_numbers[12] = {1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
  for (int m = 1; m <= 12; ++m) {
    out.require(static_cast<long>(enumerate_bell_partitions(m).size()) ==
                    partition_numbers[m - 1],
                "partition count off at m = " + std::to_string(m));
  }
  if (out.ok) out.detail = "C(2n-2,n-1) for n <= 10 and p(m) for m <= 12";
  return out;
}

std::string run_capture(const std::string& command, int* exit_code) {
  FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
  if (pipe == nullptr) {
    *exit_code = -1;
    return {};
  }
  std::string output;
  std::array<char, 4096> buffer;
  size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    output.append(buffer.data(), got);
  }
  const int status = pclose(pipe);
  *exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return output;
}

Outcome cli_golden_files() {
  Outcome out;
  const char* cli_env = std::getenv("GAMMA_MIN_CLI");
  const char* golden_env = std::getenv("GAMMA_MIN_GOLDEN_DIR");
  const std::string cli = cli_env ? cli_env : GAMMA_MIN_CLI_PATH;
  const std::string golden = golden_env ? golden_env : GAMMA_MIN_GOLDEN_DIR;

  for (int id : {1, 2}) {
    const std::string command = cli + " table --id " + std::to_string(id) + " --format csv";
    int code1 = 0;
    int code2 = 0;
    const std::string first = run_capture(command, &code1);
    const std::string second = run_capture(command, &code2);
    out.require(code1 == 0 && code2 == 0,
                "table " + std::to_string(id) + " exited non-zero");
    out.require(first == second, "table " + std::to_string(id) + " differs across runs");

    std::ifstream in(golden + "/table" + std::to_string(id) + ".csv", std::ios::binary);
    out.require(in.good(), "golden file for table " + std::to_string(id) + " missing");
    std::ostringstream expected;
    expected << in.rdbuf();
    out.require(first == expected.str(),
                "table " + std::to_string(id) + " differs from the golden file");
  }
  if (out.ok) out.detail = "both table CSVs byte-identical to the goldens";
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* label;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "root reproduction at 20 digits in under 1s", root_reproduction},
      {2, "table 2 rows within 5e-10 in under 1s", table2_reproduction},
      {3, "table 1 rows 1-2 match; audit emits six deltas, row 3 above 1e-3",
       table1_partial_reproduction},
      {4, "reversion and Faa di Bruno h_n agree to 1e-35 in under 10s",
       engine_equivalence},
      {5, "polygamma identity against n! zeta(n+1,s) to 1e-40", polygamma_identity},
      {6, "reversion round trip to order 12 with residuals below 1e-38",
       reversion_round_trip},
      {7, "half-integer Hurwitz identity to 1e-45 for u = 2..8", half_integer_identity},
      {8, "composition and partition counts", combinatorial_counts},
      {9, "CLI table CSVs equal the checked-in goldens byte for byte",
       cli_golden_files},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    Outcome outcome;
    try {
      outcome = criterion.run();
    } catch (const std::exception& e) {
      outcome.ok = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    if (outcome.ok) {
      std::cout << "PASS  criterion " << criterion.id << ": " << criterion.label
                << " (" << outcome.detail << ")\n";
    } else {
      ++failures;
      std::cout << "FAIL  criterion " << criterion.id << ": " << criterion.label
                << " -- " << outcome.detail << "\n";
    }
  }
  if (failures != 0) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all " << criteria.size() << " criteria passed\n";
  return 0;
}
