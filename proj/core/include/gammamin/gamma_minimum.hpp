#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gammamin/bigreal.hpp"
#include "gammamin/precision.hpp"

namespace gammamin {

// How a set of expansion terms was obtained: series reversion, the
// combinatorial Faa di Bruno route, or the published closed-form coefficients.
enum class Method { kReversion, kFaaDiBruno, kPrinted };

std::string_view method_name(Method m);
std::optional<Method> method_from_name(std::string_view name);

// Per-order data of the expansion z = a + sum_n (h_n/n!) wt^n at the offset
// wt = -psi(a). partial_sums[i] is built as partial_sums[i-1] + terms[i], so
// consecutive entries differ by exactly the stored term.
struct ExpansionResult {
  BigReal anchor;
  Method method;
  BigReal offset;                     // wt = -psi(a)
  std::vector<BigReal> coefficients;  // h_n/n! for n = 1..order
  std::vector<BigReal> terms;         // coefficients[n-1] * wt^n
  std::vector<BigReal> partial_sums;  // anchor + terms[0..n-1], cumulative
};

// The positive root of psi (the abscissa of the Gamma function minimum),
// located by bisection-bracketed Newton iteration on [1.2, 1.8]. Converged
// when |psi(x)| and the last step are both below 10^-(digits+3).
BigReal psi_root(const PrecisionConfig& cfg = {});

// Expansion of the psi-root about anchor a > 0 through the given order
// (>= 0), by either computing engine (kReversion or kFaaDiBruno).
ExpansionResult expand(const BigReal& a, int order, Method method,
                       const PrecisionConfig& cfg = {});

// The six published closed-form coefficients r_1..r_6 of the a=1 expansion in
// powers of gamma, each evaluated exactly as printed (bracket times the
// printed 1/zeta^{i+1}(2) factor).
std::vector<BigReal> printed_r_coefficients(const PrecisionConfig& cfg = {});

// The three published a=3/2 quantities q_1..q_3 evaluated exactly as printed:
// q_2 keeps both printed summands, q_3 keeps the printed cube and "pi^2-96".
std::vector<BigReal> printed_q_terms(const PrecisionConfig& cfg = {});

struct TableRow {
  std::string label;
  BigReal computed;
  BigReal paper_value;
  BigReal delta;  // computed - paper_value
};

struct TableReport {
  int table_id = 0;
  std::vector<TableRow> rows;
  std::string method_note;
};

// Reproduction of published convergence table 1 (a=1: partial sums of the
// printed r_i against the published rows) or table 2 (a=3/2: cumulative
// per-order reversion terms against the published rows), with signed deltas.
TableReport table(int table_id, const PrecisionConfig& cfg = {});

// One expansion order of the audit: the reversion engine value, the printed
// formula value and the published table value side by side.
struct AuditRow {
  int order = 0;
  BigReal reversion_coefficient;
  BigReal reversion_term;
  BigReal reversion_partial_sum;
  BigReal delta_reversion_sum_vs_root;
  std::optional<BigReal> printed_term;
  std::optional<BigReal> printed_partial_sum;
  std::optional<BigReal> paper_value;
  std::optional<BigReal> delta_printed_term_vs_reversion_term;
  std::optional<BigReal> delta_reversion_sum_vs_paper;
  std::optional<BigReal> delta_printed_sum_vs_paper;
};

struct AnchorAudit {
  BigReal anchor;
  BigReal offset;
  std::vector<AuditRow> rows;
  std::vector<std::string> notes;
};

struct DiscrepancyReport {
  BigReal root;
  std::vector<AnchorAudit> anchors;  // a = 1 and a = 3/2
};

// Cross-audit of the published coefficient formulas and table rows against
// the reversion engine and the direct root, with pairwise signed deltas and
// fixed notes for the known mismatches.
DiscrepancyReport discrepancy_report(const PrecisionConfig& cfg = {});

}  // namespace gammamin
