#include <doctest.h>

#include <vector>

#include <gammamin/errors.hpp>
#include <gammamin/format.hpp>
#include <gammamin/gamma_minimum.hpp>
#include <gammamin/specfun.hpp>

#include "../support/oracles.hpp"

namespace gammamin::test {
namespace {

const PrecisionConfig kCfg20{20, 10};

TEST_SUITE("psi_root") {
  TEST_CASE("twenty digit value") {
    CHECK(to_string_significant(psi_root(kCfg20), 20) == "1.4616321449683623413");
  }

  TEST_CASE("digamma vanishes at the root to the requested precision") {
    const BigReal root = psi_root(kCfg20);
    CHECK(abs(digamma(root, PrecisionConfig{30, 10})) < BigReal::pow10(-22, 16));
  }

  TEST_CASE("higher precision extends rather than changes the digits") {
    const BigReal at20 = psi_root(kCfg20);
    const BigReal at30 = psi_root(PrecisionConfig{30, 10});
    CHECK(to_string_significant(at30, 20) == to_string_significant(at20, 20));
  }

  TEST_CASE("deterministic") {
    CHECK(psi_root(kCfg20).identical(psi_root(kCfg20)));
  }
}

TEST_SUITE("expand") {
  TEST_CASE("a = 3/2, order 3 reproduces the published rows to ten digits") {
    const ExpansionResult e =
        expand(BigReal::from_ratio(3, 2, 30), 3, Method::kReversion, kCfg20);
    REQUIRE(e.partial_sums.size() == 3);
    CHECK(to_string_significant(e.partial_sums[0], 10) == "1.460965032");
    CHECK(to_string_significant(e.partial_sums[1], 10) == "1.461640502");
    CHECK(to_string_significant(e.partial_sums[2], 10) == "1.461632068");
  }

  TEST_CASE("order 1 at a = 1 is one Newton step from 1") {
    const ExpansionResult e = expand(BigReal(1, 30), 1, Method::kReversion, kCfg20);
    const PrecisionConfig inner{30, 10};
    const BigReal newton =
        BigReal(1, 30) - digamma(BigReal(1, 30), inner) / polygamma(1, BigReal(1, 30), inner);
    CHECK(relative_error(e.partial_sums[0], newton) < BigReal::pow10(-18, 16));
    CHECK(to_string_significant(e.partial_sums[0], 8) == "1.3509050");
  }

  TEST_CASE("order 0 yields the bare anchor") {
    const ExpansionResult e = expand(BigReal(1, 30), 0, Method::kReversion, kCfg20);
    CHECK(e.partial_sums.empty());
    CHECK(e.terms.empty());
    CHECK(e.coefficients.empty());
    CHECK(e.anchor == BigReal(1, 20));
  }

  TEST_CASE("partial sums advance by exactly the stored terms") {
    const ExpansionResult e =
        expand(BigReal::from_ratio(3, 2, 30), 6, Method::kFaaDiBruno, kCfg20);
    BigReal running = e.anchor;
    for (size_t i = 0; i < e.terms.size(); ++i) {
      running = running + e.terms[i];
      CHECK(running.identical(e.partial_sums[i]));
    }
  }

  TEST_CASE("offset at a = 1 is the Euler-Mascheroni constant") {
    const ExpansionResult e = expand(BigReal(1, 40), 1, Method::kReversion, kCfg20);
    const BigReal gamma = constants(kCfg20).gamma;
    CHECK(relative_error(e.offset, gamma) < BigReal::pow10(-19, 16));
  }

  TEST_CASE("both engines agree termwise") {
    const PrecisionConfig cfg{50, 10};
    const BigReal tolerance = BigReal::pow10(-35, 16);
    for (const char* text : {"1", "3/2"}) {
      const BigReal a = BigReal::parse(text, 70);
      const ExpansionResult rev = expand(a, 8, Method::kReversion, cfg);
      const ExpansionResult fdb = expand(a, 8, Method::kFaaDiBruno, cfg);
      for (size_t i = 0; i < 8; ++i) {
        CHECK(relative_error(fdb.coefficients[i], rev.coefficients[i]) < tolerance);
        if (!rev.terms[i].is_zero()) {
          CHECK(relative_error(fdb.terms[i], rev.terms[i]) < tolerance);
        }
      }
    }
  }

  TEST_CASE("argument validation") {
    CHECK_THROWS_AS(expand(BigReal(0, 30), 3, Method::kReversion, kCfg20), DomainError);
    CHECK_THROWS_AS(expand(BigReal(-1, 30), 3, Method::kReversion, kCfg20), DomainError);
    CHECK_THROWS_AS(expand(BigReal(1, 30), -1, Method::kReversion, kCfg20),
                    std::invalid_argument);
    CHECK_THROWS_AS(expand(BigReal(1, 30), 3, Method::kPrinted, kCfg20),
                    std::invalid_argument);
  }
}

TEST_SUITE("printed_coefficients") {
  TEST_CASE("r values frozen at twenty digits") {
    const std::vector<BigReal> r = printed_r_coefficients(kCfg20);
    REQUIRE(r.size() == 6);
    const char* expected[6] = {
        "0.36957536116863606681",  "0.27007198834520158002",
        "0.092129148896125641428", "-0.020559986516818137989",
        "0.0048107114401653659933", "-3.4392244519535999783"};
    for (size_t i = 0; i < 6; ++i) {
      CHECK(relative_error(r[i], BigReal::parse(expected[i], 30)) <
            BigReal::pow10(-18, 16));
    }
  }

  TEST_CASE("q values frozen at twenty digits") {
    const std::vector<BigReal> q = printed_q_terms(kCfg20);
    REQUIRE(q.size() == 3);
    CHECK(relative_error(q[0], BigReal::parse("-0.039034967993565891425", 30)) <
          BigReal::pow10(-18, 16));
    CHECK(relative_error(q[1], BigReal::parse("-0.038359498223431189259", 30)) <
          BigReal::pow10(-18, 16));
    CHECK(relative_error(q[2], BigReal::parse("-0.00092305780425934806182", 30)) <
          BigReal::pow10(-18, 16));
  }

  TEST_CASE("the printed q_2 re-includes q_1, its second summand is the true term") {
    const std::vector<BigReal> q = printed_q_terms(kCfg20);
    const ExpansionResult e =
        expand(BigReal::from_ratio(3, 2, 30), 2, Method::kReversion, kCfg20);
    CHECK(relative_error(q[1] - q[0], e.terms[1]) < BigReal::pow10(-17, 16));
  }
}

TEST_SUITE("table") {
  TEST_CASE("table 2 deltas vanish to half a unit in the ninth decimal") {
    const TableReport report = table(2, kCfg20);
    REQUIRE(report.rows.size() == 3);
    const BigReal tolerance = BigReal::parse("5e-10", 16);
    for (const TableRow& row : report.rows) {
      CHECK(abs(row.delta) <= tolerance);
      CHECK(row.delta == row.computed - row.paper_value);
    }
    CHECK(report.rows[0].label == "order 1");
    CHECK(!report.method_note.empty());
  }

  TEST_CASE("table 1 matches on rows 1-2 and documents the row-3 break") {
    const TableReport report = table(1, kCfg20);
    REQUIRE(report.rows.size() == 6);
    CHECK(abs(report.rows[0].delta) <= BigReal::parse("5e-9", 16));
    CHECK(abs(report.rows[1].delta) <= BigReal::parse("5e-9", 16));
    CHECK(abs(report.rows[2].delta) > BigReal::parse("1e-3", 16));
    CHECK(report.rows[5].paper_value == BigReal::parse("1.472388063", 20));
  }

  TEST_CASE("invalid id") {
    CHECK_THROWS_AS(table(3, kCfg20), std::invalid_argument);
    CHECK_THROWS_AS(table(0, kCfg20), std::invalid_argument);
  }
}

TEST_SUITE("discrepancy_report") {
  TEST_CASE("structure and the known mismatches") {
    const PrecisionConfig cfg{30, 10};
    const DiscrepancyReport report = discrepancy_report(cfg);
    REQUIRE(report.anchors.size() == 2);

    const AnchorAudit& at_one = report.anchors[0];
    REQUIRE(at_one.rows.size() == 6);
    for (const AuditRow& row : at_one.rows) {
      REQUIRE(row.delta_printed_sum_vs_paper.has_value());
      REQUIRE(row.paper_value.has_value());
    }
    // Order-1 reversion sum 1.3509... vs published 1.2133...: delta ~ +0.1376.
    const BigReal d1 = *at_one.rows[0].delta_reversion_sum_vs_paper;
    CHECK(abs(d1 - BigReal::parse("0.1376", 20)) < BigReal::parse("1e-3", 16));
    // Printed r_3 partial sum breaks away from the published row 3.
    CHECK(abs(*at_one.rows[2].delta_printed_sum_vs_paper) > BigReal::parse("1e-3", 16));

    const AnchorAudit& at_three_halves = report.anchors[1];
    REQUIRE(at_three_halves.rows.size() == 3);
    // Final partial sum sits within 1e-7 of the root.
    CHECK(abs(at_three_halves.rows[2].delta_reversion_sum_vs_root) <
          BigReal::parse("1e-7", 16));
    // Printed q_3 vs the order-3 reversion term: delta ~ -9.146e-4.
    const BigReal dq3 = *at_three_halves.rows[2].delta_printed_term_vs_reversion_term;
    CHECK(abs(dq3 - BigReal::parse("-0.00091462356", 20)) < BigReal::parse("1e-9", 16));
    CHECK(!at_one.notes.empty());
    CHECK(!at_three_halves.notes.empty());
  }

  TEST_CASE("partial sums at 3/2 approach the root monotonically") {
    const DiscrepancyReport report = discrepancy_report(PrecisionConfig{30, 10});
    const std::vector<AuditRow>& rows = report.anchors[1].rows;
    CHECK(abs(rows[0].delta_reversion_sum_vs_root) >
          abs(rows[1].delta_reversion_sum_vs_root));
    CHECK(abs(rows[1].delta_reversion_sum_vs_root) >
          abs(rows[2].delta_reversion_sum_vs_root));
  }

  TEST_CASE("repeated runs are bit-identical") {
    const DiscrepancyReport a = discrepancy_report(PrecisionConfig{25, 10});
    const DiscrepancyReport b = discrepancy_report(PrecisionConfig{25, 10});
    CHECK(a.root.identical(b.root));
    for (size_t i = 0; i < a.anchors.size(); ++i) {
      for (size_t j = 0; j < a.anchors[i].rows.size(); ++j) {
        CHECK(a.anchors[i].rows[j].reversion_partial_sum.identical(
            b.anchors[i].rows[j].reversion_partial_sum));
        CHECK(a.anchors[i].rows[j].printed_term->identical(
            *b.anchors[i].rows[j].printed_term));
      }
    }
  }
}

}  // namespace
}  // namespace gammamin::test
