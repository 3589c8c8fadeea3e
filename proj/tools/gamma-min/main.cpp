#include <charconv>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <gammamin/errors.hpp>
#include <gammamin/format.hpp>
#include <gammamin/gamma_minimum.hpp>
#include <gammamin/specfun.hpp>

#include "render.hpp"

namespace {

using namespace gammamin;
using cli::OutputFormat;

constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

// Usage problems that surface after CLI11 parsing (bad ranges, bad names).
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

int require_digits(int digits) {
  if (digits < 16) throw UsageError("digits must be ≥ 16");
  return digits;
}

OutputFormat require_format(const std::string& name) {
  const auto format = cli::format_from_name(name);
  if (!format) throw UsageError("format must be one of text, csv, json");
  return *format;
}

long parse_long(const std::string& text, const char* what) {
  long value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw UsageError(std::string(what) + " must be an integer, got '" + text + "'");
  }
  return value;
}

struct RootArgs {
  int digits = 50;
};

struct ExpandArgs {
  std::string anchor;
  int order = 8;
  std::string method = "reversion";
  int digits = 50;
  std::string format = "text";
};

struct TableArgs {
  int id = 0;
  std::string format = "text";
};

struct AuditArgs {
  int digits = 50;
  std::string format = "text";
};

struct SpecfunArgs {
  std::string fn;
  std::vector<std::string> args;
  int digits = 50;
};

int run_root(const RootArgs& a) {
  const int digits = require_digits(a.digits);
  const BigReal root = psi_root(PrecisionConfig{digits, 10});
  std::cout << to_string_significant(root, digits) << "\n";
  return 0;
}

int run_expand(const ExpandArgs& a) {
  const int digits = require_digits(a.digits);
  if (a.order < 1 || a.order > 20) throw UsageError("order must be in [1, 20]");
  const OutputFormat format = require_format(a.format);

  BigReal anchor = [&] {
    try {
      return BigReal::parse(a.anchor, digits + 10);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();

  const PrecisionConfig cfg{digits, 10};
  if (a.method == "both") {
    const ExpansionResult rev = expand(anchor, a.order, Method::kReversion, cfg);
    const ExpansionResult fdb = expand(anchor, a.order, Method::kFaaDiBruno, cfg);
    std::cout << cli::render_expansion_pair(rev, fdb, format, digits);
    return 0;
  }
  const auto method = method_from_name(a.method);
  if (!method || *method == Method::kPrinted) {
    throw UsageError("method must be one of reversion, faadibruno, both");
  }
  std::cout << cli::render_expansion(expand(anchor, a.order, *method, cfg), format, digits);
  return 0;
}

int run_table(const TableArgs& a) {
  if (a.id != 1 && a.id != 2) throw UsageError("table id must be 1 or 2");
  const OutputFormat format = require_format(a.format);
  // Tables print 10 significant digits; 20 working digits is ample.
  std::cout << cli::render_table(table(a.id, PrecisionConfig{20, 10}), format);
  return 0;
}

int run_audit(const AuditArgs& a) {
  const int digits = require_digits(a.digits);
  const OutputFormat format = require_format(a.format);
  std::cout << cli::render_audit(discrepancy_report(PrecisionConfig{digits, 10}),
                                 format, digits);
  return 0;
}

int run_specfun(const SpecfunArgs& a) {
  const int digits = require_digits(a.digits);
  const PrecisionConfig cfg{digits, 10};
  const int arg_digits = digits + 10;

  auto expect_arity = [&](size_t n) {
    if (a.args.size() != n) {
      throw UsageError("--fn " + a.fn + " takes " + std::to_string(n) +
                       " argument(s), got " + std::to_string(a.args.size()));
    }
  };
  auto parse_real = [&](const std::string& text) {
    try {
      return BigReal::parse(text, arg_digits);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  };

  BigReal value(0, 16);
  if (a.fn == "digamma") {
    expect_arity(1);
    value = digamma(parse_real(a.args[0]), cfg);
  } else if (a.fn == "polygamma") {
    expect_arity(2);
    const long n = parse_long(a.args[0], "polygamma order");
    if (n < 1) throw DomainError("polygamma: derivative order must be >= 1");
    value = polygamma(static_cast<int>(n), parse_real(a.args[1]), cfg);
  } else if (a.fn == "zeta") {
    expect_arity(1);
    const long u = parse_long(a.args[0], "zeta order");
    if (u < 2) throw DomainError("riemann_zeta: order must be an integer >= 2");
    value = riemann_zeta(static_cast<int>(u), cfg);
  } else if (a.fn == "hurwitz") {
    expect_arity(2);
    const long u = parse_long(a.args[0], "hurwitz zeta order");
    if (u < 2) throw DomainError("hurwitz_zeta: order must be an integer >= 2");
    value = hurwitz_zeta(static_cast<int>(u), parse_real(a.args[1]), cfg);
  } else {
    throw UsageError("--fn must be one of digamma, polygamma, zeta, hurwitz");
  }
  std::cout << to_string_significant(value, digits) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Locates the minimum of the Gamma function as the positive root of the "
               "digamma function, via high-precision series inversion, and audits the "
               "published coefficient tables for this expansion."};
  app.require_subcommand(1);

  RootArgs root_args;
  auto* cmd_root = app.add_subcommand("root", "Direct root of the digamma function");
  cmd_root->add_option("--digits", root_args.digits, "Significant digits (>= 16)");

  ExpandArgs expand_args;
  auto* cmd_expand =
      app.add_subcommand("expand", "Series expansion of the root about an anchor");
  cmd_expand->add_option("--a", expand_args.anchor, "Anchor (decimal or rational like 3/2)")
      ->required();
  cmd_expand->add_option("--order", expand_args.order, "Expansion order, 1..20");
  cmd_expand->add_option("--method", expand_args.method, "reversion | faadibruno | both");
  cmd_expand->add_option("--digits", expand_args.digits, "Significant digits (>= 16)");
  cmd_expand->add_option("--format", expand_args.format, "text | csv | json");

  TableArgs table_args;
  auto* cmd_table =
      app.add_subcommand("table", "Reproduce a published convergence table with deltas");
  cmd_table->add_option("--id", table_args.id, "Table id, 1 or 2")->required();
  cmd_table->add_option("--format", table_args.format, "text | csv | json");

  AuditArgs audit_args;
  auto* cmd_audit = app.add_subcommand(
      "audit", "Cross-audit published coefficients, tables, engines and root");
  cmd_audit->add_option("--digits", audit_args.digits, "Significant digits (>= 16)");
  cmd_audit->add_option("--format", audit_args.format, "text | csv | json");

  SpecfunArgs specfun_args;
  auto* cmd_specfun = app.add_subcommand("specfun", "Evaluate a special function");
  cmd_specfun->add_option("--fn", specfun_args.fn, "digamma | polygamma | zeta | hurwitz")
      ->required();
  cmd_specfun->add_option("--args", specfun_args.args, "Function arguments")
      ->expected(-1);
  cmd_specfun->add_option("--digits", specfun_args.digits, "Significant digits (>= 16)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (cmd_root->parsed()) return run_root(root_args);
    if (cmd_expand->parsed()) return run_expand(expand_args);
    if (cmd_table->parsed()) return run_table(table_args);
    if (cmd_audit->parsed()) return run_audit(audit_args);
    if (cmd_specfun->parsed()) return run_specfun(specfun_args);
    std::cerr << "error: no subcommand\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}
