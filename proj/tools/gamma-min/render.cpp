#include "render.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include <json.hpp>

#include <gammamin/format.hpp>

namespace gammamin::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kTableDecimals = 9;

std::string num(const BigReal& x, int digits) {
  return to_string_significant(x, digits);
}

// Short label form: plain decimal with trailing zeros trimmed ("1", "1.5").
std::string label_of(const BigReal& x) {
  std::string s = to_string_significant(x, 12);
  if (s.find('e') != std::string::npos || s.find('.') == std::string::npos) return s;
  s.erase(s.find_last_not_of('0') + 1);
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

std::string pad(std::string s, size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

BigReal max_relative_deviation(const ExpansionResult& a, const ExpansionResult& b) {
  BigReal worst(0, 16);
  for (size_t i = 0; i < a.coefficients.size() && i < b.coefficients.size(); ++i) {
    const BigReal diff = abs(a.coefficients[i] - b.coefficients[i]);
    if (diff.is_zero()) continue;
    const BigReal rel = diff / abs(a.coefficients[i]);
    if (rel > worst) worst = rel;
  }
  return worst;
}

ordered_json expansion_json(const ExpansionResult& r, int digits) {
  ordered_json j;
  j["anchor"] = num(r.anchor, digits);
  j["method"] = std::string(method_name(r.method));
  j["offset"] = num(r.offset, digits);
  j["coefficients"] = ordered_json::array();
  j["terms"] = ordered_json::array();
  j["partial_sums"] = ordered_json::array();
  for (const BigReal& c : r.coefficients) j["coefficients"].push_back(num(c, digits));
  for (const BigReal& t : r.terms) j["terms"].push_back(num(t, digits));
  for (const BigReal& s : r.partial_sums) j["partial_sums"].push_back(num(s, digits));
  return j;
}

void expansion_text(std::ostringstream& out, const ExpansionResult& r, int digits) {
  out << "anchor : " << num(r.anchor, digits) << "\n";
  out << "method : " << method_name(r.method) << "\n";
  out << "offset : " << num(r.offset, digits) << "\n";
  const size_t width = static_cast<size_t>(digits) + 10;
  out << pad("order", 7) << pad("coefficient", width) << pad("term", width)
      << "partial_sum\n";
  for (size_t i = 0; i < r.coefficients.size(); ++i) {
    out << pad(std::to_string(i + 1), 7) << pad(num(r.coefficients[i], digits), width)
        << pad(num(r.terms[i], digits), width) << num(r.partial_sums[i], digits)
        << "\n";
  }
}

void expansion_csv_rows(std::ostringstream& out, const ExpansionResult& r, int digits) {
  for (size_t i = 0; i < r.coefficients.size(); ++i) {
    out << method_name(r.method) << "," << (i + 1) << ","
        << num(r.coefficients[i], digits) << "," << num(r.terms[i], digits) << ","
        << num(r.partial_sums[i], digits) << "\n";
  }
}

ordered_json audit_row_json(const AuditRow& row, int digits) {
  ordered_json j;
  j["order"] = row.order;
  j["reversion_coefficient"] = num(row.reversion_coefficient, digits);
  j["reversion_term"] = num(row.reversion_term, digits);
  j["reversion_partial_sum"] = num(row.reversion_partial_sum, digits);
  j["delta_reversion_sum_vs_root"] = num(row.delta_reversion_sum_vs_root, digits);
  if (row.printed_term) j["printed_term"] = num(*row.printed_term, digits);
  if (row.printed_partial_sum) {
    j["printed_partial_sum"] = num(*row.printed_partial_sum, digits);
  }
  if (row.paper_value) j["paper_value"] = num(*row.paper_value, digits);
  if (row.delta_printed_term_vs_reversion_term) {
    j["delta_printed_term_vs_reversion_term"] =
        num(*row.delta_printed_term_vs_reversion_term, digits);
  }
  if (row.delta_reversion_sum_vs_paper) {
    j["delta_reversion_sum_vs_paper"] = num(*row.delta_reversion_sum_vs_paper, digits);
  }
  if (row.delta_printed_sum_vs_paper) {
    j["delta_printed_sum_vs_paper"] = num(*row.delta_printed_sum_vs_paper, digits);
  }
  return j;
}

}  // namespace

std::optional<OutputFormat> format_from_name(std::string_view name) {
  if (name == "text") return OutputFormat::kText;
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "json") return OutputFormat::kJson;
  return std::nullopt;
}

std::string render_expansion(const ExpansionResult& result, OutputFormat format,
                             int digits) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::kText:
      expansion_text(out, result, digits);
      break;
    case OutputFormat::kCsv:
      out << "method,order,coefficient,term,partial_sum\n";
      expansion_csv_rows(out, result, digits);
      break;
    case OutputFormat::kJson:
      out << expansion_json(result, digits).dump(2) << "\n";
      break;
  }
  return out.str();
}

std::string render_expansion_pair(const ExpansionResult& reversion,
                                  const ExpansionResult& faa_di_bruno,
                                  OutputFormat format, int digits) {
  const BigReal deviation = max_relative_deviation(reversion, faa_di_bruno);
  std::ostringstream out;
  switch (format) {
    case OutputFormat::kText:
      expansion_text(out, reversion, digits);
      out << "\n";
      expansion_text(out, faa_di_bruno, digits);
      out << "\nmax relative coefficient deviation: " << num(deviation, 3) << "\n";
      break;
    case OutputFormat::kCsv:
      out << "method,order,coefficient,term,partial_sum\n";
      expansion_csv_rows(out, reversion, digits);
      expansion_csv_rows(out, faa_di_bruno, digits);
      break;
    case OutputFormat::kJson: {
      ordered_json j;
      j["reversion"] = expansion_json(reversion, digits);
      j["faadibruno"] = expansion_json(faa_di_bruno, digits);
      j["max_relative_deviation"] = num(deviation, 3);
      out << j.dump(2) << "\n";
      break;
    }
  }
  return out.str();
}

std::string render_table(const TableReport& report, OutputFormat format) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::kText: {
      out << "table " << report.table_id << "\n";
      out << pad("row", 10) << pad("computed", 14) << pad("paper_value", 14)
          << "delta\n";
      for (const TableRow& row : report.rows) {
        out << pad(row.label, 10) << pad(to_string_fixed(row.computed, kTableDecimals), 14)
            << pad(to_string_fixed(row.paper_value, kTableDecimals), 14)
            << to_string_fixed(row.delta, kTableDecimals) << "\n";
      }
      out << "note: " << report.method_note << "\n";
      break;
    }
    case OutputFormat::kCsv:
      out << "row_label,computed,paper_value,delta\n";
      for (const TableRow& row : report.rows) {
        out << row.label << "," << to_string_fixed(row.computed, kTableDecimals) << ","
            << to_string_fixed(row.paper_value, kTableDecimals) << ","
            << to_string_fixed(row.delta, kTableDecimals) << "\n";
      }
      break;
    case OutputFormat::kJson: {
      ordered_json j;
      j["table_id"] = report.table_id;
      j["rows"] = ordered_json::array();
      for (const TableRow& row : report.rows) {
        ordered_json jr;
        jr["label"] = row.label;
        jr["computed"] = to_string_fixed(row.computed, kTableDecimals);
        jr["paper_value"] = to_string_fixed(row.paper_value, kTableDecimals);
        jr["delta"] = to_string_fixed(row.delta, kTableDecimals);
        j["rows"].push_back(jr);
      }
      j["method_note"] = report.method_note;
      out << j.dump(2) << "\n";
      break;
    }
  }
  return out.str();
}

std::string render_audit(const DiscrepancyReport& report, OutputFormat format,
                         int digits) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::kText: {
      out << "psi_root: " << num(report.root, digits) << "\n";
      for (const AnchorAudit& anchor : report.anchors) {
        out << "\n== anchor " << label_of(anchor.anchor) << " ==\n";
        out << "offset (-psi(a)): " << num(anchor.offset, digits) << "\n";
        for (const AuditRow& row : anchor.rows) {
          out << "order " << row.order << ":\n";
          out << "  reversion coefficient      " << num(row.reversion_coefficient, digits) << "\n";
          out << "  reversion term             " << num(row.reversion_term, digits) << "\n";
          out << "  reversion partial sum      " << num(row.reversion_partial_sum, digits) << "\n";
          out << "  reversion sum - root       " << num(row.delta_reversion_sum_vs_root, digits) << "\n";
          if (row.printed_term) {
            out << "  printed term               " << num(*row.printed_term, digits) << "\n";
          }
          if (row.printed_partial_sum) {
            out << "  printed partial sum        " << num(*row.printed_partial_sum, digits) << "\n";
          }
          if (row.paper_value) {
            out << "  paper value                " << num(*row.paper_value, digits) << "\n";
          }
          if (row.delta_printed_term_vs_reversion_term) {
            out << "  printed term - rev term    "
                << num(*row.delta_printed_term_vs_reversion_term, digits) << "\n";
          }
          if (row.delta_reversion_sum_vs_paper) {
            out << "  reversion sum - paper      "
                << num(*row.delta_reversion_sum_vs_paper, digits) << "\n";
          }
          if (row.delta_printed_sum_vs_paper) {
            out << "  printed sum - paper        "
                << num(*row.delta_printed_sum_vs_paper, digits) << "\n";
          }
        }
        out << "notes:\n";
        for (const std::string& note : anchor.notes) out << "  - " << note << "\n";
      }
      break;
    }
    case OutputFormat::kCsv: {
      out << "anchor,order,field,value\n";
      out << ",,psi_root," << num(report.root, digits) << "\n";
      for (const AnchorAudit& anchor : report.anchors) {
        const std::string a = label_of(anchor.anchor);
        out << a << ",,offset," << num(anchor.offset, digits) << "\n";
        for (const AuditRow& row : anchor.rows) {
          const std::string prefix = a + "," + std::to_string(row.order) + ",";
          out << prefix << "reversion_coefficient," << num(row.reversion_coefficient, digits) << "\n";
          out << prefix << "reversion_term," << num(row.reversion_term, digits) << "\n";
          out << prefix << "reversion_partial_sum," << num(row.reversion_partial_sum, digits) << "\n";
          out << prefix << "delta_reversion_sum_vs_root," << num(row.delta_reversion_sum_vs_root, digits) << "\n";
          if (row.printed_term) {
            out << prefix << "printed_term," << num(*row.printed_term, digits) << "\n";
          }
          if (row.printed_partial_sum) {
            out << prefix << "printed_partial_sum," << num(*row.printed_partial_sum, digits) << "\n";
          }
          if (row.paper_value) {
            out << prefix << "paper_value," << num(*row.paper_value, digits) << "\n";
          }
          if (row.delta_printed_term_vs_reversion_term) {
            out << prefix << "delta_printed_term_vs_reversion_term,"
                << num(*row.delta_printed_term_vs_reversion_term, digits) << "\n";
          }
          if (row.delta_reversion_sum_vs_paper) {
            out << prefix << "delta_reversion_sum_vs_paper,"
                << num(*row.delta_reversion_sum_vs_paper, digits) << "\n";
          }
          if (row.delta_printed_sum_vs_paper) {
            out << prefix << "delta_printed_sum_vs_paper,"
                << num(*row.delta_printed_sum_vs_paper, digits) << "\n";
          }
        }
      }
      break;
    }
    case OutputFormat::kJson: {
      ordered_json j;
      j["root"] = num(report.root, digits);
      j["anchors"] = ordered_json::array();
      for (const AnchorAudit& anchor : report.anchors) {
        ordered_json ja;
        ja["anchor"] = num(anchor.anchor, digits);
        ja["offset"] = num(anchor.offset, digits);
        ja["rows"] = ordered_json::array();
        for (const AuditRow& row : anchor.rows) {
          ja["rows"].push_back(audit_row_json(row, digits));
        }
        ja["notes"] = anchor.notes;
        j["anchors"].push_back(ja);
      }
      out << j.dump(2) << "\n";
      break;
    }
  }
  return out.str();
}

}  // namespace gammamin::cli
