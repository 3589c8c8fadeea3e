#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <gammamin/gamma_minimum.hpp>

namespace gammamin::cli {

enum class OutputFormat { kText, kCsv, kJson };

std::optional<OutputFormat> format_from_name(std::string_view name);

// Serialized expansion: per order the coefficient h_n/n!, the term and the
// partial sum, at `digits` significant digits.
std::string render_expansion(const ExpansionResult& result, OutputFormat format,
                             int digits);

// Both engines side by side plus their maximum relative coefficient deviation
// (text and json only; csv emits the rows of both engines).
std::string render_expansion_pair(const ExpansionResult& reversion,
                                  const ExpansionResult& faa_di_bruno,
                                  OutputFormat format, int digits);

// Table rows at a fixed 9 fractional digits (10 significant digits for values
// in [1, 10)), matching the published typography. CSV columns are exactly
// row_label,computed,paper_value,delta.
std::string render_table(const TableReport& report, OutputFormat format);

std::string render_audit(const DiscrepancyReport& report, OutputFormat format,
                         int digits);

}  // namespace gammamin::cli
