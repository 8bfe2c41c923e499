#pragma once

#include <string>
#include <vector>

#include "hankel/bounds.hpp"
#include "hankel/identities.hpp"
#include "hankel/search.hpp"

namespace hankel {

enum class OutputFormat { Json, Csv, Text };

OutputFormat parse_format(const std::string& text);
ClassKind parse_class(const std::string& text);

/// "start:stop:step" with exact rational stepping, inclusive stop, values
/// clipped to alpha < 1.
std::vector<Rational> parse_alpha_grid(const std::string& text);

/// 17 significant digits, '.' decimal separator.
std::string format_real(double v);

std::string csv_quote(const std::string& field);
std::string csv_row(const std::vector<std::string>& fields);

std::string identities_report(const std::vector<IdentityReport>& reports, OutputFormat fmt);
std::string bounds_report(const std::vector<BoundResult>& rows, OutputFormat fmt);
std::string search_report(const std::vector<SearchReport>& rows, OutputFormat fmt);
std::string lemma_report(const LemmaSuiteReport& rep, std::uint64_t seed, double tol,
                         OutputFormat fmt);

}  // namespace hankel
