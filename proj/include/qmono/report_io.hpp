#pragma once

#include <string>

#include <json.hpp>

#include "qmono/measures.hpp"
#include "qmono/monogamy.hpp"

namespace qmono {

/// 12 significant digits, shortest of fixed/scientific, independent of the
/// global locale.
std::string format_number(double v);

/// Fields: measure, alpha, lhs, rhs_terms, residual, verdict, exact, plus
/// focus, regime, tolerance and the bound/strictness metadata.
nlohmann::json report_to_json(const ResidualReport& report);

nlohmann::json measure_to_json(const MeasureValue& value);

/// "measure,alpha,focus,lhs,rhs_sum,residual,verdict,exact,regime"
std::string report_csv_header();
/// One CSV line, no trailing newline.
std::string report_csv_row(const ResidualReport& report);

}  // namespace qmono
