#include "qmono/report_io.hpp"

#include <array>
#include <charconv>

namespace qmono {

using nlohmann::json;

std::string format_number(double v) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 12);
  if (ec != std::errc{}) return "nan";
  return std::string(buf.data(), ptr);
}

json report_to_json(const ResidualReport& r) {
  json terms = json::array();
  for (const auto& t : r.rhs_terms) {
    terms.push_back({{"partners", t.partners},
                     {"measure_value", t.measure_value},
                     {"value", t.value},
                     {"exact", t.exact},
                     {"excluded", t.excluded}});
  }
  json j{{"measure", std::string(to_string(r.measure))},
         {"alpha", r.alpha},
         {"focus", r.focus},
         {"regime", r.regime},
         {"lhs_measure", r.lhs_measure},
         {"lhs", r.lhs},
         {"rhs_terms", std::move(terms)},
         {"residual", r.residual},
         {"tolerance", r.tolerance},
         {"verdict", std::string(to_string(r.verdict))},
         {"exact", r.exact}};
  if (!r.bound_direction.empty()) j["bound_direction"] = r.bound_direction;
  if (r.strictness_not_decided) j["comparison"] = "non-strict against tolerance";
  return j;
}

json measure_to_json(const MeasureValue& v) {
  return {{"measure", std::string(to_string(v.id))}, {"value", v.value}, {"exact", v.exact}};
}

std::string report_csv_header() { return "measure,alpha,focus,lhs,rhs_sum,residual,verdict,exact,regime"; }

std::string report_csv_row(const ResidualReport& r) {
  double rhs = 0.0;
  for (const auto& t : r.rhs_terms) rhs += t.value;
  std::string out;
  out += to_string(r.measure);
  out += ',' + format_number(r.alpha);
  out += ',' + std::to_string(r.focus);
  out += ',' + format_number(r.lhs);
  out += ',' + format_number(rhs);
  out += ',' + format_number(r.residual);
  out += ',';
  out += to_string(r.verdict);
  out += r.exact ? ",true," : ",false,";
  out += r.regime;
  return out;
}

}  // namespace qmono
