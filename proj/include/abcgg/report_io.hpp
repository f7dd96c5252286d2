#pragma once

#include <iomanip>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "abcgg/bound_suite.hpp"
#include "abcgg/bounds.hpp"
#include "abcgg/families.hpp"
#include "abcgg/verification.hpp"

// JSON keeps full double precision (nlohmann writes shortest round-trip
// text); CSV rounds to 12 significant digits.

namespace abcgg {

using Json = nlohmann::ordered_json;

inline Json params_json(const FamilySpec& s) {
  Json j = Json::object();
  for (const auto& [name, value] : named_params(s)) j[std::string(name)] = value;
  return j;
}

inline Json census_json(const DegreeCensus& c) {
  Json arr = Json::array();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    arr.push_back({{"pair", {it->first.hi, it->first.lo}}, {"count", it->second}});
  }
  return arr;
}

namespace detail {

inline Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace detail

inline Json to_json(const VerificationEntry& e) {
  Json j;
  j["family"] = to_string(e.spec.family);
  j["params"] = params_json(e.spec);
  j["index"] = to_string(e.index);
  j["closed_form"] = detail::optional_number(e.closed_form);
  j["direct"] = detail::optional_number(e.direct);
  j["abs_diff"] = detail::optional_number(e.abs_diff);
  j["status"] = to_string(e.status);
  if (e.branch) j["branch"] = {{"parity", to_string(e.branch->parity)}, {"k", e.branch->k}};
  if (!e.formula.empty()) j["formula"] = e.formula;
  if (!e.detail.empty()) j["detail"] = e.detail;
  if (e.degree_census) j["degree_census"] = census_json(*e.degree_census);
  if (e.proximity_census) j["proximity_census"] = census_json(*e.proximity_census);
  return j;
}

inline Json to_json(const CensusEntry& c) {
  return {{"family", to_string(c.spec.family)},
          {"params", params_json(c.spec)},
          {"expected", census_json(c.expected)},
          {"observed", census_json(c.observed)},
          {"status", to_string(c.status)}};
}

inline Json to_json(const VerificationReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) entries.push_back(to_json(e));
  Json census = Json::array();
  for (const auto& c : r.census_entries) census.push_back(to_json(c));
  Json summary;
  for (Status s : {Status::Match, Status::Mismatch, Status::NoTheorem, Status::Skipped}) {
    summary[std::string(to_string(s))] = r.count(s);
  }
  return {{"entries", entries}, {"census", census}, {"summary", summary}};
}

inline Json to_json(const BoundReport& r) {
  return {{"theorem", r.theorem},
          {"index", to_string(r.index)},
          {"direction", to_string(r.direction)},
          {"bound_value", r.bound_value},
          {"actual_value", r.actual_value},
          {"slack", r.slack},
          {"holds", r.holds},
          {"strict", r.strict}};
}

inline Json to_json(const SuiteSummary& s) {
  Json j{{"bound", s.bound.name()},
         {"seed", s.seed},
         {"applicable", s.applicable},
         {"skipped", s.skipped},
         {"violations", s.violations}};
  if (s.worst) {
    j["min_slack"] = s.min_slack;
    j["worst"] = to_json(*s.worst);
    j["worst_instance"] = s.worst_instance;
  }
  return j;
}

// ---- CSV ----

inline std::string csv_number(double v) {
  std::ostringstream out;
  out << std::setprecision(12) << v;
  return out.str();
}

inline std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// "q=6;h=2;k=8"
inline std::string params_csv(const FamilySpec& s) {
  std::string out;
  for (const auto& [name, value] : named_params(s)) {
    if (!out.empty()) out += ';';
    out += std::string(name) + "=" + std::to_string(value);
  }
  return out;
}

inline constexpr std::string_view kReportCsvHeader =
    "kind,family,params,index,closed_form,direct,abs_diff,status,detail";

inline std::string to_csv(const VerificationReport& r) {
  std::ostringstream out;
  out << kReportCsvHeader << '\n';
  const auto num = [](const std::optional<double>& v) { return v ? csv_number(*v) : std::string(); };
  for (const auto& e : r.entries) {
    out << "index," << to_string(e.spec.family) << ',' << params_csv(e.spec) << ','
        << to_string(e.index) << ',' << num(e.closed_form) << ',' << num(e.direct) << ','
        << num(e.abs_diff) << ',' << to_string(e.status) << ',' << csv_field(e.detail) << '\n';
  }
  for (const auto& c : r.census_entries) {
    const std::string detail =
        "expected " + format_census(c.expected) + "; observed " + format_census(c.observed);
    out << "census," << to_string(c.spec.family) << ',' << params_csv(c.spec) << ",,,,,"
        << to_string(c.status) << ',' << csv_field(detail) << '\n';
  }
  return out.str();
}

inline constexpr std::string_view kBoundCsvHeader =
    "theorem,index,direction,bound_value,actual_value,slack,holds,strict,instance";

inline std::string bound_csv_row(const BoundReport& r, std::string_view instance = {}) {
  std::ostringstream out;
  out << r.theorem << ',' << to_string(r.index) << ',' << to_string(r.direction) << ','
      << csv_number(r.bound_value) << ',' << csv_number(r.actual_value) << ','
      << csv_number(r.slack) << ',' << (r.holds ? "true" : "false") << ','
      << (r.strict ? "true" : "false") << ',' << csv_field(instance);
  return out.str();
}

}  // namespace abcgg
