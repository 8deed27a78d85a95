#include "ccfusion/report.hpp"

#include <cstdio>

#include "ccfusion/random.hpp"

namespace ccfusion {

OrderedJson to_json(const FrameBounds& bounds) {
  return {{"lower", bounds.lower}, {"upper", bounds.upper}, {"optimal", bounds.optimal}};
}

OrderedJson to_json(const BoundsReport& report) {
  return {{"A", report.bounds.lower},
          {"B", report.bounds.upper},
          {"classification", to_string(report.classification)},
          {"hermitian_residual", report.hermitian_residual},
          {"form_is_real", report.form_is_real}};
}

namespace {

const char* to_string(Relation r) { return r == Relation::enclosing ? "enclosing" : "floors"; }

}  // namespace

OrderedJson to_json(const TheoremReport& report) {
  OrderedJson checks = OrderedJson::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"subject", c.subject},
                      {"relation", to_string(c.relation)},
                      {"predicted", to_json(c.predicted)},
                      {"actual", to_json(c.actual)},
                      {"ok", c.ok}});
  }
  OrderedJson diagnostics = OrderedJson::object();
  for (const auto& [k, v] : report.diagnostics) diagnostics[k] = v;
  OrderedJson out;
  out["theorem"] = report.theorem_id;
  out["status"] = "checked";
  out["hypothesis_satisfied"] = report.hypothesis_satisfied;
  out["containment_ok"] = report.containment_ok;
  out["predicted_bounds"] = to_json(report.predicted_bounds);
  out["actual_bounds"] = to_json(report.actual_bounds);
  out["checks"] = std::move(checks);
  out["diagnostics"] = std::move(diagnostics);
  out["notes"] = report.notes;
  return out;
}

OrderedJson to_json(const Tolerances& tol) {
  OrderedJson out;
  for (const auto& name : Tolerances::names()) out[name] = tol.get(name);
  return out;
}

std::string format_double(double x) {
  char buf[32];
  for (int precision = 6; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof buf, "%.*g", precision, x);
    if (std::strtod(buf, nullptr) == x) break;
  }
  return buf;
}

std::string hex64(std::uint64_t x) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

void write_text(std::ostream& out, const BoundsReport& report, const std::string& indent) {
  out << indent << "A = " << format_double(report.bounds.lower) << '\n'
      << indent << "B = " << format_double(report.bounds.upper) << '\n'
      << indent << "classification = " << to_string(report.classification) << '\n'
      << indent << "hermitian_residual = " << format_double(report.hermitian_residual) << '\n';
}

void write_text(std::ostream& out, const TheoremReport& report, const std::string& indent) {
  const char* verdict = !report.hypothesis_satisfied ? "n/a " : report.containment_ok ? "ok  " : "FAIL";
  out << indent << '[' << verdict << "] " << report.theorem_id
      << ": hypothesis " << (report.hypothesis_satisfied ? "satisfied" : "not satisfied")
      << ", containment " << (report.containment_ok ? "ok" : "violated") << '\n';
  for (const auto& c : report.checks) {
    out << indent << "    " << c.subject << ": predicted [" << format_double(c.predicted.lower) << ", "
        << format_double(c.predicted.upper) << "], actual [" << format_double(c.actual.lower) << ", "
        << format_double(c.actual.upper) << "] (" << to_string(c.relation) << (c.ok ? ", ok" : ", violated")
        << ")\n";
  }
  for (const auto& [k, v] : report.diagnostics) {
    out << indent << "    " << k << " = " << format_double(v) << '\n';
  }
  for (const auto& note : report.notes) out << indent << "    note: " << note << '\n';
}

OrderedJson RunReport::to_json() const {
  OrderedJson out;
  out["tool"] = kToolVersion;
  out["command"] = command;
  out["rng"] = std::string(kRngName);
  out["seed"] = seed;
  out["samples"] = samples;
  out["tolerances"] = ccfusion::to_json(tolerances);
  out["results"] = entries;
  out["timing_ms"] = timing_ms;
  return out;
}

}  // namespace ccfusion
