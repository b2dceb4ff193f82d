#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>

#include "json.hpp"

#include "nhydro/verify.hpp"

namespace nhydro::verify {

namespace {

using nlohmann::json;

// nlohmann::json keeps object keys sorted; only number formatting is ours.
void write_json(std::ostringstream& os, const json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (v.type()) {
    case json::value_t::object: {
      if (v.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      bool first = true;
      for (auto it = v.begin(); it != v.end(); ++it) {
        os << (first ? "" : ",\n") << inner << json(it.key()).dump() << ": ";
        write_json(os, it.value(), indent + 1);
        first = false;
      }
      os << "\n" << pad << "}";
      return;
    }
    case json::value_t::array: {
      if (v.empty()) {
        os << "[]";
        return;
      }
      os << "[\n";
      bool first = true;
      for (const auto& e : v) {
        os << (first ? "" : ",\n") << inner;
        write_json(os, e, indent + 1);
        first = false;
      }
      os << "\n" << pad << "]";
      return;
    }
    case json::value_t::number_float:
      os << format_json_number(v.get<double>());
      return;
    default:
      os << v.dump();
  }
}

json check_json(const Check& c) {
  json params = json::object();
  for (const auto& [k, val] : c.parameters) {
    params[k] = val;
  }
  json out = {{"id", c.id},
              {"identity", c.identity},
              {"parameters", params},
              {"error", c.error},
              {"tolerance", c.tolerance},
              {"pass", c.pass}};
  if (!c.note.empty()) {
    out["note"] = c.note;
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) {
    return s;
  }
  std::string out = "\"";
  for (char ch : s) {
    out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  }
  return out + "\"";
}

}  // namespace

std::string format_shortest(double v) {
  if (std::isnan(v)) {
    return "nan";
  }
  if (std::isinf(v)) {
    return v > 0 ? "inf" : "-inf";
  }
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string format_json_number(double v) {
  if (!std::isfinite(v)) {
    return "null";
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string to_json(const Report& report) {
  json suites = json::array();
  for (const auto& s : report.suites) {
    json checks = json::array();
    for (const auto& c : s.checks) {
      checks.push_back(check_json(c));
    }
    suites.push_back({{"suite", s.suite},
                      {"identities", s.identities},
                      {"checks", checks},
                      {"passed", s.passed()},
                      {"failed", s.failed()}});
  }
  const auto& q = report.quad;
  const json doc = {
      {"schema_version", kSchemaVersion},
      {"toolkit_version", kToolkitVersion},
      {"quadrature",
       {{"node_count", q.node_count},
        {"truncation_radius", q.truncation_radius},
        {"target_rel_tol", q.target_rel_tol},
        {"max_refinements", q.max_refinements},
        {"scheme", q.scheme == quad::Scheme::GaussLaguerre ? "gauss-laguerre"
                                                           : "gauss-legendre-composite"}}},
      {"suites", suites},
      {"summary",
       {{"total", report.total()},
        {"passed", report.passed()},
        {"failed", report.total() - report.passed()},
        {"all_passed", report.all_passed()}}}};
  std::ostringstream os;
  write_json(os, doc, 0);
  os << "\n";
  return os.str();
}

std::string to_csv(const Report& report) {
  std::ostringstream os;
  os << "# schema_version=" << kSchemaVersion << "\n";
  os << "# toolkit_version=" << kToolkitVersion << "\n";
  os << "# total=" << report.total() << " passed=" << report.passed() << "\n";
  os << "suite,id,identity,parameters,error,tolerance,pass\n";
  for (const auto& s : report.suites) {
    for (const auto& c : s.checks) {
      std::string params;
      for (const auto& [k, v] : c.parameters) {
        params += (params.empty() ? "" : ";") + k + "=" + format_shortest(v);
      }
      os << csv_field(s.suite) << ',' << csv_field(c.id) << ',' << csv_field(c.identity) << ','
         << csv_field(params) << ',' << format_shortest(c.error) << ','
         << format_shortest(c.tolerance) << ',' << (c.pass ? "true" : "false") << "\n";
    }
  }
  return os.str();
}

}  // namespace nhydro::verify
