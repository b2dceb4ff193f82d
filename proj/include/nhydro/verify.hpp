#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "nhydro/quadrature.hpp"

namespace nhydro::verify {

inline constexpr const char* kToolkitVersion = "1.0.0";
inline constexpr int kSchemaVersion = 1;

/// One identity evaluated at one parameter tuple. pass <=> error <= tolerance.
struct Check {
  std::string id;
  std::string identity;
  std::map<std::string, double> parameters;
  double error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  /// Set when the check could not be evaluated (exception, non-convergence).
  std::string note;
};

struct SuiteResult {
  std::string suite;
  std::vector<std::string> identities;
  std::vector<Check> checks;

  int passed() const;
  int failed() const;
};

struct VerifyOptions {
  quad::QuadratureSpec quad;
  /// Restrict the fourier and normalization sweeps to one dimension (0 = all).
  int only_N = 0;
  int n_max = 6;
};

struct SuiteInfo {
  std::string id;
  std::vector<std::string> identities;
  std::string description;
  std::function<SuiteResult(const VerifyOptions&)> run;
};

/// Registered suites, ordered by id.
const std::vector<SuiteInfo>& registry();

const SuiteInfo* find_suite(const std::string& id);

struct Report {
  std::vector<SuiteResult> suites;
  quad::QuadratureSpec quad;

  int total() const;
  int passed() const;
  bool all_passed() const { return passed() == total(); }
};

/// Runs the named suites (all of them when `ids` is empty) in id order.
/// Throws std::invalid_argument for an unknown id.
Report run_suites(std::vector<std::string> ids, const VerifyOptions& options);

/// Adds a check, deriving pass from error <= tolerance (NaN fails).
void record(std::vector<Check>& out, std::string id, std::string identity,
            std::map<std::string, double> parameters, double error, double tolerance,
            std::string note = {});

/// Deterministic serialisations: sorted keys, 17 significant digits in JSON,
/// shortest round-trip representation in CSV.
std::string to_json(const Report& report);
std::string to_csv(const Report& report);

/// Shortest decimal string that round-trips to `v`.
std::string format_shortest(double v);
/// printf("%.17g") with non-finite values mapped to JSON null.
std::string format_json_number(double v);

}  // namespace nhydro::verify
