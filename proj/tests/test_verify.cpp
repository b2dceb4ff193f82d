#include <algorithm>
#include <cmath>
#include <limits>

#include <omp.h>

#include "doctest.h"
#include "json.hpp"
#include "nhydro/errata.hpp"
#include "nhydro/verify.hpp"

using namespace nhydro;

TEST_CASE("registry is sorted and every suite names its identities") {
  const auto& reg = verify::registry();
  REQUIRE(reg.size() >= 10);
  CHECK(std::is_sorted(reg.begin(), reg.end(),
                       [](const auto& a, const auto& b) { return a.id < b.id; }));
  for (const auto& s : reg) {
    CHECK_FALSE(s.identities.empty());
    CHECK(verify::find_suite(s.id) == &s);
  }
  CHECK(verify::find_suite("nope") == nullptr);
  CHECK_THROWS_AS(verify::run_suites({"nope"}, {}), std::invalid_argument);
}

TEST_CASE("record derives pass from error and tolerance") {
  std::vector<verify::Check> out;
  verify::record(out, "a", "x", {}, 1e-9, 1e-8);
  verify::record(out, "b", "x", {}, 1e-7, 1e-8);
  verify::record(out, "c", "x", {}, std::nan(""), 1e-8);
  verify::record(out, "d", "x", {}, 1e-8, 1e-8);
  CHECK(out[0].pass);
  CHECK_FALSE(out[1].pass);
  CHECK_FALSE(out[2].pass);
  CHECK(out[3].pass);
}

TEST_CASE("number formatting") {
  CHECK(verify::format_json_number(0.1) == "0.10000000000000001");
  CHECK(verify::format_json_number(std::numeric_limits<double>::infinity()) == "null");
  CHECK(verify::format_shortest(0.1) == "0.1");
  CHECK(verify::format_shortest(1e-300) == "1e-300");
}

TEST_CASE("report JSON follows the versioned schema") {
  const auto report = verify::run_suites({"plane-wave", "gegenbauer"}, {});
  const std::string text = verify::to_json(report);
  const auto doc = nlohmann::json::parse(text);
  CHECK(doc["schema_version"] == 1);
  CHECK(doc["toolkit_version"] == verify::kToolkitVersion);
  CHECK(doc["quadrature"]["node_count"] == 256);
  REQUIRE(doc["suites"].size() == 2);
  CHECK(doc["suites"][0]["suite"] == "gegenbauer");
  CHECK(doc["suites"][1]["suite"] == "plane-wave");
  CHECK(doc["summary"]["total"] == report.total());
  CHECK(doc["summary"]["all_passed"] == true);
  const auto& check = doc["suites"][1]["checks"][0];
  for (const char* key : {"id", "identity", "parameters", "error", "tolerance", "pass"}) {
    CHECK(check.contains(key));
  }
  CHECK(text.find("\"error\": ") != std::string::npos);
  CHECK(verify::to_csv(report).find("suite,id,identity,parameters,error,tolerance,pass") !=
        std::string::npos);
}

TEST_CASE("reports do not depend on the thread count") {
  verify::VerifyOptions opt;
  opt.only_N = 4;
  opt.n_max = 3;
  const std::vector<std::string> ids = {"fourier", "hankel", "normalization"};
  const int threads = omp_get_max_threads();
  omp_set_num_threads(1);
  const std::string one = verify::to_json(verify::run_suites(ids, opt));
  omp_set_num_threads(std::max(threads, 4));
  const std::string many = verify::to_json(verify::run_suites(ids, opt));
  opt.quad.parallel = false;
  const std::string serial = verify::to_json(verify::run_suites(ids, opt));
  omp_set_num_threads(threads);
  CHECK(one == many);
  CHECK(one == serial);
}

TEST_CASE("fast suites pass") {
  for (std::string id : {"gegenbauer", "gegenbauer-generating", "laguerre", "laguerre-generating",
                         "plane-wave", "coefficient-extraction"}) {
    CAPTURE(id);
    const auto r = verify::run_suites({id}, {});
    CHECK(r.all_passed());
  }
}

TEST_CASE("errata ledger cross-references registered suites") {
  const auto& entries = errata::ledger();
  CHECK(entries.size() >= 5);
  for (const auto& e : entries) {
    CAPTURE(e.id);
    CHECK(verify::find_suite(e.suite) != nullptr);
    CHECK_FALSE(e.issue.empty());
    CHECK_FALSE(e.resolution.empty());
  }
  CHECK(errata::render_text() == errata::render_text());
  CHECK(nlohmann::json::parse(errata::render_json()).size() == entries.size());
}
