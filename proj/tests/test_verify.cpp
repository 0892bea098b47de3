#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "degen/verify.hpp"

using degen::SuiteConfig;
using degen::VerificationReport;

namespace {

SuiteConfig small_config() {
  SuiteConfig cfg;
  cfg.max_n = 3;
  cfg.truncation = 8;
  cfg.suites = {"all"};
  cfg.seed = 424242;
  return cfg;
}

}  // namespace

TEST_CASE("config validation") {
  SuiteConfig cfg = small_config();
  cfg.max_n = 0;
  CHECK_THROWS_AS(degen::run_verification(cfg), std::invalid_argument);
  cfg = small_config();
  cfg.truncation = cfg.max_n + 1;
  CHECK_THROWS_AS(degen::run_verification(cfg), std::invalid_argument);
  cfg = small_config();
  cfg.lambda_samples.clear();
  CHECK_THROWS_AS(degen::run_verification(cfg), std::invalid_argument);
  cfg = small_config();
  cfg.suites = {"bogus"};
  CHECK_THROWS_AS(degen::run_verification(cfg), std::invalid_argument);
  cfg = small_config();
  cfg.suites = {};
  CHECK_THROWS_AS(degen::run_verification(cfg), std::invalid_argument);
  cfg = small_config();
  cfg.inject_fault = "NOPE";
  CHECK_THROWS_AS(degen::run_verification(cfg), std::invalid_argument);
}

TEST_CASE("small full run passes and counts add up") {
  const VerificationReport report = degen::run_verification(small_config());
  CHECK(report.failures == 0);
  CHECK(report.records.size() > 100);
  std::size_t failing = 0;
  for (const auto& r : report.records)
    if (!r.pass) ++failing;
  CHECK(failing == report.failures);
  // every suite contributed
  for (const char* suite : {"basics", "stirling", "families", "transform", "opcalc"})
    CHECK(std::any_of(report.records.begin(), report.records.end(),
                      [&](const auto& r) { return r.suite == suite; }));
  // the seven documented notes are all present on a full run
  CHECK(report.notes.size() == 7);
}

TEST_CASE("suite selection limits records and notes") {
  SuiteConfig cfg = small_config();
  cfg.suites = {"transform"};
  const VerificationReport report = degen::run_verification(cfg);
  CHECK(report.failures == 0);
  for (const auto& r : report.records) CHECK(r.suite == "transform");
  CHECK(report.notes.size() == 4);
  for (const char* id : {"E58", "E71", "T6", "T9"})
    CHECK(std::any_of(report.notes.begin(), report.notes.end(),
                      [&](const auto& n) { return n.id == id; }));
}

TEST_CASE("reports are byte-identical for identical configs") {
  SuiteConfig cfg = small_config();
  cfg.suites = {"transform", "stirling"};
  const std::string a = degen::report_to_json(degen::run_verification(cfg));
  const std::string b = degen::report_to_json(degen::run_verification(cfg));
  CHECK(a == b);
  SuiteConfig other = cfg;
  other.seed = cfg.seed + 1;
  const std::string c = degen::report_to_json(degen::run_verification(other));
  CHECK(a != c);  // the seed feeds the grids, so the report must move
}

TEST_CASE("fault injection produces exact failing records") {
  SuiteConfig cfg = small_config();
  cfg.suites = {"transform"};
  cfg.inject_fault = "T4";
  const VerificationReport report = degen::run_verification(cfg);
  CHECK(report.failures > 0);
  bool found = false;
  for (const auto& r : report.records) {
    if (r.id != "T4") {
      CHECK(r.pass);
      continue;
    }
    CHECK_FALSE(r.pass);
    CHECK(r.lhs != r.rhs);
    found = true;
  }
  CHECK(found);
}

TEST_CASE("json skeleton") {
  SuiteConfig cfg = small_config();
  cfg.suites = {"stirling"};
  const std::string text = degen::report_to_json(degen::run_verification(cfg));
  CHECK(text.find("\"schema\": 1") != std::string::npos);
  CHECK(text.find("\"summary\"") != std::string::npos);
  CHECK(text.find("\"failures\": 0") != std::string::npos);
  CHECK(text.find("\"tool_version\"") != std::string::npos);
  CHECK(text.back() == '\n');
}
