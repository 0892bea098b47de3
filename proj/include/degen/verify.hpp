#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "degen/rational.hpp"

namespace degen {

/// Configuration for the verification suites. Invariants: max_n >= 1,
/// truncation >= max_n + 2, at least one lambda sample; violations are
/// reported as usage errors.
struct SuiteConfig {
  std::vector<std::string> suites{"all"};
  int max_n = 8;
  int truncation = 16;
  std::vector<Rational> lambda_samples{Rational(0),      Rational(1),     Rational(-1),
                                       Rational(1, 2),   Rational(-1, 3), Rational(2, 5),
                                       Rational(7, 3)};
  std::uint64_t seed = 12345;
  std::string output_path;    // empty = stdout
  std::string inject_fault;   // registry id whose right side is offset (self-test)
};

struct ReportRecord {
  std::string suite;
  std::string id;
  std::vector<std::pair<std::string, std::string>> params;
  bool pass = false;
  std::string lhs;
  std::string rhs;
};

struct ReportNote {
  std::string id;
  std::string note;
};

struct VerificationReport {
  std::string tool_version;
  SuiteConfig config;
  std::vector<ReportRecord> records;
  std::size_t failures = 0;
  std::vector<ReportNote> notes;
};

extern const char* const kToolVersion;

/// Known suite names: basics, stirling, families, transform, opcalc, all.
bool is_known_suite(const std::string& name);

/// Runs the selected suites over deterministic seeded grids. Throws
/// std::invalid_argument on config violations.
VerificationReport run_verification(const SuiteConfig& config);

/// Deterministic serialization; identical configs give identical bytes.
std::string report_to_json(const VerificationReport& report);

}  // namespace degen
