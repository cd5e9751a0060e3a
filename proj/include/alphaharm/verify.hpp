#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace alphaharm {

struct VerifyOptions {
  std::string suite = "all";  // all | specfun | kernel | solver | analysis
  std::uint64_t seed = 7;
  // Test hook: implementation-side values are scaled by (1 + perturb) before
  // being compared with their references, so a nonzero value must make the
  // suite fail.
  double perturb = 0.0;
  unsigned threads = 1;
};

enum class Comparison { kAtMost, kAtLeast, kAbove };

struct InvariantResult {
  std::string suite;
  std::string name;
  double measured;
  double tolerance;
  Comparison comparison;
  bool passed;
};

struct VerifySummary {
  VerifyOptions options;
  std::vector<InvariantResult> invariants;

  bool passed() const;
  nlohmann::json to_json() const;
  std::string to_json_text() const;
};

const std::vector<std::string>& verify_suites();

// Throws ArgumentError for an unknown suite name.
VerifySummary run_verify(const VerifyOptions& options);

}  // namespace alphaharm
