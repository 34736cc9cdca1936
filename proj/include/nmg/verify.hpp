#pragma once

#include <functional>
#include <string>
#include <vector>

#include "nmg/util.hpp"

namespace nmg {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // counts on success, first counterexample on failure
};

struct VerifyOptions {
  double eps = kDefaultEps;
  std::uint64_t seed = kDefaultSeed;
  int group_cap = kDefaultGroupCap;
  int closure_cap = kDefaultClosureCap;
  int random_pairs = 1000;        // per group
  int contractive_samples = 100;  // per homomorphism
  int pinv_samples = 1000;        // per group
};

// The built-in verification corpus.
const std::vector<std::string>& corpus();

// The acceptance criteria, one result per numbered criterion.
std::vector<CheckResult> acceptance_criteria(const VerifyOptions& opts);

// Named invariant suites for the CLI (`verify <name>` / `verify all`).
std::vector<std::string> suite_names();
std::vector<CheckResult> run_suite(const std::string& name, const VerifyOptions& opts);

}  // namespace nmg
