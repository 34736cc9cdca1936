// Acceptance suite: runs every criterion at its stated tolerance and prints
// one pass/fail line per criterion. Exits nonzero when any criterion fails.

#include <chrono>
#include <cstdio>

#include "nmg/verify.hpp"

int main() {
  nmg::VerifyOptions opts;  // pinned defaults: eps 1e-9, seed 0xBEA71
  bool all_pass = true;
  auto t0 = std::chrono::steady_clock::now();
  auto results = nmg::acceptance_criteria(opts);
  auto t1 = std::chrono::steady_clock::now();
  int idx = 0, passed = 0;
  for (const auto& r : results) {
    ++idx;
    std::printf("[%s] criterion %d: %s — %s\n", r.pass ? "PASS" : "FAIL", idx, r.name.c_str(),
                r.detail.c_str());
    if (r.pass) ++passed;
    else all_pass = false;
  }
  double secs = std::chrono::duration<double>(t1 - t0).count();
  std::printf("%d/%zu criteria passed in %.1fs\n", passed, results.size(), secs);
  if (all_pass) std::printf("acceptance: PASS\n");
  else std::printf("acceptance: FAIL\n");
  return all_pass ? 0 : 1;
}
