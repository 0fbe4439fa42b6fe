#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace salem {

struct SelftestConfig {
  int identity_k = 64;     // C_{4k} = t_k C_{2k} for k <= identity_k, C_{8k} = t_{2k} C_{4k} for k <= identity_k/2
  int gcd_range = 48;      // gcd(C_n, C_m) law for 3 <= n, m <= gcd_range
  int coprime_range = 40;  // gcd(t_k, C_n) = 1 for k, n <= coprime_range, n ≢ 0 mod 4
  int lemma_n = 60;        // gcd(t_{2k}, C_n) = 1 for n ≡ 4 mod 8, n <= lemma_n
  int lemma_k = 30;        //   and k <= lemma_k
  int rk_max = 200;        // closed form vs Sturm for 1 <= k <= rk_max
  int parity_max = 100;    // odd/even function laws up to this index
  int random_trials = 50;  // seeded trace-lift round trips
  std::uint64_t seed = 1;
  bool corrupt_ctrace = false;  // fault injection: perturbs C_24
};

struct SuiteResult {
  std::string name;
  int passed = 0;
  int failed = 0;
  std::vector<std::string> failures;  // first few, in order
};

struct SelftestSummary {
  std::vector<SuiteResult> suites;
  int passed = 0;
  int failed = 0;
  bool ok() const { return failed == 0; }
};

SelftestSummary run_selftest(const SelftestConfig& cfg = {});

}  // namespace salem
