#include "salem/selftest.hpp"

#include <functional>
#include <numeric>
#include <random>

#include "salem/intpoly.hpp"
#include "salem/roots.hpp"
#include "salem/trigpolys.hpp"

namespace salem {

namespace {

constexpr std::size_t kMaxRecordedFailures = 10;

class Suite {
 public:
  explicit Suite(std::string name) { r_.name = std::move(name); }

  void check(bool ok, const std::function<std::string()>& what) {
    if (ok) {
      ++r_.passed;
      return;
    }
    ++r_.failed;
    if (r_.failures.size() < kMaxRecordedFailures) r_.failures.push_back(what());
  }

  SuiteResult done() { return std::move(r_); }

 private:
  SuiteResult r_;
};

std::string idx(const char* name, int i) { return std::string(name) + "_" + std::to_string(i); }

}  // namespace

SelftestSummary run_selftest(const SelftestConfig& cfg) {
  std::function<IntPoly(int)> C = [](int n) { return ctrace(n); };
  if (cfg.corrupt_ctrace) {
    C = [](int n) {
      IntPoly p = ctrace(n);
      return n == 24 ? p + IntPoly{1} : p;
    };
  }
  SelftestSummary sum;

  {
    Suite s("C_{4k} = t_k C_{2k}");
    for (int k = 1; k <= cfg.identity_k; ++k) {
      s.check(C(4 * k) == cheb(k) * C(2 * k), [&] { return idx("C", 4 * k) + " = " + idx("t", k) + " " + idx("C", 2 * k); });
    }
    for (int k = 1; k <= cfg.identity_k / 2; ++k) {
      s.check(C(8 * k) == cheb(2 * k) * C(4 * k),
              [&] { return idx("C", 8 * k) + " = " + idx("t", 2 * k) + " " + idx("C", 4 * k); });
    }
    sum.suites.push_back(s.done());
  }

  {
    Suite s("gcd(C_n, C_m) = 1 iff gcd(n, m) in {1, 2}");
    std::vector<IntPoly> cs(static_cast<std::size_t>(cfg.gcd_range) + 1);
    for (int n = 3; n <= cfg.gcd_range; ++n) cs[static_cast<std::size_t>(n)] = C(n);
    for (int n = 3; n <= cfg.gcd_range; ++n) {
      for (int m = n; m <= cfg.gcd_range; ++m) {
        const bool coprime = gcd_over_rationals(cs[static_cast<std::size_t>(n)], cs[static_cast<std::size_t>(m)]).degree() == 0;
        const bool expect = std::gcd(n, m) <= 2;
        s.check(coprime == expect, [&] { return "gcd(" + idx("C", n) + ", " + idx("C", m) + ")"; });
      }
    }
    sum.suites.push_back(s.done());
  }

  {
    Suite s("gcd(t_k, C_n) = 1 for n ≢ 0 mod 4");
    for (int n = 1; n <= cfg.coprime_range; ++n) {
      if (n % 4 == 0) continue;
      const IntPoly cn = C(n);
      for (int k = 1; k <= cfg.coprime_range; ++k) {
        s.check(gcd_over_rationals(cheb(k), cn).degree() == 0,
                [&] { return "gcd(" + idx("t", k) + ", " + idx("C", n) + ")"; });
      }
    }
    sum.suites.push_back(s.done());
  }

  {
    Suite s("gcd(t_{2k}, C_n) = 1 for n ≡ 4 mod 8");
    for (int n = 4; n <= cfg.lemma_n; n += 8) {
      const IntPoly cn = C(n);
      for (int k = 1; k <= cfg.lemma_k; ++k) {
        s.check(gcd_over_rationals(cheb(2 * k), cn).degree() == 0,
                [&] { return "gcd(" + idx("t", 2 * k) + ", " + idx("C", n) + ")"; });
      }
    }
    sum.suites.push_back(s.done());
  }

  {
    Suite s("r_k closed form vs Sturm count");
    const Rational zero(0), one(1);
    for (int k = 1; k <= cfg.rk_max; ++k) {
      const int sturm = count_roots_open(cheb(k), zero, one);
      s.check(rk_formula(k) == sturm, [&] { return "r_" + std::to_string(k); });
    }
    for (int k = 1; 4 * k <= cfg.rk_max; ++k) {
      s.check((rk_formula(4 * k) % 2 == 0) == (k % 3 == 0), [&] { return "parity of r_" + std::to_string(4 * k); });
    }
    for (int k = 0; 2 + 4 * k <= cfg.rk_max; ++k) {
      s.check((rk_formula(2 + 4 * k) % 2 == 1) == (k % 3 == 1),
              [&] { return "parity of r_" + std::to_string(2 + 4 * k); });
    }
    sum.suites.push_back(s.done());
  }

  {
    Suite s("odd/even function laws");
    for (int k = 1; 2 * k <= cfg.parity_max; ++k) {
      const IntPoly odd = cheb(2 * k - 1);
      const IntPoly even = cheb(2 * k);
      s.check(reflect(odd) == -odd, [&] { return idx("t", 2 * k - 1) + " odd"; });
      s.check(reflect(even) == even, [&] { return idx("t", 2 * k) + " even"; });
    }
    const Rational m2(-2), zero(0);
    for (int n = 4; n <= cfg.parity_max; n += 4) {
      const IntPoly cn = C(n);
      s.check(reflect(cn) == -cn, [&] { return idx("C", n) + " odd"; });
      s.check(cn.coeff(0) == 0, [&] { return idx("C", n) + "(0) = 0"; });
      s.check(count_roots_open(cn, m2, zero) == n / 4 - 1, [&] { return idx("C", n) + " roots in (-2,0)"; });
    }
    sum.suites.push_back(s.done());
  }

  {
    Suite s("trace lift round trip (seeded)");
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<int> deg(1, 10);
    std::uniform_int_distribution<long> coef(-20, 20);
    for (int i = 0; i < cfg.random_trials; ++i) {
      const int t = deg(rng);
      std::vector<Integer> c(static_cast<std::size_t>(t) + 1);
      for (int j = 0; j < t; ++j) c[static_cast<std::size_t>(j)] = coef(rng);
      c.back() = 1;
      const IntPoly T(std::move(c));
      const IntPoly S = compose_trace_lift(T, t);
      s.check(is_reciprocal(S) && S.degree() == 2 * t && trace_extract(S) == T,
              [&] { return "round trip of " + to_string(T); });
    }
    sum.suites.push_back(s.done());
  }

  for (const auto& r : sum.suites) {
    sum.passed += r.passed;
    sum.failed += r.failed;
  }
  return sum;
}

}  // namespace salem
