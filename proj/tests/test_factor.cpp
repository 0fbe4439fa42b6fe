#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "salem/factor.hpp"
#include "salem/roots.hpp"
#include "salem/trigpolys.hpp"
#include "test_support.hpp"

using namespace salem;

namespace {

IntPoly product(const std::vector<IntPoly>& fs) {
  IntPoly p{1};
  for (const auto& f : fs) p *= f;
  return p;
}

FactorOptions exact() {
  FactorOptions o;
  o.force_exact = true;
  return o;
}

}  // namespace

TEST_CASE("small irreducible and reducible examples") {
  CHECK(is_irreducible(IntPoly{-2, 0, 1}).verdict == Verdict::irreducible);
  CHECK(is_irreducible(IntPoly{1, -3, 1}).verdict == Verdict::irreducible);
  CHECK(is_irreducible(IntPoly{-1, 1}).verdict == Verdict::irreducible);
  const auto w = is_irreducible(IntPoly{-4, 0, 1});
  CHECK(w.verdict == Verdict::reducible);
  REQUIRE(w.factor);
  CHECK(divides_exactly(*w.factor, IntPoly{-4, 0, 1}));
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(is_irreducible(IntPoly{}), std::invalid_argument);
  CHECK_THROWS_AS(is_irreducible(IntPoly{1}), std::invalid_argument);
  CHECK_THROWS_AS(is_irreducible(IntPoly{1, 0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(is_irreducible(IntPoly{1, 2, 1}), std::invalid_argument);
}

TEST_CASE("x^4 + 1 and x^4 - 10x^2 + 1 need exact factorization") {
  // Both split into linear and quadratic factors modulo every prime.
  for (const IntPoly& p : {IntPoly{1, 0, 0, 0, 1}, IntPoly{1, 0, -10, 0, 1}}) {
    const auto w = is_irreducible(p);
    CHECK(w.verdict == Verdict::irreducible);
    CHECK(w.method == IrreducibilityMethod::exact_factorization);
    CHECK(w.lift_prime > 0);
    CHECK(w.modular_factor_count >= 2);
    CHECK(replay_witness(w, p));
    CHECK(replay_witness(w, p, true));
  }
}

TEST_CASE("filter witness") {
  const IntPoly p{-1, -1, 0, 0, 0, 1};  // x^5 - x - 1
  const auto w = is_irreducible(p);
  CHECK(w.verdict == Verdict::irreducible);
  if (w.method == IrreducibilityMethod::modular_degree_filter) {
    CHECK_FALSE(w.filter.empty());
    for (const auto& pd : w.filter) CHECK(modular_factor_degrees(p, pd.prime) == pd.degrees);
  }
  CHECK(replay_witness(w, p, true));
  // A witness for one polynomial does not replay for another.
  CHECK_FALSE(replay_witness(w, IntPoly{-1, 0, 0, 0, 0, 1}, true));
}

TEST_CASE("forged witnesses are rejected") {
  const IntPoly p = IntPoly{1, 0, 1} * IntPoly{-2, 0, 1};
  auto w = is_irreducible(IntPoly{-1, -1, 0, 0, 0, 1});
  CHECK_FALSE(replay_witness(w, p, true));
  IrreducibilityWitness bad;
  bad.verdict = Verdict::reducible;
  bad.method = IrreducibilityMethod::exact_factorization;
  bad.factor = IntPoly{-3, 1};
  CHECK_FALSE(replay_witness(bad, p));
  bad.factor = IntPoly{1, 0, 1};
  CHECK(replay_witness(bad, p));
}

TEST_CASE("products of irreducible pieces are reducible") {
  const std::vector<IntPoly> pieces = {
      IntPoly{1, 0, 1}, IntPoly{-2, 0, 1}, IntPoly{-1, -1, 1}, IntPoly{-2, 0, 0, 1},
      IntPoly{1, 1, 0, 1}, IntPoly{-3, 1}, IntPoly{5, 1}, IntPoly{1, 0, 0, 0, 1}};
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    for (std::size_t j = i + 1; j < pieces.size(); ++j) {
      const IntPoly p = pieces[i] * pieces[j];
      const auto w = is_irreducible(p);
      CHECK(w.verdict == Verdict::reducible);
      REQUIRE(w.factor);
      CHECK(w.factor->degree() >= 1);
      CHECK(w.factor->degree() < p.degree());
      CHECK(divides_exactly(*w.factor, p));
      CHECK(replay_witness(w, p));
    }
  }
}

TEST_CASE("irreducible_factors recovers the pieces") {
  const std::vector<IntPoly> pieces = {IntPoly{1, 0, 0, 0, 1}, IntPoly{-2, 0, 1}, IntPoly{-3, 1}, IntPoly{1, 1, 0, 1}};
  const IntPoly p = product(pieces);
  auto got = irreducible_factors(p);
  CHECK(got.size() == pieces.size());
  CHECK(product(got) == p);
  for (const auto& f : got) CHECK(is_irreducible(f).verdict == Verdict::irreducible);
}

TEST_CASE("trace polynomials of cyclotomic quotients factor by divisors") {
  // C_n lifts to ∏ Φ_d over d | n, d > 2, each of which has its own trace factor.
  for (int n : {12, 15, 24, 30, 36}) {
    const IntPoly c = ctrace(n);
    int divisors = 0;
    for (int d = 3; d <= n; ++d)
      if (n % d == 0) ++divisors;
    CHECK(static_cast<int>(irreducible_factors(c).size()) == divisors);
  }
}

TEST_CASE("filter and exact factorization agree") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> deg(1, 10);
  int tested = 0;
  while (tested < 200) {
    IntPoly p = testing::random_poly(rng, deg(rng), 6, true);
    if (tested % 4 == 0) p = p * testing::random_poly(rng, deg(rng) % 4 + 1, 4, true);
    if (!is_separable(p)) continue;
    ++tested;
    const auto a = is_irreducible(p);
    const auto b = is_irreducible(p, exact());
    CHECK(a.verdict == b.verdict);
    CHECK(b.method == IrreducibilityMethod::exact_factorization);
    CHECK(replay_witness(a, p, true));
    CHECK(replay_witness(b, p, true));
  }
}

TEST_CASE("subset cap raises InconclusiveError") {
  // Minimal polynomial of sqrt2 + sqrt3 + sqrt5: at least four factors modulo every prime.
  const IntPoly sd{576, 0, -960, 0, 352, 0, -40, 0, 1};
  FactorOptions o = exact();
  const auto w = is_irreducible(sd, o);
  CHECK(w.verdict == Verdict::irreducible);
  CHECK(w.modular_factor_count >= 4);
  CHECK(w.subsets_tried > 1);
  o.max_subsets = 1;
  CHECK_THROWS_AS(is_irreducible(sd, o), InconclusiveError);
}

TEST_CASE("modular helpers") {
  const IntPoly p{1, 0, 1};
  CHECK(is_good_prime(p, 3));
  CHECK_FALSE(is_good_prime(IntPoly{-1, 0, 1} * IntPoly{-4, 1}, 3));  // (x-1)(x+1)(x-4): 4 ≡ 1
  CHECK(modular_factor_degrees(p, 3) == std::vector<int>{2});
  CHECK(modular_factor_degrees(p, 5) == std::vector<int>{1, 1});
  const auto fs = factor_mod_prime(p, 5);
  REQUIRE(fs.size() == 2);
  CHECK(fs[0] == IntPoly{2, 1});  // x + 2
  CHECK(fs[1] == IntPoly{3, 1});  // x + 3
  const auto sums = subset_sums({1, 2});
  CHECK(sums == std::vector<bool>{true, true, true, true});
  CHECK(subset_sums({2, 2}) == std::vector<bool>{true, false, true, false, true});
}

TEST_CASE("factor_mod_prime products match reduction") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 40; ++i) {
    const IntPoly p = testing::random_poly(rng, 2 + i % 9, 50, true);
    for (std::uint64_t q : {3u, 7u, 101u}) {
      if (!is_good_prime(p, q)) continue;
      const auto fs = factor_mod_prime(p, q);
      IntPoly prod{1};
      for (const auto& f : fs) prod *= f;
      bool same = prod.degree() == p.degree();
      for (int k = 0; same && k <= p.degree(); ++k) {
        Integer diff = prod.coeff(k) - p.coeff(k);
        if (diff % static_cast<unsigned long>(q) != 0) same = false;
      }
      CHECK(same);
      std::vector<int> degs;
      for (const auto& f : fs) degs.push_back(f.degree());
      std::sort(degs.begin(), degs.end());
      CHECK(degs == modular_factor_degrees(p, q));
    }
  }
}
