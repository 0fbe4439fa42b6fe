#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "salem/construct.hpp"
#include "salem/report.hpp"
#include "salem/roots.hpp"
#include "salem/trigpolys.hpp"

using namespace salem;

namespace {

std::string hypothesis_of(int n, int t) {
  try {
    dispatch(n, t);
  } catch (const HypothesisError& e) {
    return e.condition();
  }
  return "";
}

bool has_substr(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("dispatch table") {
  const auto p1 = dispatch(12, 9);
  CHECK(p1.lemma == ConstructionId::L3_1);
  CHECK(p1.k == 0);
  CHECK(p1.l == 0);
  const auto p2 = dispatch(12, 11);
  CHECK(p2.lemma == ConstructionId::L3_2);
  CHECK(p2.k == 0);
  CHECK(p2.parity.cn == 0);
  CHECK(p2.parity.r_2_4k == 0);
  const auto p3 = dispatch(12, 15);
  CHECK(p3.lemma == ConstructionId::L3_3);
  CHECK(p3.k == 1);
  CHECK(p3.parity.r_2_4k == 1);
  const auto p4 = dispatch(44, 35);
  CHECK(p4.lemma == ConstructionId::L3_4);
  CHECK(p4.k == 2);
  CHECK(p4.parity.cn == 3);
  CHECK(p4.parity.r_2_4k == 2);
  CHECK(p4.parity.r_4k == 1);
}

TEST_CASE("hypothesis violations are named") {
  CHECK(has_substr(hypothesis_of(20, 15), "n ≡ 0 mod 5"));
  CHECK(has_substr(hypothesis_of(12, 10), "t must be odd"));
  CHECK(has_substr(hypothesis_of(8, 9), "n ≡ 4 mod 8"));
  CHECK(has_substr(hypothesis_of(12, 7), "t must be at least"));
  CHECK(hypothesis_of(12, 9).empty());
}

TEST_CASE("build_candidate examples") {
  const IntPoly c12 = ctrace(12);
  const IntPoly x2m4{-4, 0, 1};
  CHECK(build_candidate(dispatch(12, 9), 5) == c12 * x2m4 * IntPoly{1, -5, 1} - IntPoly{1});
  CHECK(build_candidate(dispatch(12, 11), 5) == c12 * x2m4 * IntPoly{-2, 0, 1} * IntPoly{3, -5, 1} - IntPoly{1});
  CHECK(build_candidate(dispatch(12, 9), 5).coeff(0) == -1);
  CHECK_THROWS_AS(build_candidate(dispatch(12, 9), 2), std::invalid_argument);
}

TEST_CASE("a_factor shapes") {
  CHECK(a_factor(AFactorShape::unit_quadratic, 7) == IntPoly{1, -7, 1});
  CHECK(a_factor(AFactorShape::shifted_quadratic, 7) == IntPoly{5, -7, 1});
  CHECK(a_factor(AFactorShape::linear, 7) == IntPoly{-7, 1});
}

TEST_CASE("every admissible (n, t) gets a plan with the right degree") {
  int plans = 0;
  for (int n = 4; n <= 100; n += 8) {
    if (n % 5 == 0) continue;
    for (int t = (n + 6) / 2; t <= (n + 6) / 2 + 24; ++t) {
      if (t % 2 == 0) {
        CHECK_THROWS_AS(dispatch(n, t), HypothesisError);
        continue;
      }
      const auto plan = dispatch(n, t);
      ++plans;
      CHECK(plan.t == t);
      CHECK(2 * plan.l == t - 3 - n / 2);
      const IntPoly R = build_candidate(plan, 3 + t);
      CHECK(R.degree() == t);
      CHECK(R.is_monic());
      // R(2) = -1 because the x^2 - 4 factor vanishes there.
      CHECK(eval(R, Integer(2)) == -1);
      CHECK(eval(R, Integer(-2)) == -1);
    }
  }
  CHECK(plans > 50);
}

TEST_CASE("fixed factors are pairwise coprime") {
  for (auto [n, t] : {std::pair{12, 9}, {12, 11}, {12, 15}, {44, 35}, {28, 21}, {36, 27}, {52, 41}}) {
    const auto plan = dispatch(n, t);
    for (std::size_t i = 0; i < plan.factors.size(); ++i)
      for (std::size_t j = i + 1; j < plan.factors.size(); ++j)
        CHECK(gcd_over_rationals(plan.factors[i], plan.factors[j]) == IntPoly{1});
  }
}

TEST_CASE("R is -1 at every 2cos(2πj/n)") {
  // C_n vanishes there, so R(ζ + 1/ζ) = -1 for every n-th root of unity ζ ≠ ±1.
  const auto plan = dispatch(44, 35);
  const IntPoly R = build_candidate(plan, 11);
  const IntPoly shifted = R + IntPoly{1};
  CHECK(divides_exactly(ctrace(44), shifted));
}

TEST_CASE("C_n D (x - a) family construction") {
  CHECK(build_theorem11(2, 3, IntPoly{1}, 6) == IntPoly{23, -4, -6, 1});
  CHECK(build_theorem11(1, 2, IntPoly{1}, 5) == IntPoly{9, -7, 1});
  const auto odd = plan_theorem11(1, 2, IntPoly{1});
  CHECK(odd.lemma == ConstructionId::T1_1_odd);
  const auto even = plan_theorem11(2, 3, IntPoly{1});
  CHECK(even.lemma == ConstructionId::T1_1_even);
  CHECK_THROWS_AS(plan_theorem11(2, 5, IntPoly{-9, 0, 1}), HypothesisError);
  CHECK_THROWS_AS(plan_theorem11(2, 5, IntPoly{-4, 0, 1}), HypothesisError);
  CHECK_NOTHROW(plan_theorem11(2, 5, IntPoly{-1, 0, 1}));
  CHECK_THROWS_AS(plan_theorem11(2, 5, IntPoly{1}), HypothesisError);
  CHECK_THROWS_AS(plan_theorem11(2, 4, IntPoly{0, 1}), HypothesisError);
  CHECK_THROWS_AS(plan_theorem11(7, 6, IntPoly{1, 0, 1}), HypothesisError);
}

TEST_CASE("search (12, 9)") {
  SearchOptions o;
  o.a_max = 200;
  o.want = 5;
  const auto r = search(12, 9, o);
  REQUIRE(r.certificates.size() == 5);
  long prev = 2;
  for (const auto& c : r.certificates) {
    REQUIRE(c.a);
    CHECK(*c.a > prev);
    prev = *c.a;
    CHECK(c.construction == ConstructionId::L3_1);
    CHECK(verify_certificate(c).empty());
    // β lies in (a - 1, a).
    CHECK(c.beta_interval.lo >= *c.a - 1);
    CHECK(c.beta_interval.hi <= *c.a);
  }
  CHECK(*r.certificates.front().a == 3);
  CHECK(r.distinct_salem_count == 5);
}

TEST_CASE("search is deterministic across thread counts") {
  SearchOptions o;
  o.a_max = 40;
  o.want = 4;
  o.threads = 1;
  const auto a = search(12, 15, o);
  o.threads = 3;
  const auto b = search(12, 15, o);
  CHECK(to_json(a) == to_json(b));
  CHECK(to_csv(a) == to_csv(b));
}

TEST_CASE("empty search explains every failure") {
  SearchOptions o;
  o.a_min = 3;
  o.a_max = 10;
  const auto r = search(12, 15, o);
  CHECK(r.certificates.empty());
  CHECK(r.failures.size() == 8);
  for (const auto& f : r.failures) CHECK_FALSE(f.reason.empty());
  const std::string csv = to_csv(r);
  CHECK(csv.rfind("a,verdict,check,detail\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 9);
}

TEST_CASE("distinct count grows with want") {
  int last = 0;
  for (int want : {1, 3, 6}) {
    SearchOptions o;
    o.want = want;
    const auto r = search(12, 9, o);
    CHECK(r.distinct_salem_count == want);
    CHECK(r.distinct_salem_count > last);
    last = r.distinct_salem_count;
  }
}

TEST_CASE("report JSON carries the plan") {
  SearchOptions o;
  o.want = 1;
  const auto r = search(12, 9, o);
  const json j = to_json(r);
  CHECK(j.at("plan").at("lemma") == "L3.1");
  const auto certs = certificates_from_json(j);
  REQUIRE(certs.size() == 1);
  CHECK(verify_certificate(certs[0]).empty());
}
