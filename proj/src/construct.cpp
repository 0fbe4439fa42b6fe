#include "salem/construct.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <thread>

#include "salem/roots.hpp"
#include "salem/trigpolys.hpp"

namespace salem {

namespace {

const IntPoly kXSquaredMinus4{-4, 0, 1};
const IntPoly kXMinus2{-2, 1};

int unit_interval_count(const IntPoly& p) { return count_roots_open(p, Rational(0), Rational(1)); }

// r_k from the closed form, confirmed by a Sturm count.
int checked_rk(int k) {
  const int formula = rk_formula(k);
  const int sturm = unit_interval_count(cheb(k));
  if (formula != sturm) {
    throw std::logic_error("r_" + std::to_string(k) + ": closed form gives " + std::to_string(formula) +
                           " but Sturm count gives " + std::to_string(sturm));
  }
  return formula;
}

IntPoly product(const std::vector<IntPoly>& fs) {
  IntPoly p{1};
  for (const auto& f : fs) p *= f;
  return p;
}

int factor_degree(const ConstructionPlan& plan) {
  int d = 0;
  for (const auto& f : plan.factors) d += f.degree();
  return d + (plan.shape == AFactorShape::linear ? 1 : 2);
}

}  // namespace

const char* to_string(AFactorShape s) {
  switch (s) {
    case AFactorShape::unit_quadratic: return "x^2-ax+1";
    case AFactorShape::shifted_quadratic: return "x^2-ax+(a-2)";
    case AFactorShape::linear: return "x-a";
  }
  return "";
}

IntPoly a_factor(AFactorShape s, long a) {
  switch (s) {
    case AFactorShape::unit_quadratic: return IntPoly{1, -a, 1};
    case AFactorShape::shifted_quadratic: return IntPoly{a - 2, -a, 1};
    case AFactorShape::linear: return IntPoly{-a, 1};
  }
  throw std::logic_error("unknown a-factor shape");
}

ConstructionPlan dispatch(int n, int t) {
  if (n < 1) throw HypothesisError("n must be positive");
  if (n % 8 != 4) throw HypothesisError("n ≡ 4 mod 8 required (n mod 8 = " + std::to_string(n % 8) + ")");
  if (n % 5 == 0) throw HypothesisError("n ≡ 0 mod 5 is excluded");
  if (t % 2 == 0) throw HypothesisError("t must be odd");
  if (2 * t < n + 6) throw HypothesisError("t must be at least (n+6)/2 = " + std::to_string((n + 6) / 2));

  ConstructionPlan plan;
  plan.n = n;
  plan.t = t;
  plan.l = (t - 3 - n / 2) / 2;
  plan.k = plan.l % 2 == 0 ? plan.l / 2 : (plan.l - 1) / 2;
  const int k = plan.k;

  const IntPoly cn = ctrace(n);
  plan.parity.r_2_4k = checked_rk(2 + 4 * k);
  plan.parity.r_4k = checked_rk(4 * k);
  plan.parity.cn = cn_roots_in_unit_interval(n);
  plan.parity.cn_t_2_4k = unit_interval_count(cn * cheb(2 + 4 * k));

  const std::string cn_name = "C_" + std::to_string(n);
  plan.factors = {cn, kXSquaredMinus4};
  plan.factor_names = {cn_name, "x^2-4"};
  auto add = [&plan](IntPoly f, std::string name) {
    plan.factors.push_back(std::move(f));
    plan.factor_names.push_back(std::move(name));
  };

  if (plan.l % 2 == 0) {
    plan.lemma = ConstructionId::L3_1;
    plan.shape = AFactorShape::unit_quadratic;
    add(cheb(4 * k), "t_" + std::to_string(4 * k));
  } else if (plan.parity.cn_t_2_4k % 2 == 0) {
    plan.lemma = ConstructionId::L3_2;
    plan.shape = AFactorShape::shifted_quadratic;
    add(cheb(2 + 4 * k), "t_" + std::to_string(2 + 4 * k));
  } else {
    const bool r24_odd = plan.parity.r_2_4k % 2 == 1;
    const bool r4_odd = plan.parity.r_4k % 2 == 1;
    plan.shape = AFactorShape::shifted_quadratic;
    if (r24_odd || !r4_odd) {
      plan.lemma = ConstructionId::L3_3;
      add(ctrace(5), "C_5(x)");
    } else {
      plan.lemma = ConstructionId::L3_4;
      add(reflect(ctrace(5)), "C_5(-x)");
    }
    add(cheb(4 * k), "t_" + std::to_string(4 * k));
  }
  if (factor_degree(plan) != t) throw std::logic_error("dispatch: factor degrees do not add up to t");
  return plan;
}

IntPoly build_candidate(const ConstructionPlan& plan, long a) {
  if (a < 3) throw HypothesisError("a must be at least 3");
  IntPoly R = product(plan.factors) * a_factor(plan.shape, a) - IntPoly{1};
  if (R.degree() != plan.t) throw std::logic_error("build_candidate: degree differs from t");
  return R;
}

ConstructionPlan plan_theorem11(int n, int t, const IntPoly& D) {
  if (n < 1) throw HypothesisError("n must be positive");
  ConstructionPlan plan;
  plan.n = n;
  plan.t = t;
  plan.shape = AFactorShape::linear;
  int d_degree;
  if (n % 2 == 1) {
    if (2 * t < n + 3) throw HypothesisError("t must be at least (n+3)/2 = " + std::to_string((n + 3) / 2));
    d_degree = t - (n + 3) / 2;
    plan.lemma = ConstructionId::T1_1_odd;
  } else {
    if (t % 2 == 0) throw HypothesisError("t must be odd");
    if (2 * t < n + 4) throw HypothesisError("t must be at least (n+4)/2 = " + std::to_string((n + 4) / 2));
    d_degree = t - (n + 4) / 2;
    plan.lemma = ConstructionId::T1_1_even;
  }
  if (D.is_zero() || !D.is_monic()) throw HypothesisError("D must be monic");
  if (D.degree() != d_degree) {
    throw HypothesisError("D must have degree " + std::to_string(d_degree) + " (got " + std::to_string(D.degree()) + ")");
  }
  const IntPoly cn = ctrace(n);
  if (D.degree() >= 1) {
    if (!is_separable(D)) throw HypothesisError("roots of D must be distinct");
    if (count_roots_open(D, Rational(-2), Rational(2)) != D.degree()) {
      throw HypothesisError("roots of D must lie in (-2,2)");
    }
    if (gcd_over_rationals(D, cn).degree() != 0) throw HypothesisError("D must share no root with C_n");
  }
  plan.factors = {cn, n % 2 == 1 ? kXMinus2 : kXSquaredMinus4, D};
  plan.factor_names = {"C_" + std::to_string(n), n % 2 == 1 ? "x-2" : "x^2-4", "D"};
  plan.parity.cn = n >= 3 ? cn_roots_in_unit_interval(n) : 0;
  return plan;
}

IntPoly build_theorem11(int n, int t, const IntPoly& D, long a) { return build_candidate(plan_theorem11(n, t, D), a); }

SearchReport search(int n, int t, const SearchOptions& opts) { return search_plan(dispatch(n, t), opts); }

SearchReport search_plan(const ConstructionPlan& plan, const SearchOptions& opts) {
  if (opts.a_min < 3) throw HypothesisError("a must be at least 3");
  SearchReport rep;
  rep.n = plan.n;
  rep.t = plan.t;
  rep.plan = plan;
  rep.a_min = opts.a_min;
  rep.a_max = opts.a_max;
  rep.want = opts.want;

  const CertifyOptions copts{opts.precision_digits, opts.factor};
  auto attempt = [&plan, &copts](long a) {
    CertifyOutcome out = try_certify_trace(build_candidate(plan, a), plan.n, copts);
    if (auto* c = std::get_if<SalemCertificate>(&out)) {
      c->a = a;
      c->construction = plan.lemma;
    }
    return out;
  };
  const unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());

  long a = opts.a_min;
  while (a <= opts.a_max && static_cast<int>(rep.certificates.size()) < opts.want) {
    const long last = std::min<long>(opts.a_max, a + static_cast<long>(threads) - 1);
    std::vector<CertifyOutcome> batch;
    if (threads == 1) {
      batch.push_back(attempt(a));
    } else {
      std::vector<std::future<CertifyOutcome>> jobs;
      for (long b = a; b <= last; ++b) jobs.push_back(std::async(std::launch::async, attempt, b));
      for (auto& j : jobs) batch.push_back(j.get());
    }
    for (std::size_t i = 0; i < batch.size(); ++i) {
      if (static_cast<int>(rep.certificates.size()) >= opts.want) break;
      const long ai = a + static_cast<long>(i);
      if (auto* c = std::get_if<SalemCertificate>(&batch[i])) {
        rep.certificates.push_back(std::move(*c));
      } else {
        const auto& r = std::get<Rejection>(batch[i]);
        rep.failures.push_back({ai, r.stage, r.reason});
      }
    }
    a += static_cast<long>(batch.size());
  }

  std::set<std::string> distinct;
  for (const auto& c : rep.certificates) distinct.insert(to_string(c.min_poly));
  rep.distinct_salem_count = static_cast<int>(distinct.size());
  return rep;
}

}  // namespace salem
