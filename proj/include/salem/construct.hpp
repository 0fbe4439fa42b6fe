#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "salem/certify.hpp"
#include "salem/intpoly.hpp"

namespace salem {

/// The factor that carries the free integer parameter a.
enum class AFactorShape {
  unit_quadratic,     // x^2 - a x + 1
  shifted_quadratic,  // x^2 - a x + (a - 2)
  linear,             // x - a
};

const char* to_string(AFactorShape s);
IntPoly a_factor(AFactorShape s, long a);

/// Root counts in (0,1) that drive the case split, each from the closed form
/// and from a Sturm count. A plan is only issued when both agree.
struct ParityEvidence {
  int r_2_4k = 0;         // roots of t_{2+4k}
  int r_4k = 0;           // roots of t_{4k}
  int cn = 0;             // roots of C_n
  int cn_t_2_4k = 0;      // roots of C_n t_{2+4k}
};

struct ConstructionPlan {
  ConstructionId lemma = ConstructionId::L3_1;
  int n = 0;
  int t = 0;
  int k = 0;
  int l = 0;  // t = 3 + n/2 + 2l
  std::vector<IntPoly> factors;            // fixed factors, before the a-factor
  std::vector<std::string> factor_names;   // e.g. "C_12", "x^2-4", "t_4"
  AFactorShape shape = AFactorShape::unit_quadratic;
  ParityEvidence parity;
};

/// A violated hypothesis of a construction; `condition` names it.
class HypothesisError : public std::invalid_argument {
 public:
  explicit HypothesisError(const std::string& condition)
      : std::invalid_argument(condition), condition_(condition) {}
  const std::string& condition() const { return condition_; }

 private:
  std::string condition_;
};

/// Selects the construction for n ≡ 4 (mod 8), n ≢ 0 (mod 5), odd t >= (n+6)/2.
/// Throws HypothesisError for any other (n, t).
ConstructionPlan dispatch(int n, int t);

/// R = (∏ plan.factors) · (a-factor) - 1, of degree plan.t. Requires a >= 3.
IntPoly build_candidate(const ConstructionPlan& plan, long a);

/// Plan for C_n(x)(x-2)D(x)(x-a) - 1 (n odd) or C_n(x)(x^2-4)D(x)(x-a) - 1
/// (n even). Validates every hypothesis on n, t and D.
ConstructionPlan plan_theorem11(int n, int t, const IntPoly& D);
IntPoly build_theorem11(int n, int t, const IntPoly& D, long a);

struct SearchOptions {
  long a_min = 3;
  long a_max = 200;
  int want = 5;
  int precision_digits = 30;
  unsigned threads = 0;  // 0: hardware concurrency
  FactorOptions factor;
};

struct SearchFailure {
  long a = 0;
  CheckStage stage = CheckStage::monic;
  std::string reason;
};

struct SearchReport {
  int n = 0;
  int t = 0;
  ConstructionPlan plan;
  long a_min = 0;
  long a_max = 0;
  int want = 0;
  std::vector<SalemCertificate> certificates;  // ascending a
  std::vector<SearchFailure> failures;         // ascending a
  int distinct_salem_count = 0;
};

/// dispatch(n, t) followed by search_plan.
SearchReport search(int n, int t, const SearchOptions& opts = {});
/// Sweeps a upward from a_min, certifying build_candidate(plan, a), until
/// `want` certificates are found or a_max is passed. The result depends only
/// on the inputs, never on thread scheduling.
SearchReport search_plan(const ConstructionPlan& plan, const SearchOptions& opts = {});

}  // namespace salem
