#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "salem/factor.hpp"
#include "salem/intpoly.hpp"
#include "salem/roots.hpp"

namespace salem {

/// Which construction produced a trace polynomial.
enum class ConstructionId { L3_1, L3_2, L3_3, L3_4, T1_1_odd, T1_1_even, external };

const char* to_string(ConstructionId c);
/// Accepts the names produced by to_string ("L3.1", ..., "T1.1-odd", "external").
std::optional<ConstructionId> parse_construction(std::string_view s);

/// The checks of certify_trace, in the order they run.
enum class CheckStage { monic, separability, root_pattern, irreducibility, lift, resultant, degree };

const char* to_string(CheckStage s);
std::optional<CheckStage> parse_check_stage(std::string_view s);

/// α = (β + sqrt(β^2 - 4))/2 enclosed in [lo, hi]; `decimal` is the midpoint
/// rounded to `digits` places and lies within 10^-digits of α.
struct AlphaApprox {
  std::string decimal;
  Rational lo;
  Rational hi;
  int digits = 0;
};

struct SalemCertificate {
  int n = 0;
  int t = 0;
  std::optional<long> a;
  ConstructionId construction = ConstructionId::external;
  IntPoly trace_poly;  // T, degree t
  IntPoly min_poly;    // S(x) = x^t T(x + 1/x), degree 2t
  RootPattern root_pattern;
  IsolatingInterval beta_interval;
  AlphaApprox alpha;
  IrreducibilityWitness irreducibility;
  Integer resultant_value;  // Res(x^n - 1, S), ±1
  bool salem_degree_check = false;
};

/// The first failed check of certify_trace with its diagnostic data.
struct Rejection {
  CheckStage stage = CheckStage::monic;
  std::string reason;
  std::optional<RootPattern> pattern;
  std::optional<Integer> resultant;
};

class CertificationError : public std::runtime_error {
 public:
  explicit CertificationError(Rejection r);
  const Rejection& rejection() const { return rejection_; }

 private:
  Rejection rejection_;
};

struct CertifyOptions {
  int precision_digits = 30;
  FactorOptions factor;
};

using CertifyOutcome = std::variant<SalemCertificate, Rejection>;

/// Runs monic -> separability -> root pattern -> irreducibility -> lift ->
/// resultant -> degree (t >= 2) on T and stops at the first failure.
CertifyOutcome try_certify_trace(const IntPoly& T, int n, const CertifyOptions& opts = {});
/// As try_certify_trace but throws CertificationError on rejection.
SalemCertificate certify_trace(const IntPoly& T, int n, const CertifyOptions& opts = {});

/// Res(x^n - 1, S), computed from scratch.
Integer unit_check(const IntPoly& S, int n);

/// Encloses α for the root β > 2 of p isolated by beta_iv, to width
/// <= 10^-digits. Throws std::invalid_argument when beta_iv is not above 2.
AlphaApprox alpha_from_beta(const IsolatingInterval& beta_iv, const IntPoly& p, int digits);

/// Independent replay of a certificate from its stored fields only. Returns
/// the list of failed checks; empty means the certificate holds.
std::vector<std::string> verify_certificate(const SalemCertificate& cert);

/// x rounded to `digits` decimal places, e.g. "2.618".
std::string to_decimal(const Rational& x, int digits);

}  // namespace salem
