#include "salem/certify.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "salem/trigpolys.hpp"

namespace salem {

namespace {

constexpr std::pair<ConstructionId, const char*> kConstructionNames[] = {
    {ConstructionId::L3_1, "L3.1"},         {ConstructionId::L3_2, "L3.2"},
    {ConstructionId::L3_3, "L3.3"},         {ConstructionId::L3_4, "L3.4"},
    {ConstructionId::T1_1_odd, "T1.1-odd"}, {ConstructionId::T1_1_even, "T1.1-even"},
    {ConstructionId::external, "external"},
};

constexpr std::pair<CheckStage, const char*> kStageNames[] = {
    {CheckStage::monic, "monic"},
    {CheckStage::separability, "separability"},
    {CheckStage::root_pattern, "root_pattern"},
    {CheckStage::irreducibility, "irreducibility"},
    {CheckStage::lift, "lift"},
    {CheckStage::resultant, "resultant"},
    {CheckStage::degree, "degree"},
};

Rational pow10(int e) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
  return e >= 0 ? Rational(p) : Rational(Integer(1), p);
}

Integer floor_of(const Rational& x) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

Integer ceil_of(const Rational& x) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

// Bounds on sqrt(x), x >= 0, on the grid 1/scale.
Rational sqrt_lower(const Rational& x, const Integer& scale) {
  Integer r;
  const Integer v = floor_of(x * Rational(scale * scale));
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  Rational out(r, scale);
  out.canonicalize();
  return out;
}

Rational sqrt_upper(const Rational& x, const Integer& scale) {
  Integer r;
  const Integer v = ceil_of(x * Rational(scale * scale));
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  if (r * r < v) r += 1;
  Rational out(r, scale);
  out.canonicalize();
  return out;
}

std::string describe(const RootPattern& rp) {
  std::ostringstream os;
  os << "below -2: " << rp.below_minus2 << ", in (-2,2): " << rp.in_minus2_2 << ", at ±2: " << rp.at_endpoints
     << ", above 2: " << rp.above_2;
  return os.str();
}

Integer cauchy_bound(const IntPoly& p) {
  Integer m = 0;
  for (const auto& c : p.coeffs()) m = std::max<Integer>(m, abs(c));
  return m + 1;
}

Rejection reject(CheckStage stage, std::string reason) { return Rejection{stage, std::move(reason), {}, {}}; }

}  // namespace

const char* to_string(ConstructionId c) {
  for (const auto& [id, name] : kConstructionNames) {
    if (id == c) return name;
  }
  return "external";
}

std::optional<ConstructionId> parse_construction(std::string_view s) {
  for (const auto& [id, name] : kConstructionNames) {
    if (s == name) return id;
  }
  return std::nullopt;
}

const char* to_string(CheckStage s) {
  for (const auto& [id, name] : kStageNames) {
    if (id == s) return name;
  }
  return "degree";
}

std::optional<CheckStage> parse_check_stage(std::string_view s) {
  for (const auto& [id, name] : kStageNames) {
    if (s == name) return id;
  }
  return std::nullopt;
}

CertificationError::CertificationError(Rejection r)
    : std::runtime_error(std::string(to_string(r.stage)) + ": " + r.reason), rejection_(std::move(r)) {}

std::string to_decimal(const Rational& x, int digits) {
  const Rational scaled = x * pow10(digits);
  const bool neg = scaled < 0;
  Integer n = floor_of(abs(scaled) + Rational(1, 2));
  std::string s = n.get_str();
  if (digits > 0) {
    if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  }
  if (neg && n != 0) s.insert(0, "-");
  return s;
}

Integer unit_check(const IntPoly& S, int n) { return resultant(IntPoly::x_pow_minus_one(n), S); }

AlphaApprox alpha_from_beta(const IsolatingInterval& beta_iv, const IntPoly& p, int digits) {
  if (digits < 1) throw std::invalid_argument("alpha_from_beta: precision must be positive");
  if (beta_iv.lo < 2) throw std::invalid_argument("alpha_from_beta: beta interval is not above 2");
  const Rational target = pow10(-digits);
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits + 6));
  Rational w = target / 100;
  IsolatingInterval iv = beta_iv;
  while (true) {
    iv = refine(std::move(iv), p, w);
    const Rational blo = iv.exact_root ? *iv.exact_root : iv.lo;
    const Rational& bhi = iv.hi;
    Rational alo = (blo + sqrt_lower(blo * blo - 4, scale)) / 2;
    Rational ahi = (bhi + sqrt_upper(bhi * bhi - 4, scale)) / 2;
    if (ahi - alo <= target) {
      AlphaApprox out;
      out.decimal = to_decimal((alo + ahi) / 2, digits);
      out.lo = std::move(alo);
      out.hi = std::move(ahi);
      out.digits = digits;
      return out;
    }
    w /= 100;
    scale *= 100;
  }
}

CertifyOutcome try_certify_trace(const IntPoly& T, int n, const CertifyOptions& opts) {
  if (n < 1) throw std::invalid_argument("certify_trace: n must be positive");
  const int t = T.degree();
  if (!T.is_monic()) return reject(CheckStage::monic, "trace polynomial is not monic");
  if (!is_separable(T)) return reject(CheckStage::separability, "trace polynomial has a repeated root");

  const RootPattern rp = root_pattern(T);
  if (rp.above_2 != 1 || rp.in_minus2_2 != t - 1 || rp.at_endpoints != 0) {
    Rejection r = reject(CheckStage::root_pattern, "need 1 root above 2 and " + std::to_string(t - 1) +
                                                       " in (-2,2); found " + describe(rp));
    r.pattern = rp;
    return r;
  }

  IrreducibilityWitness witness;
  try {
    witness = is_irreducible(T, opts.factor);
  } catch (const InconclusiveError& e) {
    return reject(CheckStage::irreducibility, std::string("inconclusive: ") + e.what());
  }
  if (witness.verdict != Verdict::irreducible) {
    return reject(CheckStage::irreducibility, "trace polynomial has the factor " + to_pretty(*witness.factor));
  }

  IntPoly S = compose_trace_lift(T, t);
  if (S.degree() != 2 * t || !S.is_monic() || !is_reciprocal(S)) {
    return reject(CheckStage::lift, "lifted polynomial is not a monic reciprocal polynomial of degree 2t");
  }

  Integer res = unit_check(S, n);
  if (abs(res) != 1) {
    Rejection r = reject(CheckStage::resultant, "|Res(x^" + std::to_string(n) + " - 1, S)| = " +
                                                    Integer(abs(res)).get_str() + " != 1");
    r.resultant = res;
    return r;
  }
  if (t < 2) {
    return reject(CheckStage::degree,
                  "trace polynomial has degree " + std::to_string(t) + " < 2; a Salem number needs 2t >= 4");
  }

  auto above = isolate_roots(T, Rational(2), Rational(cauchy_bound(T)));
  if (above.size() != 1) throw std::logic_error("certify_trace: root pattern and isolation disagree");

  SalemCertificate cert;
  cert.n = n;
  cert.t = t;
  cert.trace_poly = T;
  cert.min_poly = std::move(S);
  cert.root_pattern = rp;
  cert.alpha = alpha_from_beta(above.front(), T, opts.precision_digits);
  cert.beta_interval = refine(std::move(above.front()), T, pow10(-opts.precision_digits));
  cert.irreducibility = std::move(witness);
  cert.resultant_value = std::move(res);
  cert.salem_degree_check = 2 * t >= 4;
  return cert;
}

SalemCertificate certify_trace(const IntPoly& T, int n, const CertifyOptions& opts) {
  auto out = try_certify_trace(T, n, opts);
  if (auto* r = std::get_if<Rejection>(&out)) throw CertificationError(std::move(*r));
  return std::get<SalemCertificate>(std::move(out));
}

std::vector<std::string> verify_certificate(const SalemCertificate& c) {
  std::vector<std::string> bad;
  const IntPoly& T = c.trace_poly;
  const IntPoly& S = c.min_poly;
  if (c.n < 1) bad.emplace_back("n must be positive");
  if (T.degree() != c.t || c.t < 2) bad.emplace_back("trace polynomial degree does not match t >= 2");
  if (!T.is_monic()) bad.emplace_back("trace polynomial is not monic");
  if (S.degree() != 2 * c.t || !S.is_monic() || S.coeff(0) != 1 || !is_reciprocal(S)) {
    bad.emplace_back("minimal polynomial is not monic reciprocal of degree 2t");
    return bad;
  }
  if (!bad.empty()) return bad;
  // Inverse route: the stored S must trace back to the stored T.
  if (trace_extract(S) != T) bad.emplace_back("trace of minimal polynomial differs from trace polynomial");

  const Integer res = unit_check(S, c.n);
  if (res != c.resultant_value) bad.emplace_back("stored resultant differs from recomputed value");
  if (abs(res) != 1) bad.emplace_back("resultant is not a unit");

  if (!is_separable(T)) {
    bad.emplace_back("trace polynomial is not separable");
    return bad;
  }
  const RootPattern rp = root_pattern(T);
  if (!(rp == c.root_pattern)) bad.emplace_back("stored root pattern differs from recomputed pattern");
  if (rp.above_2 != 1 || rp.in_minus2_2 != c.t - 1 || rp.at_endpoints != 0) {
    bad.emplace_back("root pattern is not that of a Salem trace polynomial");
  }

  const auto& b = c.beta_interval;
  if (!(b.lo < b.hi) || b.lo < 2 || sturm_count(T, b.lo, b.hi) != 1) {
    bad.emplace_back("beta interval does not isolate the root above 2");
  }

  if (c.irreducibility.verdict != Verdict::irreducible || !replay_witness(c.irreducibility, T, true)) {
    bad.emplace_back("irreducibility witness does not replay");
  }

  const auto& al = c.alpha;
  const Rational one(1);
  if (!(al.lo > one) || al.hi < al.lo) {
    bad.emplace_back("alpha interval is not above 1");
  } else {
    // S has a single root above 1; it must lie in (lo, hi].
    if (sturm_count(c.min_poly, al.lo, al.hi) != 1 || sturm_count(c.min_poly, one, al.lo) != 0) {
      bad.emplace_back("alpha interval does not enclose alpha");
    }
    // x + 1/x maps the alpha interval onto a range meeting the beta interval.
    if (al.lo + one / al.lo > b.hi || al.hi + one / al.hi < b.lo) bad.emplace_back("alpha interval inconsistent with beta");
    if (al.hi - al.lo > pow10(-al.digits)) bad.emplace_back("alpha interval wider than its precision");
    try {
      const Rational dec = parse_rational(al.decimal);
      const Rational tol = pow10(-al.digits);
      if (abs(dec - al.lo) > tol || abs(dec - al.hi) > tol) bad.emplace_back("alpha decimal outside its error bound");
    } catch (const std::invalid_argument&) {
      bad.emplace_back("alpha decimal is malformed");
    }
  }
  return bad;
}

}  // namespace salem
