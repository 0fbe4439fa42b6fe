#include "salem/intpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace salem {

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(const Integer& c, int degree) {
  if (degree < 0) throw std::invalid_argument("monomial: negative degree");
  std::vector<Integer> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::x_pow_minus_one(int n) {
  if (n < 1) throw std::invalid_argument("x^n - 1: n must be positive");
  std::vector<Integer> v(static_cast<std::size_t>(n) + 1);
  v.front() = -1;
  v.back() = 1;
  return IntPoly(std::move(v));
}

Integer IntPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Integer> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), coeffs_[i].get_mpz_t(), rhs.coeffs_[j].get_mpz_t());
    }
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const Integer& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

IntPoly operator+(IntPoly p, const IntPoly& q) { return p += q; }
IntPoly operator-(IntPoly p, const IntPoly& q) { return p -= q; }
IntPoly operator-(const IntPoly& p) { return IntPoly{} - p; }
IntPoly operator*(const IntPoly& p, const IntPoly& q) {
  IntPoly r = p;
  return r *= q;
}
IntPoly operator*(IntPoly p, const Integer& c) { return p *= c; }

IntPoly add(const IntPoly& p, const IntPoly& q) { return p + q; }
IntPoly mul(const IntPoly& p, const IntPoly& q) { return p * q; }

Integer eval(const IntPoly& p, const Integer& x) {
  Integer acc = 0;
  for (int i = p.degree(); i >= 0; --i) acc = acc * x + p.coeffs()[static_cast<std::size_t>(i)];
  return acc;
}

Rational eval_rational(const IntPoly& p, const Rational& x) {
  Rational acc = 0;
  for (int i = p.degree(); i >= 0; --i) {
    acc = acc * x + Rational(p.coeffs()[static_cast<std::size_t>(i)]);
  }
  acc.canonicalize();
  return acc;
}

int sign_at(const IntPoly& p, const Rational& x) {
  // b^d p(a/b) evaluated by homogenized Horner; same sign since b > 0.
  const int d = p.degree();
  if (d < 0) return 0;
  const Integer& a = x.get_num();
  const Integer& b = x.get_den();
  Integer acc = p.leading();
  Integer bpow = 1;
  for (int i = d - 1; i >= 0; --i) {
    bpow *= b;
    acc = acc * a + p.coeffs()[static_cast<std::size_t>(i)] * bpow;
  }
  return sgn(acc);
}

IntPoly derivative(const IntPoly& p) {
  if (p.degree() < 1) return {};
  std::vector<Integer> v(static_cast<std::size_t>(p.degree()));
  for (int i = 1; i <= p.degree(); ++i) v[static_cast<std::size_t>(i - 1)] = p.coeffs()[static_cast<std::size_t>(i)] * i;
  return IntPoly(std::move(v));
}

IntPoly reflect(const IntPoly& p) {
  std::vector<Integer> v(p.coeffs().begin(), p.coeffs().end());
  for (std::size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
  return IntPoly(std::move(v));
}

Integer content(const IntPoly& p) {
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  const Integer g = content(p);
  if (g == 1) return p;
  std::vector<Integer> v(p.coeffs().begin(), p.coeffs().end());
  for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(v));
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("pseudo_remainder: zero divisor");
  const int db = b.degree();
  if (a.degree() < db) return a;
  std::vector<Integer> r(a.coeffs().begin(), a.coeffs().end());
  const Integer& lb = b.leading();
  int e = a.degree() - db + 1;
  for (int top = a.degree(); top >= db; --top) {
    const Integer lead = r[static_cast<std::size_t>(top)];
    for (auto& c : r) c *= lb;
    --e;
    if (lead != 0) {
      const int shift = top - db;
      for (int j = 0; j <= db; ++j) {
        mpz_submul(r[static_cast<std::size_t>(shift + j)].get_mpz_t(), lead.get_mpz_t(),
                   b.coeffs()[static_cast<std::size_t>(j)].get_mpz_t());
      }
    }
    r.resize(static_cast<std::size_t>(top));
  }
  // e counts the multiplications by lc(b) still owed to match the convention.
  IntPoly rem(std::move(r));
  if (e > 0) {
    Integer f;
    mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
    rem *= f;
  }
  return rem;
}

DivResult divide(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("divide: zero divisor");
  const int db = b.degree();
  if (a.degree() < db) return {IntPoly{}, a};
  std::vector<Integer> r(a.coeffs().begin(), a.coeffs().end());
  std::vector<Integer> q(static_cast<std::size_t>(a.degree() - db) + 1);
  const Integer& lb = b.leading();
  for (int top = a.degree(); top >= db; --top) {
    Integer& lead = r[static_cast<std::size_t>(top)];
    if (lead == 0) continue;
    if (!mpz_divisible_p(lead.get_mpz_t(), lb.get_mpz_t())) {
      throw std::domain_error("divide: quotient is not integral");
    }
    Integer c;
    mpz_divexact(c.get_mpz_t(), lead.get_mpz_t(), lb.get_mpz_t());
    const int shift = top - db;
    for (int j = 0; j <= db; ++j) {
      mpz_submul(r[static_cast<std::size_t>(shift + j)].get_mpz_t(), c.get_mpz_t(),
                 b.coeffs()[static_cast<std::size_t>(j)].get_mpz_t());
    }
    q[static_cast<std::size_t>(shift)] = std::move(c);
  }
  r.resize(static_cast<std::size_t>(db));
  return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

bool divides_exactly(const IntPoly& b, const IntPoly& a, IntPoly* q) {
  if (b.is_zero()) return a.is_zero();
  if (a.is_zero()) {
    if (q) *q = IntPoly{};
    return true;
  }
  if (a.degree() < b.degree()) return false;
  // Cheap necessary condition on the trailing coefficients.
  int lo = 0;
  while (b.coeffs()[static_cast<std::size_t>(lo)] == 0) ++lo;
  for (int i = 0; i < lo; ++i) {
    if (a.coeffs()[static_cast<std::size_t>(i)] != 0) return false;
  }
  if (!mpz_divisible_p(a.coeffs()[static_cast<std::size_t>(lo)].get_mpz_t(),
                       b.coeffs()[static_cast<std::size_t>(lo)].get_mpz_t())) {
    return false;
  }
  try {
    DivResult d = divide(a, b);
    if (!d.remainder.is_zero()) return false;
    if (q) *q = std::move(d.quotient);
    return true;
  } catch (const std::domain_error&) {
    return false;
  }
}

namespace {

Integer ipow(const Integer& base, long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

Integer exact_div(const Integer& a, const Integer& b) {
  Integer r;
  mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

IntPoly exact_div(const IntPoly& p, const Integer& c) {
  std::vector<Integer> v(p.coeffs().begin(), p.coeffs().end());
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return IntPoly(std::move(v));
}

}  // namespace

Integer resultant(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() || q.is_zero()) throw std::invalid_argument("resultant: zero polynomial");
  if (p.degree() == 0) return ipow(p.leading(), q.degree());
  if (q.degree() == 0) return ipow(q.leading(), p.degree());

  // Subresultant algorithm over Z with contents factored out up front.
  IntPoly A = p;
  IntPoly B = q;
  int sign = 1;
  if (A.degree() < B.degree()) {
    std::swap(A, B);
    if ((A.degree() & 1) && (B.degree() & 1)) sign = -1;
  }
  const Integer ca = content(A);
  const Integer cb = content(B);
  A = exact_div(A, ca);
  B = exact_div(B, cb);
  const Integer scale = ipow(ca, B.degree()) * ipow(cb, A.degree());

  Integer g = 1;
  Integer h = 1;
  while (true) {
    const int delta = A.degree() - B.degree();
    if ((A.degree() & 1) && (B.degree() & 1)) sign = -sign;
    IntPoly R = pseudo_remainder(A, B);
    A = std::move(B);
    if (R.is_zero()) return 0;
    B = exact_div(R, g * ipow(h, delta));
    g = A.leading();
    // h <- h^(1-delta) g^delta
    if (delta == 0) {
      // unchanged
    } else if (delta == 1) {
      h = g;
    } else {
      h = exact_div(ipow(g, delta), ipow(h, delta - 1));
    }
    if (B.degree() == 0) break;
  }
  // h <- h^(1 - deg A) lc(B)^deg A
  const int da = A.degree();
  Integer hfinal;
  if (da == 0) {
    hfinal = h;
  } else if (da == 1) {
    hfinal = B.leading();
  } else {
    hfinal = exact_div(ipow(B.leading(), da), ipow(h, da - 1));
  }
  return sign * scale * hfinal;
}

IntPoly gcd_over_rationals(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() || q.is_zero()) throw std::invalid_argument("gcd: zero polynomial");
  IntPoly a = primitive_part(p);
  IntPoly b = primitive_part(q);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    if (b.degree() == 0) return IntPoly{1};
    IntPoly r = primitive_part(pseudo_remainder(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  if (a.degree() == 0) return IntPoly{1};
  if (a.leading() < 0) a = -a;
  return a;
}

IntPoly compose_trace_lift(const IntPoly& T, int t) {
  if (t < 0 || T.degree() != t) throw std::invalid_argument("compose_trace_lift: degree of T must equal t");
  // x^t (x + 1/x)^j = x^(t-j) (x^2 + 1)^j
  std::vector<Integer> out(2 * static_cast<std::size_t>(t) + 1);
  std::vector<Integer> binom{1};  // coefficients of (x^2 + 1)^j in powers of x^2
  for (int j = 0; j <= t; ++j) {
    const Integer& c = T.coeffs()[static_cast<std::size_t>(j)];
    if (c != 0) {
      for (int i = 0; i <= j; ++i) {
        mpz_addmul(out[static_cast<std::size_t>(t - j + 2 * i)].get_mpz_t(), c.get_mpz_t(),
                   binom[static_cast<std::size_t>(i)].get_mpz_t());
      }
    }
    binom.emplace_back(1);
    for (std::size_t i = binom.size() - 2; i > 0; --i) binom[i] += binom[i - 1];
  }
  return IntPoly(std::move(out));
}

bool is_reciprocal(const IntPoly& p) {
  const auto c = p.coeffs();
  const std::size_t n = c.size();
  for (std::size_t i = 0; i < n / 2; ++i) {
    if (c[i] != c[n - 1 - i]) return false;
  }
  return true;
}

std::string to_string(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) out += ',';
    out += p.coeffs()[i].get_str();
  }
  return out;
}

IntPoly parse_poly(std::string_view text) {
  std::string cleaned;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) cleaned += ch;
  }
  if (cleaned.empty()) throw std::invalid_argument("empty polynomial text");
  std::vector<Integer> coeffs;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = cleaned.find(',', start);
    std::string tok = cleaned.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (!tok.empty() && tok.front() == '+') tok.erase(0, 1);
    Integer v;
    if (tok.empty() || v.set_str(tok, 10) != 0) {
      throw std::invalid_argument("bad coefficient '" + tok + "' in polynomial text");
    }
    coeffs.push_back(std::move(v));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return IntPoly(std::move(coeffs));
}

std::string to_pretty(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    Integer c = p.coeffs()[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << c;
    } else {
      if (c != 1) os << c << '*';
      os << 'x';
      if (i > 1) os << '^' << i;
    }
  }
  return os.str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  const auto dot = s.find('.');
  if (dot != std::string::npos && s.find('/') == std::string::npos) {
    // Decimal notation: "-2.618" -> -2618/1000.
    const std::size_t frac = s.size() - dot - 1;
    s.erase(dot, 1);
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(frac));
    s += "/" + den.get_str();
  }
  Rational r;
  if (s.empty() || s.front() == '/' || s.back() == '/' || r.set_str(s, 10) != 0 || r.get_den() == 0) {
    throw std::invalid_argument("bad rational '" + std::string(text) + "'");
  }
  r.canonicalize();
  return r;
}

}  // namespace salem
