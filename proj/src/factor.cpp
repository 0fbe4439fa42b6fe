#include "salem/factor.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <utility>

#include "salem/roots.hpp"

namespace salem {

const char* to_string(Verdict v) { return v == Verdict::irreducible ? "irreducible" : "reducible"; }

const char* to_string(IrreducibilityMethod m) {
  return m == IrreducibilityMethod::modular_degree_filter ? "modular-degree-filter" : "exact-factorization";
}

namespace {

// ---------------------------------------------------------------------------
// Polynomials over F_p, p < 2^32, ascending coefficients, trimmed.

using u64 = std::uint64_t;
using ZpPoly = std::vector<u64>;

void trim(ZpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const ZpPoly& a) { return static_cast<int>(a.size()) - 1; }

u64 mulmod(u64 a, u64 b, u64 p) { return (a * b) % p; }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

ZpPoly reduce(const IntPoly& f, u64 p) {
  ZpPoly out(f.coeffs().size());
  const Integer P(static_cast<unsigned long>(p));
  for (std::size_t i = 0; i < out.size(); ++i) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), f.coeffs()[i].get_mpz_t(), P.get_mpz_t());
    out[i] = r.get_ui();
  }
  trim(out);
  return out;
}

IntPoly lift_to_z(const ZpPoly& a) {
  std::vector<Integer> v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) v[i] = static_cast<unsigned long>(a[i]);
  return IntPoly(std::move(v));
}

ZpPoly sub(ZpPoly a, const ZpPoly& b, u64 p) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

ZpPoly mul(const ZpPoly& a, const ZpPoly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  ZpPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  }
  trim(out);
  return out;
}

// a = q*b + r
void divrem(const ZpPoly& a, const ZpPoly& b, u64 p, ZpPoly* q, ZpPoly* r) {
  ZpPoly rem = a;
  const int db = deg(b);
  ZpPoly quo(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  const u64 inv = invmod(b.back(), p);
  for (int top = deg(rem); top >= db; --top) {
    const u64 c = mulmod(rem[static_cast<std::size_t>(top)], inv, p);
    if (c == 0) continue;
    const int shift = top - db;
    quo[static_cast<std::size_t>(shift)] = c;
    for (int j = 0; j <= db; ++j) {
      auto& x = rem[static_cast<std::size_t>(shift + j)];
      x = (x + p - mulmod(c, b[static_cast<std::size_t>(j)], p)) % p;
    }
  }
  if (db >= 0 && rem.size() > static_cast<std::size_t>(db)) rem.resize(static_cast<std::size_t>(db));
  trim(rem);
  trim(quo);
  if (q) *q = std::move(quo);
  if (r) *r = std::move(rem);
}

ZpPoly rem(const ZpPoly& a, const ZpPoly& b, u64 p) {
  ZpPoly r;
  divrem(a, b, p, nullptr, &r);
  return r;
}

ZpPoly quo(const ZpPoly& a, const ZpPoly& b, u64 p) {
  ZpPoly q;
  divrem(a, b, p, &q, nullptr);
  return q;
}

ZpPoly make_monic(ZpPoly a, u64 p) {
  if (a.empty()) return a;
  const u64 inv = invmod(a.back(), p);
  for (auto& c : a) c = mulmod(c, inv, p);
  return a;
}

ZpPoly gcd(ZpPoly a, ZpPoly b, u64 p) {
  while (!b.empty()) {
    ZpPoly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(std::move(a), p);
}

// s*a + t*b = 1 for coprime a, b.
void xgcd(const ZpPoly& a, const ZpPoly& b, u64 p, ZpPoly* s, ZpPoly* t) {
  ZpPoly r0 = a, r1 = b;
  ZpPoly s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    ZpPoly q, r;
    divrem(r0, r1, p, &q, &r);
    ZpPoly s2 = sub(s0, mul(q, s1, p), p);
    ZpPoly t2 = sub(t0, mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (deg(r0) != 0) throw std::logic_error("xgcd: inputs not coprime mod p");
  const u64 inv = invmod(r0[0], p);
  for (auto& c : s0) c = mulmod(c, inv, p);
  for (auto& c : t0) c = mulmod(c, inv, p);
  *s = std::move(s0);
  *t = std::move(t0);
}

ZpPoly derivative(const ZpPoly& a, u64 p) {
  if (a.size() <= 1) return {};
  ZpPoly d(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = mulmod(a[i], i % p, p);
  trim(d);
  return d;
}

ZpPoly powmod(ZpPoly base, const Integer& e, const ZpPoly& f, u64 p) {
  ZpPoly result{1};
  base = rem(base, f, p);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(mul(result, result, p), f, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, base, p), f, p);
  }
  return result;
}

// Distinct-degree factorization: (d, product of all degree-d factors).
std::vector<std::pair<int, ZpPoly>> ddf(ZpPoly f, u64 p) {
  std::vector<std::pair<int, ZpPoly>> out;
  const ZpPoly x{0, 1};
  ZpPoly h = x;
  const Integer P(static_cast<unsigned long>(p));
  for (int d = 1; 2 * d <= deg(f); ++d) {
    h = powmod(h, P, f, p);
    ZpPoly g = gcd(f, sub(h, x, p), p);
    if (deg(g) > 0) {
      f = quo(f, g, p);
      h = rem(h, f, p);
      out.emplace_back(d, std::move(g));
    }
  }
  if (deg(f) > 0) {
    const int d = deg(f);
    out.emplace_back(d, make_monic(std::move(f), p));
  }
  return out;
}

// Equal-degree splitting (Cantor–Zassenhaus) of a product of degree-d factors.
void edf(const ZpPoly& f, int d, u64 p, std::mt19937_64& rng, std::vector<ZpPoly>& out) {
  if (deg(f) == d) {
    out.push_back(f);
    return;
  }
  std::uniform_int_distribution<u64> coef(0, p - 1);
  Integer e = 1;
  for (int i = 0; i < d; ++i) e *= static_cast<unsigned long>(p);
  e = (e - 1) / 2;
  while (true) {
    ZpPoly a(static_cast<std::size_t>(deg(f)));
    for (auto& c : a) c = coef(rng);
    trim(a);
    if (deg(a) < 1) continue;
    ZpPoly g = gcd(f, a, p);
    if (deg(g) <= 0 || deg(g) == deg(f)) {
      ZpPoly b = powmod(a, e, f, p);
      b = sub(b, ZpPoly{1}, p);
      g = gcd(f, b, p);
    }
    if (deg(g) > 0 && deg(g) < deg(f)) {
      edf(g, d, p, rng, out);
      edf(make_monic(quo(f, g, p), p), d, p, rng, out);
      return;
    }
  }
}

bool less_poly(const IntPoly& a, const IntPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    const auto& x = a.coeffs()[static_cast<std::size_t>(i)];
    const auto& y = b.coeffs()[static_cast<std::size_t>(i)];
    if (x != y) return x < y;
  }
  return false;
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

void check_input(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("irreducibility test: zero polynomial");
  if (!p.is_monic()) throw std::invalid_argument("irreducibility test: polynomial must be monic");
  if (p.degree() < 1) throw std::invalid_argument("irreducibility test: degree must be at least 1");
  if (!is_separable(p)) throw std::invalid_argument("irreducibility test: polynomial must be squarefree");
}

std::vector<PrimeDegrees> filter_primes(const IntPoly& p, int count) {
  std::vector<PrimeDegrees> out;
  for (u64 q = 3; static_cast<int>(out.size()) < count; q += 2) {
    if (!is_prime_u64(q) || !is_good_prime(p, q)) continue;
    out.push_back({q, modular_factor_degrees(p, q)});
  }
  return out;
}

std::vector<bool> intersect_sums(const std::vector<PrimeDegrees>& filter, int degree) {
  std::vector<bool> allowed(static_cast<std::size_t>(degree) + 1, true);
  for (const auto& pd : filter) {
    const auto s = subset_sums(pd.degrees);
    for (std::size_t i = 0; i < allowed.size(); ++i) allowed[i] = allowed[i] && i < s.size() && s[i];
  }
  return allowed;
}

bool only_trivial(const std::vector<bool>& allowed) {
  for (std::size_t i = 1; i + 1 < allowed.size(); ++i) {
    if (allowed[i]) return false;
  }
  return true;
}

Integer mod_pos(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

IntPoly reduce_pos(const IntPoly& f, const Integer& m) {
  std::vector<Integer> v(f.coeffs().begin(), f.coeffs().end());
  for (auto& c : v) c = mod_pos(c, m);
  return IntPoly(std::move(v));
}

IntPoly reduce_sym(const IntPoly& f, const Integer& m) {
  const Integer half = m / 2;
  std::vector<Integer> v(f.coeffs().begin(), f.coeffs().end());
  for (auto& c : v) {
    c = mod_pos(c, m);
    if (c > half) c -= m;
  }
  return IntPoly(std::move(v));
}

ZpPoly product(const std::vector<ZpPoly>& fs, std::size_t lo, std::size_t hi, u64 p) {
  ZpPoly r{1};
  for (std::size_t i = lo; i < hi; ++i) r = mul(r, fs[i], p);
  return r;
}

// Lifts F ≡ ∏ factors (mod p) to monic factors mod p^e. F is monic.
void hensel_tree(const IntPoly& F, const std::vector<ZpPoly>& factors, std::size_t lo, std::size_t hi, u64 p,
                 int e, const Integer& modulus, std::vector<IntPoly>& out) {
  if (hi - lo == 1) {
    out.push_back(reduce_pos(F, modulus));
    return;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  const ZpPoly g0 = product(factors, lo, mid, p);
  const ZpPoly h0 = product(factors, mid, hi, p);
  ZpPoly s, t;
  xgcd(g0, h0, p, &s, &t);

  IntPoly g = lift_to_z(g0);
  IntPoly h = lift_to_z(h0);
  Integer q = static_cast<unsigned long>(p);
  for (int k = 1; k < e; ++k) {
    IntPoly E = F - g * h;
    std::vector<Integer> ev(E.coeffs().begin(), E.coeffs().end());
    for (auto& c : ev) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), q.get_mpz_t());
    const ZpPoly err = reduce(IntPoly(std::move(ev)), p);
    // δg h0 + g0 δh ≡ err, deg δg < deg g0.
    const ZpPoly dg = rem(mul(err, t, p), g0, p);
    const ZpPoly dh = quo(sub(err, mul(dg, h0, p), p), g0, p);
    g += lift_to_z(dg) * q;
    h += lift_to_z(dh) * q;
    q *= static_cast<unsigned long>(p);
  }
  g = reduce_pos(g, modulus);
  h = reduce_pos(h, modulus);
  hensel_tree(g, factors, lo, mid, p, e, modulus, out);
  hensel_tree(h, factors, mid, hi, p, e, modulus, out);
}

struct ZassenhausResult {
  std::vector<IntPoly> factors;
  u64 prime = 0;
  int exponent = 0;
  Integer bound;
  int modular_factors = 0;
  std::uint64_t subsets_tried = 0;
};

// Factor-coefficient bound 2^deg * ceil(||f||_2).
Integer coefficient_bound(const IntPoly& f) {
  Integer norm2 = 0;
  for (const auto& c : f.coeffs()) norm2 += c * c;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  if (root * root < norm2) root += 1;
  Integer b;
  mpz_mul_2exp(b.get_mpz_t(), root.get_mpz_t(), static_cast<mp_bitcnt_t>(f.degree()));
  return b;
}

ZassenhausResult zassenhaus(const IntPoly& f, const std::vector<PrimeDegrees>& filter, bool stop_at_first,
                            const FactorOptions& opts) {
  ZassenhausResult res;
  // Prime with the fewest modular factors keeps recombination small.
  const auto best = std::min_element(filter.begin(), filter.end(), [](const auto& a, const auto& b) {
    return a.degrees.size() < b.degrees.size();
  });
  const u64 p = best->prime;
  res.prime = p;
  res.bound = coefficient_bound(f);

  std::vector<ZpPoly> modf;
  for (const auto& g : factor_mod_prime(f, p)) modf.push_back(reduce(g, p));
  res.modular_factors = static_cast<int>(modf.size());
  if (modf.size() == 1) {
    res.factors.push_back(f);
    return res;
  }

  Integer modulus = static_cast<unsigned long>(p);
  int e = 1;
  while (modulus <= 2 * res.bound) {
    modulus *= static_cast<unsigned long>(p);
    ++e;
  }
  res.exponent = e;
  std::vector<IntPoly> lifted;
  hensel_tree(f, modf, 0, modf.size(), p, e, modulus, lifted);

  std::vector<int> ldeg;
  for (const auto& g : lifted) ldeg.push_back(g.degree());
  const std::vector<bool> allowed = intersect_sums(filter, f.degree());

  IntPoly F = f;
  std::vector<std::size_t> remaining(lifted.size());
  std::iota(remaining.begin(), remaining.end(), 0);
  std::size_t s = 1;
  while (2 * s <= remaining.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      if (++res.subsets_tried > opts.max_subsets) {
        throw InconclusiveError("recombination exceeded " + std::to_string(opts.max_subsets) + " subsets");
      }
      int dsum = 0;
      for (auto i : idx) dsum += ldeg[remaining[i]];
      // Every factor of F divides f, so its degree must survive the filter.
      if (allowed[static_cast<std::size_t>(dsum)]) {
        IntPoly g{1};
        for (auto i : idx) g = reduce_pos(g * lifted[remaining[i]], modulus);
        g = reduce_sym(g, modulus);
        const Integer& g0 = g.coeffs().front();
        const Integer F0 = F.coeff(0);
        IntPoly cof;
        if ((g0 != 0 && mpz_divisible_p(F0.get_mpz_t(), g0.get_mpz_t())) || (g0 == 0 && F0 == 0)) {
          if (divides_exactly(g, F, &cof)) {
            res.factors.push_back(g);
            F = std::move(cof);
            std::vector<std::size_t> rest;
            for (std::size_t i = 0; i < remaining.size(); ++i) {
              if (std::find(idx.begin(), idx.end(), i) == idx.end()) rest.push_back(remaining[i]);
            }
            remaining = std::move(rest);
            found = true;
            break;
          }
        }
      }
      // next combination of size s from remaining.size()
      std::size_t k = s;
      const std::size_t n = remaining.size();
      while (k > 0 && idx[k - 1] == n - s + k - 1) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (found && stop_at_first) {
      res.factors.push_back(F);
      return res;
    }
    if (!found) ++s;
  }
  if (F.degree() > 0) res.factors.push_back(F);
  return res;
}

}  // namespace

std::vector<bool> subset_sums(const std::vector<int>& degrees) {
  const int total = std::accumulate(degrees.begin(), degrees.end(), 0);
  std::vector<bool> s(static_cast<std::size_t>(total) + 1, false);
  s[0] = true;
  for (int d : degrees) {
    for (int i = total; i >= d; --i) {
      if (s[static_cast<std::size_t>(i - d)]) s[static_cast<std::size_t>(i)] = true;
    }
  }
  return s;
}

bool is_good_prime(const IntPoly& p, std::uint64_t prime) {
  const ZpPoly f = reduce(p, prime);
  if (deg(f) != p.degree()) return false;
  if (deg(f) < 1) return true;
  return deg(gcd(f, derivative(f, prime), prime)) == 0;
}

std::vector<int> modular_factor_degrees(const IntPoly& p, std::uint64_t prime) {
  if (!is_good_prime(p, prime)) throw std::invalid_argument("modular_factor_degrees: bad prime");
  std::vector<int> out;
  for (const auto& [d, g] : ddf(make_monic(reduce(p, prime), prime), prime)) {
    for (int i = 0; i < deg(g) / d; ++i) out.push_back(d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IntPoly> factor_mod_prime(const IntPoly& p, std::uint64_t prime) {
  if (!is_good_prime(p, prime)) throw std::invalid_argument("factor_mod_prime: bad prime");
  if (prime == 2) throw std::invalid_argument("factor_mod_prime: odd primes only");
  std::mt19937_64 rng(0x5a1e3ull ^ prime);
  std::vector<ZpPoly> parts;
  for (const auto& [d, g] : ddf(make_monic(reduce(p, prime), prime), prime)) edf(g, d, prime, rng, parts);
  std::vector<IntPoly> out;
  for (const auto& g : parts) out.push_back(lift_to_z(g));
  std::sort(out.begin(), out.end(), less_poly);
  return out;
}

IrreducibilityWitness is_irreducible(const IntPoly& p, const FactorOptions& opts) {
  check_input(p);
  IrreducibilityWitness w;
  w.filter = filter_primes(p, std::max(1, opts.filter_primes));
  if (!opts.force_exact && only_trivial(intersect_sums(w.filter, p.degree()))) {
    w.verdict = Verdict::irreducible;
    w.method = IrreducibilityMethod::modular_degree_filter;
    return w;
  }
  const ZassenhausResult z = zassenhaus(p, w.filter, true, opts);
  w.method = IrreducibilityMethod::exact_factorization;
  w.lift_prime = z.prime;
  w.lift_exponent = z.exponent;
  w.coefficient_bound = z.bound;
  w.modular_factor_count = z.modular_factors;
  w.subsets_tried = z.subsets_tried;
  if (z.factors.size() > 1) {
    w.verdict = Verdict::reducible;
    w.factor = z.factors.front();
  } else {
    w.verdict = Verdict::irreducible;
  }
  return w;
}

std::vector<IntPoly> irreducible_factors(const IntPoly& p, const FactorOptions& opts) {
  check_input(p);
  std::vector<IntPoly> out;
  const auto filter = filter_primes(p, std::max(1, opts.filter_primes));
  if (!opts.force_exact && only_trivial(intersect_sums(filter, p.degree()))) {
    out.push_back(p);
    return out;
  }
  out = zassenhaus(p, filter, false, opts).factors;
  std::sort(out.begin(), out.end(), less_poly);
  return out;
}

bool replay_witness(const IrreducibilityWitness& w, const IntPoly& p, bool recompute_degrees) {
  if (p.degree() < 1) return false;
  if (w.verdict == Verdict::reducible) {
    if (!w.factor || w.factor->degree() < 1 || w.factor->degree() >= p.degree()) return false;
    return divides_exactly(*w.factor, p);
  }
  if (w.method == IrreducibilityMethod::exact_factorization) {
    // No compact certificate for this path: rerun the search.
    const auto again = is_irreducible(p);
    return again.verdict == Verdict::irreducible;
  }
  if (w.filter.empty()) return false;
  for (const auto& pd : w.filter) {
    if (std::accumulate(pd.degrees.begin(), pd.degrees.end(), 0) != p.degree()) return false;
    if (recompute_degrees) {
      if (!is_good_prime(p, pd.prime) || modular_factor_degrees(p, pd.prime) != pd.degrees) return false;
    }
  }
  return only_trivial(intersect_sums(w.filter, p.degree()));
}

}  // namespace salem
