#include "salem/roots.hpp"

#include <stdexcept>

namespace salem {

namespace {

int count_variations(const std::vector<int>& signs) {
  int v = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

IntPoly squarefree(const IntPoly& p) {
  if (p.degree() < 1) return p;
  const IntPoly g = gcd_over_rationals(p, derivative(p));
  if (g.degree() == 0) return p;
  IntPoly q;
  if (!divides_exactly(g, p, &q)) throw std::logic_error("squarefree: gcd does not divide input");
  return q;
}

}  // namespace

SturmChain::SturmChain(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("Sturm chain of the zero polynomial");
  chain_.push_back(squarefree(p));
  if (chain_.front().degree() == 0) return;
  chain_.push_back(primitive_part(derivative(chain_.front())));
  while (chain_.back().degree() > 0) {
    const IntPoly& a = chain_[chain_.size() - 2];
    const IntPoly& b = chain_.back();
    IntPoly r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    // prem multiplies by lc(b)^(δ+1); undo its sign, then negate.
    const int delta = a.degree() - b.degree();
    const bool flip = b.leading() < 0 && (delta + 1) % 2 == 1;
    r = primitive_part(r);
    chain_.push_back(flip ? r : -r);
  }
}

int SturmChain::variations_at(const Rational& x) const {
  std::vector<int> s;
  s.reserve(chain_.size());
  for (const auto& q : chain_) s.push_back(sign_at(q, x));
  return count_variations(s);
}

int SturmChain::variations_at_pos_inf() const {
  std::vector<int> s;
  for (const auto& q : chain_) s.push_back(sgn(q.leading()));
  return count_variations(s);
}

int SturmChain::variations_at_neg_inf() const {
  std::vector<int> s;
  for (const auto& q : chain_) s.push_back(q.degree() % 2 == 0 ? sgn(q.leading()) : -sgn(q.leading()));
  return count_variations(s);
}

int SturmChain::count(const Rational& lo, const Rational& hi) const {
  if (!(lo < hi)) throw std::invalid_argument("Sturm count needs lo < hi");
  return variations_at(lo) - variations_at(hi);
}

int SturmChain::count_above(const Rational& lo) const { return variations_at(lo) - variations_at_pos_inf(); }
int SturmChain::count_up_to(const Rational& hi) const { return variations_at_neg_inf() - variations_at(hi); }
int SturmChain::count_all() const { return variations_at_neg_inf() - variations_at_pos_inf(); }

int sturm_count(const IntPoly& p, const Rational& lo, const Rational& hi) {
  return SturmChain(p).count(lo, hi);
}

int count_roots_open(const IntPoly& p, const Rational& lo, const Rational& hi) {
  return sturm_count(p, lo, hi) - (sign_at(p, hi) == 0 ? 1 : 0);
}

int count_roots_closed(const IntPoly& p, const Rational& lo, const Rational& hi) {
  return sturm_count(p, lo, hi) + (sign_at(p, lo) == 0 ? 1 : 0);
}

bool is_separable(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("is_separable: zero polynomial");
  if (p.degree() < 1) return true;
  return gcd_over_rationals(p, derivative(p)).degree() == 0;
}

namespace {

void bisect(const SturmChain& chain, const IntPoly& p, const Rational& lo, const Rational& hi, int n,
            std::vector<IsolatingInterval>& out) {
  if (n == 0) return;
  if (n == 1) {
    IsolatingInterval iv{lo, hi, 1, std::nullopt};
    if (sign_at(p, hi) == 0) iv.exact_root = hi;
    out.push_back(std::move(iv));
    return;
  }
  Rational mid = (lo + hi) / 2;
  const int left = chain.count(lo, mid);
  bisect(chain, p, lo, mid, left, out);
  bisect(chain, p, mid, hi, n - left, out);
}

}  // namespace

std::vector<IsolatingInterval> isolate_roots(const IntPoly& p, const Rational& lo, const Rational& hi) {
  if (!is_separable(p)) throw std::invalid_argument("isolate_roots: polynomial is not separable");
  const SturmChain chain(p);
  std::vector<IsolatingInterval> out;
  bisect(chain, p, lo, hi, chain.count(lo, hi), out);
  return out;
}

IsolatingInterval refine(IsolatingInterval iv, const IntPoly& p, const Rational& width) {
  if (iv.exact_root) {
    if (iv.width() > width) iv.lo = iv.hi - width;
    return iv;
  }
  int s_hi = sign_at(p, iv.hi);
  if (s_hi == 0) {
    iv.exact_root = iv.hi;
    return refine(std::move(iv), p, width);
  }
  int s_lo = sign_at(p, iv.lo);
  // lo may itself be a neighbouring root; Sturm-bisect until it is not.
  std::optional<SturmChain> chain;
  while (s_lo == 0 || iv.width() > width) {
    Rational mid = (iv.lo + iv.hi) / 2;
    const int s_mid = sign_at(p, mid);
    if (s_mid == 0) {
      // mid lies inside (lo, hi], which holds exactly one root.
      iv.hi = mid;
      iv.exact_root = mid;
      return refine(std::move(iv), p, width);
    }
    bool root_left;
    if (s_lo != 0) {
      root_left = s_lo != s_mid;
    } else {
      if (!chain) chain.emplace(p);
      root_left = chain->count(iv.lo, mid) == 1;
    }
    if (root_left) {
      iv.hi = std::move(mid);
      s_hi = s_mid;
    } else {
      iv.lo = std::move(mid);
      s_lo = s_mid;
    }
  }
  return iv;
}

RootPattern root_pattern(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("root_pattern: zero polynomial");
  RootPattern rp;
  rp.separable = is_separable(p);
  if (p.degree() < 1) return rp;
  const SturmChain chain(p);
  const Rational m2(-2), two(2), zero(0), one(1);
  const bool root_m2 = sign_at(p, m2) == 0;
  const bool root_2 = sign_at(p, two) == 0;
  rp.below_minus2 = chain.count_up_to(m2) - (root_m2 ? 1 : 0);
  rp.in_minus2_2 = chain.count(m2, two) - (root_2 ? 1 : 0);
  rp.at_endpoints = (root_m2 ? 1 : 0) + (root_2 ? 1 : 0);
  rp.above_2 = chain.count_above(two);
  rp.in_0_1 = chain.count(zero, one) - (sign_at(p, one) == 0 ? 1 : 0);
  return rp;
}

}  // namespace salem
