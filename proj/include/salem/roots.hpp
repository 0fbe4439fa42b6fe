#pragma once

#include <optional>
#include <vector>

#include "salem/intpoly.hpp"

namespace salem {

/// A rational interval (lo, hi] holding exactly one real root of a given
/// polynomial. When the root is rational and was hit exactly, exact_root holds
/// it and hi == *exact_root.
struct IsolatingInterval {
  Rational lo;
  Rational hi;
  int multiplicity = 1;
  std::optional<Rational> exact_root;

  Rational width() const { return hi - lo; }
};

/// Real roots classified relative to -2, 0, 1 and 2. Counts are of distinct
/// roots; the first four buckets partition the real line.
struct RootPattern {
  int below_minus2 = 0;   // (-inf, -2)
  int in_minus2_2 = 0;    // (-2, 2)
  int at_endpoints = 0;   // {-2, 2}
  int above_2 = 0;        // (2, inf)
  int in_0_1 = 0;         // (0, 1)
  bool separable = true;

  int total() const { return below_minus2 + in_minus2_2 + at_endpoints + above_2; }
  friend bool operator==(const RootPattern&, const RootPattern&) = default;
};

/// Sturm chain of the squarefree part of p, normalized to primitive parts with
/// signs preserved. Counts distinct real roots.
class SturmChain {
 public:
  explicit SturmChain(const IntPoly& p);

  int variations_at(const Rational& x) const;
  int variations_at_pos_inf() const;
  int variations_at_neg_inf() const;

  /// Distinct roots in (lo, hi].
  int count(const Rational& lo, const Rational& hi) const;
  /// Distinct roots in (lo, +inf).
  int count_above(const Rational& lo) const;
  /// Distinct roots in (-inf, hi].
  int count_up_to(const Rational& hi) const;
  int count_all() const;

  const IntPoly& squarefree_part() const { return chain_.front(); }
  std::size_t length() const { return chain_.size(); }

 private:
  std::vector<IntPoly> chain_;
};

/// Distinct real roots of p in the half-open interval (lo, hi].
/// Throws std::invalid_argument for the zero polynomial or lo >= hi.
int sturm_count(const IntPoly& p, const Rational& lo, const Rational& hi);
/// Open (lo, hi) and closed [lo, hi] variants via explicit endpoint tests.
int count_roots_open(const IntPoly& p, const Rational& lo, const Rational& hi);
int count_roots_closed(const IntPoly& p, const Rational& lo, const Rational& hi);

/// gcd(p, p') == 1
bool is_separable(const IntPoly& p);

/// Ascending isolating intervals for every root of p in (lo, hi].
/// Throws std::invalid_argument when p is not separable.
std::vector<IsolatingInterval> isolate_roots(const IntPoly& p, const Rational& lo, const Rational& hi);

/// Shrinks iv to width <= width while keeping the same root of p. On return
/// either exact_root is set or p(lo) and p(hi) have opposite signs.
IsolatingInterval refine(IsolatingInterval iv, const IntPoly& p, const Rational& width);

RootPattern root_pattern(const IntPoly& p);

}  // namespace salem
