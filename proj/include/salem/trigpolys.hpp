#pragma once

#include "salem/intpoly.hpp"

namespace salem {

/// t_k with t_k(2cos θ) = 2cos kθ, generated by t_{k+2} = x t_{k+1} - t_k
/// from t_1 = x, t_2 = x^2 - 2. cheb(0) is the constant 1 (empty factor),
/// not 2: the constructions need t_0 to be a monic degree-0 factor.
IntPoly cheb(int k);

/// C_n, the trace polynomial of (x^n - 1)/(x - 1) for odd n and of
/// (x^n - 1)/(x^2 - 1) for even n. Roots 2cos(2jπ/n). C_1 = C_2 = 1.
IntPoly ctrace(int n);

/// Inverse of compose_trace_lift: for reciprocal p of degree 2m returns T of
/// degree m with p(x) = x^m T(x + 1/x). Throws std::invalid_argument for
/// odd degree or non-reciprocal input.
IntPoly trace_extract(const IntPoly& p);

/// The residue ε ∈ {0, 1, 2, 3, -2, 5} with k ≡ ε (mod 6).
int rk_epsilon(int k);

/// Closed-form count of roots of t_k in the open interval (0,1):
/// (k - ε)/6. k = 0 gives 0, consistent with t_0 = 1.
int rk_formula(int k);

/// Number of roots of C_n in (0,1), counted exactly with Sturm sequences.
int cn_roots_in_unit_interval(int n);

}  // namespace salem
