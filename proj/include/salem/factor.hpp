#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "salem/intpoly.hpp"

namespace salem {

enum class Verdict { irreducible, reducible };
enum class IrreducibilityMethod { modular_degree_filter, exact_factorization };

const char* to_string(Verdict v);
const char* to_string(IrreducibilityMethod m);

/// Degrees of the irreducible factors of p modulo one prime.
struct PrimeDegrees {
  std::uint64_t prime = 0;
  std::vector<int> degrees;  // ascending
};

/// Evidence for an irreducibility verdict.
///
/// For the modular degree filter, `filter` lists the primes and factor
/// degree multisets; the subset sums of the multisets intersect in {0, deg}.
/// For exact factorization, `factor` holds a proper factor when reducible and
/// the lifting parameters record how the search was bounded.
struct IrreducibilityWitness {
  Verdict verdict = Verdict::irreducible;
  IrreducibilityMethod method = IrreducibilityMethod::modular_degree_filter;
  std::vector<PrimeDegrees> filter;
  std::optional<IntPoly> factor;
  std::uint64_t lift_prime = 0;
  int lift_exponent = 0;
  Integer coefficient_bound = 0;
  int modular_factor_count = 0;
  std::uint64_t subsets_tried = 0;
};

struct FactorOptions {
  int filter_primes = 5;
  std::uint64_t max_subsets = std::uint64_t{1} << 24;
  bool force_exact = false;  // skip the filter verdict and always factor
};

/// Raised when recombination would exceed FactorOptions::max_subsets.
class InconclusiveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Irreducibility over Q of a monic squarefree integer polynomial.
/// Throws std::invalid_argument for zero, non-monic or non-squarefree input.
IrreducibilityWitness is_irreducible(const IntPoly& p, const FactorOptions& opts = {});

/// Monic irreducible factors of a monic squarefree polynomial, ascending by
/// degree then coefficients.
std::vector<IntPoly> irreducible_factors(const IntPoly& p, const FactorOptions& opts = {});

/// Checks a witness against p without rerunning the decision procedure: a
/// reducible witness by one exact division, a filter witness by recomputing
/// subset sums of the stored degree multisets. With recompute_degrees the
/// stored multisets are also re-derived from p modulo each prime.
bool replay_witness(const IrreducibilityWitness& w, const IntPoly& p, bool recompute_degrees = false);

/// True when p mod prime keeps its degree and has no repeated factor.
bool is_good_prime(const IntPoly& p, std::uint64_t prime);

/// Factor degrees of p modulo a good prime (distinct-degree factorization).
std::vector<int> modular_factor_degrees(const IntPoly& p, std::uint64_t prime);

/// Monic irreducible factors of p modulo a good prime, coefficients in
/// [0, prime). Deterministic.
std::vector<IntPoly> factor_mod_prime(const IntPoly& p, std::uint64_t prime);

/// Subset sums reachable from a degree multiset, as a membership vector
/// indexed 0..sum.
std::vector<bool> subset_sums(const std::vector<int>& degrees);

}  // namespace salem
