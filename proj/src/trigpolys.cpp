#include "salem/trigpolys.hpp"

#include <stdexcept>
#include <string>

#include "salem/roots.hpp"

namespace salem {

IntPoly cheb(int k) {
  if (k < 0) throw std::invalid_argument("cheb: k must be nonnegative");
  if (k == 0) return IntPoly{1};
  const IntPoly x{0, 1};
  IntPoly prev = x;             // t_1
  if (k == 1) return prev;
  IntPoly cur{-2, 0, 1};        // t_2
  for (int i = 2; i < k; ++i) {
    IntPoly next = x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

IntPoly ctrace(int n) {
  if (n < 1) throw std::invalid_argument("ctrace: n must be positive");
  // U_n = 1 + x + ... + x^(n-1) for odd n, 1 + x^2 + ... + x^(n-2) for even n.
  const int step = (n % 2 == 1) ? 1 : 2;
  const int deg = n - step;
  std::vector<Integer> u(static_cast<std::size_t>(deg) + 1);
  for (int i = 0; i <= deg; i += step) u[static_cast<std::size_t>(i)] = 1;
  return trace_extract(IntPoly(std::move(u)));
}

IntPoly trace_extract(const IntPoly& p) {
  if (p.is_zero() || p.degree() % 2 != 0) {
    throw std::invalid_argument("trace_extract: input must have even degree");
  }
  if (!is_reciprocal(p)) throw std::invalid_argument("trace_extract: input is not reciprocal");
  const int m = p.degree() / 2;
  std::vector<Integer> rem(p.coeffs().begin(), p.coeffs().end());
  std::vector<Integer> T(static_cast<std::size_t>(m) + 1);

  // Binomial rows of (x^2 + 1)^j, built once up to j = m.
  std::vector<std::vector<Integer>> rows{{1}};
  for (int j = 1; j <= m; ++j) {
    std::vector<Integer> row(static_cast<std::size_t>(j) + 1);
    row.front() = row.back() = 1;
    for (int i = 1; i < j; ++i) row[static_cast<std::size_t>(i)] = rows.back()[static_cast<std::size_t>(i - 1)] + rows.back()[static_cast<std::size_t>(i)];
    rows.push_back(std::move(row));
  }
  // Peel off c_j x^(m-j) (x^2+1)^j from the top, whose leading term is x^(m+j).
  for (int j = m; j >= 0; --j) {
    const Integer c = rem[static_cast<std::size_t>(m + j)];
    T[static_cast<std::size_t>(j)] = c;
    if (c == 0) continue;
    const auto& row = rows[static_cast<std::size_t>(j)];
    for (int i = 0; i <= j; ++i) {
      mpz_submul(rem[static_cast<std::size_t>(m - j + 2 * i)].get_mpz_t(), c.get_mpz_t(),
                 row[static_cast<std::size_t>(i)].get_mpz_t());
    }
  }
  for (const auto& c : rem) {
    if (c != 0) throw std::logic_error("trace_extract: nonzero residue after elimination");
  }
  return IntPoly(std::move(T));
}

int rk_epsilon(int k) {
  static constexpr int kTable[6] = {0, 1, 2, 3, -2, 5};
  return kTable[((k % 6) + 6) % 6];
}

int rk_formula(int k) {
  if (k < 0) throw std::invalid_argument("rk_formula: k must be nonnegative");
  const int eps = rk_epsilon(k);
  if ((k - eps) % 6 != 0) {
    throw std::logic_error("rk_formula: epsilon table corrupted at k = " + std::to_string(k));
  }
  return (k - eps) / 6;
}

int cn_roots_in_unit_interval(int n) {
  if (n < 1) throw std::invalid_argument("cn_roots_in_unit_interval: n must be positive");
  return count_roots_open(ctrace(n), Rational(0), Rational(1));
}

}  // namespace salem
