#include "riffle/linsolve.hpp"

#include <stdexcept>
#include <utility>

namespace riffle {

namespace {

// In-place Bareiss elimination over the first `cols` columns of m. Returns the
// sign of the row permutation, or 0 if a zero pivot column is met.
int bareiss(std::vector<std::vector<BigInt>>& m, std::size_t cols) {
  const std::size_t n = m.size();
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k < n && k < cols; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < m[i].size(); ++j) {
        BigInt t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign;
}

}  // namespace

std::optional<std::vector<Rat>> solve_exact(const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw std::invalid_argument("solve_exact: dimension mismatch");
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw std::invalid_argument("solve_exact: matrix is not square");
    BigInt scale = 1;
    for (const auto& v : a[i]) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v.get_den_mpz_t());
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), b[i].get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rat(a[i][j] * scale).get_num();
    m[i][n] = Rat(b[i] * scale).get_num();
  }
  if (bareiss(m, n) == 0) return std::nullopt;

  std::vector<Rat> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rat acc(m[i][n]);
    for (std::size_t j = i + 1; j < n; ++j) acc -= Rat(m[i][j]) * x[j];
    x[i] = acc / Rat(m[i][i]);
    x[i].canonicalize();
  }
  return x;
}

BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = bareiss(m, n);
  if (sign == 0) return 0;
  return sign * m[n - 1][n - 1];
}

}  // namespace riffle
