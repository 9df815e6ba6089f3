#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "legsurg/algebra/integer_matrix.hpp"
#include "legsurg/algebra/rational.hpp"

namespace legsurg::testing {

// Seeded generator for the property tests; fixed seeds keep failures reproducible.
class Gen {
public:
  explicit Gen(std::uint64_t seed) : eng_(seed) {}

  long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng_); }
  bool coin() { return range(0, 1) == 1; }

  algebra::IntegerMatrix matrix(std::size_t rows, std::size_t cols, long lo, long hi) {
    algebra::IntegerMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = range(lo, hi);
    return m;
  }

  algebra::Rational rational(long num_bound, long den_bound) {
    return algebra::Rational(algebra::Integer(range(-num_bound, num_bound)), algebra::Integer(range(1, den_bound)));
  }

  // Product of random elementary matrices: determinant +1 or -1.
  algebra::IntegerMatrix unimodular2(int steps) {
    algebra::IntegerMatrix g = algebra::IntegerMatrix::identity(2);
    for (int s = 0; s < steps; ++s) {
      switch (range(0, 3)) {
        case 0: g.add_row_multiple(0, 1, range(-3, 3)); break;
        case 1: g.add_row_multiple(1, 0, range(-3, 3)); break;
        case 2: g.swap_rows(0, 1); break;
        default: g.negate_row(static_cast<std::size_t>(range(0, 1))); break;
      }
    }
    return g;
  }

  std::mt19937_64& engine() { return eng_; }

private:
  std::mt19937_64 eng_;
};

// Plain cofactor expansion over long long; only for the small oracles.
inline long long cofactor_det(const std::vector<std::vector<long long>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  long long total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<long long>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<long long> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    const long long sign = (c % 2 == 0) ? 1 : -1;
    total += sign * m[0][c] * cofactor_det(minor);
  }
  return total;
}

inline std::vector<std::vector<long long>> to_ll(const algebra::IntegerMatrix& a) {
  std::vector<std::vector<long long>> out(a.rows(), std::vector<long long>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i][j] = a(i, j).get_si();
  return out;
}

// Smith invariants from determinantal divisors: d_k = gcd of all k x k minors,
// and the k-th invariant factor is d_k / d_{k-1}.
inline std::vector<long long> invariant_factors_by_minors(const algebra::IntegerMatrix& a) {
  const auto m = to_ll(a);
  const std::size_t r = a.rows();
  const std::size_t c = a.cols();
  const std::size_t kmax = std::min(r, c);
  std::vector<long long> divisors{1};
  std::vector<long long> factors;
  for (std::size_t k = 1; k <= kmax; ++k) {
    long long g = 0;
    std::vector<bool> rsel(r, false);
    std::fill(rsel.end() - static_cast<long>(k), rsel.end(), true);
    do {
      std::vector<bool> csel(c, false);
      std::fill(csel.end() - static_cast<long>(k), csel.end(), true);
      do {
        std::vector<std::vector<long long>> sub;
        for (std::size_t i = 0; i < r; ++i) {
          if (!rsel[i]) continue;
          std::vector<long long> row;
          for (std::size_t j = 0; j < c; ++j)
            if (csel[j]) row.push_back(m[i][j]);
          sub.push_back(std::move(row));
        }
        g = std::gcd(g, cofactor_det(sub));
      } while (std::next_permutation(csel.begin(), csel.end()));
    } while (std::next_permutation(rsel.begin(), rsel.end()));
    divisors.push_back(g);
    const long long prev = divisors[k - 1];
    factors.push_back(prev == 0 ? 0 : g / prev);
  }
  return factors;
}

}  // namespace legsurg::testing
