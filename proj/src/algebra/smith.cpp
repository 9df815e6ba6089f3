#include "legsurg/algebra/smith.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "legsurg/errors.hpp"

namespace legsurg::algebra {

namespace {

struct Position {
  std::size_t row;
  std::size_t col;
};

std::optional<Position> smallest_pivot(const IntegerMatrix& d, std::size_t t) {
  std::optional<Position> best;
  Integer best_abs;
  for (std::size_t i = t; i < d.rows(); ++i) {
    for (std::size_t j = t; j < d.cols(); ++j) {
      if (sgn(d(i, j)) == 0) continue;
      Integer a = abs(d(i, j));
      // Strict comparison keeps the first (lowest row, then column) on ties.
      if (!best || a < best_abs) {
        best = Position{i, j};
        best_abs = std::move(a);
      }
    }
  }
  return best;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

std::vector<Integer> SmithDecomposition::diagonal() const {
  std::vector<Integer> out;
  const std::size_t n = std::min(d.rows(), d.cols());
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(d(i, i));
  return out;
}

std::size_t SmithDecomposition::rank() const {
  std::size_t r = 0;
  const std::size_t n = std::min(d.rows(), d.cols());
  for (std::size_t i = 0; i < n; ++i)
    if (sgn(d(i, i)) != 0) ++r;
  return r;
}

SmithDecomposition smith_normal_form(const IntegerMatrix& a) {
  if (a.empty()) throw UsageError("Smith normal form of an empty matrix");

  IntegerMatrix d = a;
  IntegerMatrix u = IntegerMatrix::identity(a.rows());
  IntegerMatrix v = IntegerMatrix::identity(a.cols());
  const std::size_t n = std::min(a.rows(), a.cols());

  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      const auto pivot = smallest_pivot(d, t);
      if (!pivot) return {std::move(u), std::move(d), std::move(v)};

      d.swap_rows(t, pivot->row);
      u.swap_rows(t, pivot->row);
      d.swap_cols(t, pivot->col);
      v.swap_cols(t, pivot->col);

      bool column_clear = true;
      for (std::size_t i = t + 1; i < d.rows(); ++i) {
        if (sgn(d(i, t)) == 0) continue;
        const Integer q = -floor_div(d(i, t), d(t, t));
        d.add_row_multiple(i, t, q);
        u.add_row_multiple(i, t, q);
        if (sgn(d(i, t)) != 0) column_clear = false;
      }
      if (!column_clear) continue;

      bool row_clear = true;
      for (std::size_t j = t + 1; j < d.cols(); ++j) {
        if (sgn(d(t, j)) == 0) continue;
        const Integer q = -floor_div(d(t, j), d(t, t));
        d.add_col_multiple(j, t, q);
        v.add_col_multiple(j, t, q);
        if (sgn(d(t, j)) != 0) row_clear = false;
      }
      if (!row_clear) continue;

      // Divisibility chain: fold an offending row into row t and re-pivot.
      bool divides_rest = true;
      for (std::size_t i = t + 1; i < d.rows() && divides_rest; ++i) {
        for (std::size_t j = t + 1; j < d.cols(); ++j) {
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            d.add_row_multiple(t, i, 1);
            u.add_row_multiple(t, i, 1);
            divides_rest = false;
            break;
          }
        }
      }
      if (divides_rest) break;
    }
    if (sgn(d(t, t)) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }
  return {std::move(u), std::move(d), std::move(v)};
}

}  // namespace legsurg::algebra
