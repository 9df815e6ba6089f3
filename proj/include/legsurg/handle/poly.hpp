#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>

#include "legsurg/algebra/rational.hpp"

namespace legsurg::handle {

using algebra::Rational;

// Coordinates of R^4 in the fixed order (x1, y1, x2, y2), plus the handle
// shape parameter A, which is a constant for d, gradients and interior products.
enum class Var : std::size_t { X1 = 0, Y1 = 1, X2 = 2, Y2 = 3, A = 4 };

inline constexpr std::size_t kCoords = 4;
inline constexpr std::size_t kVars = 5;

using Exponents = std::array<unsigned, kVars>;
using Point = std::array<Rational, kCoords>;

// Graded lexicographic order, largest monomial first.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Polynomial in x1, y1, x2, y2, A with exact rational coefficients.
/// Zero coefficients are never stored.
class Poly {
public:
  using Terms = std::map<Exponents, Rational, GrlexGreater>;

  Poly() = default;
  Poly(Rational constant);
  Poly(int constant) : Poly(Rational(constant)) {}

  static Poly var(Var v);
  static Poly monomial(Rational coeff, Exponents e);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  unsigned degree() const;

  Poly derivative(Var v) const;

  // `a` substitutes the parameter A.
  Rational evaluate(const Point& pt, const Rational& a = Rational()) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(const Poly& lhs, const Poly& rhs);
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  // "3/2*x1^2*y1 - x2*A + 1", or "0".
  std::string to_string() const;

private:
  void add_term(const Exponents& e, const Rational& c);

  Terms terms_;
};

// Shorthand used when writing down explicit formulas.
namespace vars {
inline Poly x1() { return Poly::var(Var::X1); }
inline Poly y1() { return Poly::var(Var::Y1); }
inline Poly x2() { return Poly::var(Var::X2); }
inline Poly y2() { return Poly::var(Var::Y2); }
inline Poly A() { return Poly::var(Var::A); }
}  // namespace vars

}  // namespace legsurg::handle
