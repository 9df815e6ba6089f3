#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "legsurg/algebra/integer_matrix.hpp"
#include "legsurg/algebra/rational.hpp"

namespace legsurg::torus {

using algebra::Integer;
using algebra::IntegerMatrix;
using algebra::Rational;

/// Slope p/q of an essential curve on a torus.
///
/// A curve whose class is the column vector (q, p) has slope p/q. The stored
/// pair is primitive with q >= 0, and infinity is (1, 0).
class Slope {
public:
  // Throws DomainError for (0, 0).
  Slope(Integer p, Integer q);
  static Slope from_rational(const Rational& r);
  static Slope infinity() { return Slope(1, 0); }
  // "p/q", "p" or "inf".
  static Slope parse(std::string_view text);

  const Integer& p() const noexcept { return p_; }
  const Integer& q() const noexcept { return q_; }
  bool is_infinite() const noexcept { return sgn(q_) == 0; }
  bool is_integer() const noexcept { return q_ == 1; }
  // Throws DomainError for the infinite slope.
  Rational value() const;

  std::string to_string() const;

  friend bool operator==(const Slope&, const Slope&) = default;

private:
  Integer p_;
  Integer q_;
};

/// Element of GL(2, Z) acting on curve classes as column vectors.
class GluingMap {
public:
  // Throws DomainError unless m is 2x2 with determinant +1 or -1.
  explicit GluingMap(IntegerMatrix m);
  GluingMap(long a, long b, long c, long d);

  const IntegerMatrix& matrix() const noexcept { return m_; }
  Integer determinant() const { return m_.determinant(); }
  GluingMap inverse() const;

  // (g * h) acts as g after h.
  friend GluingMap operator*(const GluingMap& g, const GluingMap& h) { return GluingMap(g.m_ * h.m_); }
  friend bool operator==(const GluingMap&, const GluingMap&) = default;

private:
  IntegerMatrix m_;
};

Slope transform_slope(const GluingMap& g, const Slope& s);

struct SeifertData {
  // Throws UsageError on an empty list.
  explicit SeifertData(std::vector<Rational> coefficients);
  std::vector<Rational> coefficients;
};

Rational euler_number(const SeifertData& data);

/// -Sigma(2,3,6n-1) as M(-1/2, 1/3, n/(6n-1)): the product piece glued to
/// three solid tori along these maps from the solid torus boundaries.
struct BrieskornSplitting {
  long n;
  GluingMap phi1;
  GluingMap phi2;
  GluingMap phi3;

  SeifertData seifert() const;
};

// Throws DomainError for n < 2.
BrieskornSplitting brieskorn_splitting(long n);

// Dividing slopes on the three torus boundaries when each singular fibre has a
// standard neighbourhood with dividing slope 1/n_i (all n_i < 0).
std::array<Slope, 3> boundary_slopes(long n, long n1, long n2, long n3);

// Tight structures on a solid torus with integer boundary slope -k, k >= 1,
// counted up to isotopy rel boundary: k. Other slopes throw DomainError.
Integer solid_torus_tight_count(const Slope& s);

}  // namespace legsurg::torus
