#pragma once

#include <array>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "legsurg/handle/poly.hpp"

namespace legsurg::handle {

// Basis covector dx1, dy1, dx2, dy2 as bit 0..3 of a multi-index mask.
using BasisMask = unsigned;
using Vec4 = std::array<Rational, kCoords>;

/// Differential form on R^4 with polynomial coefficients.
///
/// A term is keyed by the set of basis covectors it wedges, always read in
/// increasing coordinate order, so dy1^dx1 is stored as -dx1^dy1.
class Form {
public:
  explicit Form(unsigned degree = 0) : degree_(degree) {}

  static Form scalar(Poly f);
  // dx_i for coordinate i in 0..3.
  static Form coordinate(std::size_t i);
  // c * dx_{i1} ^ ... ^ dx_{ik} for arbitrary (possibly unsorted) indices.
  static Form basis(std::initializer_list<std::size_t> indices, Poly c = Poly(1));

  unsigned degree() const noexcept { return degree_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  const std::map<BasisMask, Poly>& terms() const noexcept { return terms_; }
  Poly coefficient(BasisMask mask) const;

  Form& operator+=(const Form& rhs);
  Form& operator-=(const Form& rhs);
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(const Poly& f, const Form& w);
  friend bool operator==(const Form& a, const Form& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  // Coefficients at a point; the result has constant coefficients.
  Form evaluate(const Point& pt, const Rational& a = Rational()) const;
  // Value on `degree()` tangent vectors at a point.
  Rational evaluate_on(const Point& pt, std::span<const Vec4> vectors, const Rational& a = Rational()) const;

  // "3/2*x1^2*dy1^dx2 + dx1^dy1"; terms in lexicographic order of the basis index.
  std::string to_string() const;

  void add_term(BasisMask mask, const Poly& c);

private:
  unsigned degree_;
  std::map<BasisMask, Poly> terms_;
};

/// Vector field sum v_i d/d(coord_i).
struct VField {
  std::array<Poly, kCoords> components;

  Vec4 evaluate(const Point& pt, const Rational& a = Rational()) const;
  friend bool operator==(const VField&, const VField&) = default;
  std::string to_string() const;
};

// Exterior derivative; A is treated as a constant.
Form exterior_d(const Form& w);
// Zero (with degree |a| + |b|) when the degree exceeds 4.
Form wedge(const Form& a, const Form& b);
// Throws DomainError on 0-forms.
Form interior_product(const VField& v, const Form& w);
VField gradient(const Poly& f);
// Euclidean pairing sum u_i v_i.
Poly dot(const VField& u, const VField& v);

/// 4x4 matrix of polynomials.
class PolyMatrix {
public:
  PolyMatrix() = default;
  static PolyMatrix identity();

  Poly& operator()(std::size_t i, std::size_t j) { return cells_[i][j]; }
  const Poly& operator()(std::size_t i, std::size_t j) const { return cells_[i][j]; }

  PolyMatrix transpose() const;
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator*(const Poly& f, const PolyMatrix& m);
  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

  PolyMatrix evaluate(const Point& pt, const Rational& a = Rational()) const;

private:
  std::array<std::array<Poly, kCoords>, kCoords> cells_;
};

// Determinant of the 4x4 matrix with the given columns.
Rational det4(const Vec4& c0, const Vec4& c1, const Vec4& c2, const Vec4& c3);

}  // namespace legsurg::handle
