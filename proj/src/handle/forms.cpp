#include "legsurg/handle/forms.hpp"

#include <algorithm>
#include <bit>
#include <vector>

#include "legsurg/errors.hpp"

namespace legsurg::handle {

namespace {

constexpr const char* kCovectorNames[kCoords] = {"dx1", "dy1", "dx2", "dy2"};

std::vector<std::size_t> indices_of(BasisMask mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < kCoords; ++i)
    if (mask & (1u << i)) out.push_back(i);
  return out;
}

// Sign of reordering (a-block, b-block) into increasing order.
int merge_sign(BasisMask a, BasisMask b) {
  int swaps = 0;
  for (std::size_t j = 0; j < kCoords; ++j)
    if (b & (1u << j)) swaps += std::popcount(a & ~((2u << j) - 1));
  return swaps % 2 == 0 ? 1 : -1;
}

Rational small_det(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  if (n == 0) return Rational(1);
  Rational det(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k].is_zero()) ++pivot;
    if (pivot == n) return Rational();
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      det = -det;
    }
    det *= m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i][k].is_zero()) continue;
      const Rational f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return det;
}

// Lexicographic order of the sorted index tuples.
bool index_less(BasisMask a, BasisMask b) { return indices_of(a) < indices_of(b); }

}  // namespace

Form Form::scalar(Poly f) {
  Form w(0);
  w.add_term(0, f);
  return w;
}

Form Form::coordinate(std::size_t i) { return basis({i}); }

Form Form::basis(std::initializer_list<std::size_t> indices, Poly c) {
  Form w(static_cast<unsigned>(indices.size()));
  BasisMask mask = 0;
  int sign = 1;
  for (std::size_t i : indices) {
    if (i >= kCoords) throw UsageError("basis covector index out of range");
    if (mask & (1u << i)) return w;
    sign *= merge_sign(mask, 1u << i);
    mask |= 1u << i;
  }
  w.add_term(mask, sign < 0 ? -c : c);
  return w;
}

Poly Form::coefficient(BasisMask mask) const {
  const auto it = terms_.find(mask);
  return it == terms_.end() ? Poly() : it->second;
}

void Form::add_term(BasisMask mask, const Poly& c) {
  if (c.is_zero()) return;
  if (static_cast<unsigned>(std::popcount(mask)) != degree_) {
    throw UsageError("term of wrong degree added to a " + std::to_string(degree_) + "-form");
  }
  auto [it, inserted] = terms_.try_emplace(mask, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Form& Form::operator+=(const Form& rhs) {
  if (rhs.degree_ != degree_) throw UsageError("adding forms of different degrees");
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Form& Form::operator-=(const Form& rhs) {
  if (rhs.degree_ != degree_) throw UsageError("subtracting forms of different degrees");
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Form operator*(const Poly& f, const Form& w) {
  Form out(w.degree_);
  for (const auto& [m, c] : w.terms_) out.add_term(m, f * c);
  return out;
}

Form Form::evaluate(const Point& pt, const Rational& a) const {
  Form out(degree_);
  for (const auto& [m, c] : terms_) out.add_term(m, Poly(c.evaluate(pt, a)));
  return out;
}

Rational Form::evaluate_on(const Point& pt, std::span<const Vec4> vectors, const Rational& a) const {
  if (vectors.size() != degree_) {
    throw UsageError("a " + std::to_string(degree_) + "-form needs " + std::to_string(degree_) + " vectors");
  }
  Rational total;
  for (const auto& [m, c] : terms_) {
    const auto idx = indices_of(m);
    std::vector<std::vector<Rational>> minor(degree_, std::vector<Rational>(degree_));
    for (std::size_t r = 0; r < degree_; ++r)
      for (std::size_t s = 0; s < degree_; ++s) minor[r][s] = vectors[r][idx[s]];
    total += c.evaluate(pt, a) * small_det(std::move(minor));
  }
  return total;
}

std::string Form::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<BasisMask> masks;
  for (const auto& [m, c] : terms_) masks.push_back(m);
  std::sort(masks.begin(), masks.end(), index_less);

  std::string out;
  for (BasisMask m : masks) {
    std::string basis;
    for (std::size_t i : indices_of(m)) basis += (basis.empty() ? "" : "^") + std::string(kCovectorNames[i]);
    const Poly& c = terms_.at(m);
    std::string term;
    if (basis.empty()) {
      term = c.to_string();
    } else if (c == Poly(1)) {
      term = basis;
    } else if (c.terms().size() == 1) {
      term = c.to_string() + "*" + basis;
    } else {
      term = "(" + c.to_string() + ")*" + basis;
    }
    if (out.empty()) {
      out = term;
    } else if (term.front() == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

Vec4 VField::evaluate(const Point& pt, const Rational& a) const {
  Vec4 out;
  for (std::size_t i = 0; i < kCoords; ++i) out[i] = components[i].evaluate(pt, a);
  return out;
}

std::string VField::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < kCoords; ++i) out += (i ? ", " : "") + components[i].to_string();
  return out + ")";
}

Form exterior_d(const Form& w) {
  Form out(w.degree() + 1);
  if (w.degree() >= kCoords) return out;
  for (const auto& [m, c] : w.terms()) {
    for (std::size_t j = 0; j < kCoords; ++j) {
      if (m & (1u << j)) continue;
      const Poly dc = c.derivative(static_cast<Var>(j));
      if (dc.is_zero()) continue;
      const int sign = merge_sign(1u << j, m);
      out.add_term(m | (1u << j), sign < 0 ? -dc : dc);
    }
  }
  return out;
}

Form wedge(const Form& a, const Form& b) {
  Form out(a.degree() + b.degree());
  if (out.degree() > kCoords) return out;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      if (ma & mb) continue;
      const Poly c = ca * cb;
      out.add_term(ma | mb, merge_sign(ma, mb) < 0 ? -c : c);
    }
  }
  return out;
}

Form interior_product(const VField& v, const Form& w) {
  if (w.degree() == 0) throw DomainError("interior product of a 0-form");
  Form out(w.degree() - 1);
  for (const auto& [m, c] : w.terms()) {
    int position = 0;
    for (std::size_t i = 0; i < kCoords; ++i) {
      if (!(m & (1u << i))) continue;
      const Poly term = v.components[i] * c;
      out.add_term(m & ~(1u << i), position % 2 == 0 ? term : -term);
      ++position;
    }
  }
  return out;
}

VField gradient(const Poly& f) {
  VField g;
  for (std::size_t i = 0; i < kCoords; ++i) g.components[i] = f.derivative(static_cast<Var>(i));
  return g;
}

Poly dot(const VField& u, const VField& v) {
  Poly out;
  for (std::size_t i = 0; i < kCoords; ++i) out += u.components[i] * v.components[i];
  return out;
}

PolyMatrix PolyMatrix::identity() {
  PolyMatrix m;
  for (std::size_t i = 0; i < kCoords; ++i) m(i, i) = Poly(1);
  return m;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t;
  for (std::size_t i = 0; i < kCoords; ++i)
    for (std::size_t j = 0; j < kCoords; ++j) t(j, i) = (*this)(i, j);
  return t;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix c;
  for (std::size_t i = 0; i < kCoords; ++i)
    for (std::size_t j = 0; j < kCoords; ++j)
      for (std::size_t k = 0; k < kCoords; ++k) c(i, j) += a(i, k) * b(k, j);
  return c;
}

PolyMatrix operator*(const Poly& f, const PolyMatrix& m) {
  PolyMatrix c;
  for (std::size_t i = 0; i < kCoords; ++i)
    for (std::size_t j = 0; j < kCoords; ++j) c(i, j) = f * m(i, j);
  return c;
}

PolyMatrix PolyMatrix::evaluate(const Point& pt, const Rational& a) const {
  PolyMatrix out;
  for (std::size_t i = 0; i < kCoords; ++i)
    for (std::size_t j = 0; j < kCoords; ++j) out(i, j) = Poly((*this)(i, j).evaluate(pt, a));
  return out;
}

Rational det4(const Vec4& c0, const Vec4& c1, const Vec4& c2, const Vec4& c3) {
  std::vector<std::vector<Rational>> m(kCoords, std::vector<Rational>(kCoords));
  const std::array<const Vec4*, kCoords> cols{&c0, &c1, &c2, &c3};
  for (std::size_t i = 0; i < kCoords; ++i)
    for (std::size_t j = 0; j < kCoords; ++j) m[i][j] = (*cols[j])[i];
  return small_det(std::move(m));
}

}  // namespace legsurg::handle
