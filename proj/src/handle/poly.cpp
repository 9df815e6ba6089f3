#include "legsurg/handle/poly.hpp"

#include <numeric>

namespace legsurg::handle {

namespace {

constexpr const char* kVarNames[kVars] = {"x1", "y1", "x2", "y2", "A"};

unsigned total(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

std::string monomial_text(const Exponents& e) {
  std::string out;
  for (std::size_t i = 0; i < kVars; ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += kVarNames[i];
    if (e[i] > 1) out += '^' + std::to_string(e[i]);
  }
  return out;
}

}  // namespace

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  const unsigned da = total(a);
  const unsigned db = total(b);
  if (da != db) return da > db;
  return a > b;
}

Poly::Poly(Rational constant) {
  if (!constant.is_zero()) terms_.emplace(Exponents{}, std::move(constant));
}

Poly Poly::var(Var v) {
  Exponents e{};
  e[static_cast<std::size_t>(v)] = 1;
  return monomial(Rational(1), e);
}

Poly Poly::monomial(Rational coeff, Exponents e) {
  Poly p;
  p.add_term(e, coeff);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total(terms_.begin()->first) == 0);
}

unsigned Poly::degree() const { return terms_.empty() ? 0 : total(terms_.begin()->first); }

void Poly::add_term(const Exponents& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Poly Poly::derivative(Var v) const {
  const auto k = static_cast<std::size_t>(v);
  Poly out;
  for (const auto& [e, c] : terms_) {
    if (e[k] == 0) continue;
    Exponents d = e;
    --d[k];
    out.add_term(d, c * Rational(static_cast<long>(e[k])));
  }
  return out;
}

Rational Poly::evaluate(const Point& pt, const Rational& a) const {
  Rational sum;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < kVars; ++i) {
      const Rational& base = i < kCoords ? pt[i] : a;
      for (unsigned k = 0; k < e[i]; ++k) term *= base;
    }
    sum += term;
  }
  return sum;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
  *this = *this * rhs;
  return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
  Poly out;
  for (const auto& [ea, ca] : lhs.terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      Exponents e;
      for (std::size_t i = 0; i < kVars; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational mag = negative ? -c : c;
    const std::string mono = monomial_text(e);
    if (mono.empty()) {
      out += mag.to_string();
    } else if (mag == Rational(1)) {
      out += mono;
    } else {
      out += mag.to_string() + '*' + mono;
    }
  }
  return out;
}

}  // namespace legsurg::handle
