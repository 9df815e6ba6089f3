#include "legsurg/torus/torus.hpp"

#include "legsurg/errors.hpp"

namespace legsurg::torus {

Slope::Slope(Integer p, Integer q) : p_(std::move(p)), q_(std::move(q)) {
  if (sgn(p_) == 0 && sgn(q_) == 0) throw DomainError("slope class (0, 0) is not a curve");
  if (sgn(q_) < 0 || (sgn(q_) == 0 && sgn(p_) < 0)) {
    p_ = -p_;
    q_ = -q_;
  }
  Integer g;
  mpz_gcd(g.get_mpz_t(), p_.get_mpz_t(), q_.get_mpz_t());
  p_ /= g;
  q_ /= g;
}

Slope Slope::from_rational(const Rational& r) { return Slope(r.num(), r.den()); }

Slope Slope::parse(std::string_view text) {
  if (text == "inf") return infinity();
  return from_rational(Rational::parse(text));
}

Rational Slope::value() const {
  if (is_infinite()) throw DomainError("the infinite slope has no rational value");
  return Rational(p_, q_);
}

std::string Slope::to_string() const {
  if (is_infinite()) return "inf";
  if (q_ == 1) return p_.get_str();
  return p_.get_str() + "/" + q_.get_str();
}

GluingMap::GluingMap(IntegerMatrix m) : m_(std::move(m)) {
  if (m_.rows() != 2 || m_.cols() != 2) throw DomainError("gluing map must be 2x2");
  const Integer det = m_.determinant();
  if (det != 1 && det != -1) {
    throw DomainError("gluing map must have determinant +-1, got " + det.get_str());
  }
}

GluingMap::GluingMap(long a, long b, long c, long d) : GluingMap(IntegerMatrix{{a, b}, {c, d}}) {}

GluingMap GluingMap::inverse() const {
  const Integer det = determinant();
  IntegerMatrix inv(2, 2);
  inv(0, 0) = det * m_(1, 1);
  inv(0, 1) = -det * m_(0, 1);
  inv(1, 0) = -det * m_(1, 0);
  inv(1, 1) = det * m_(0, 0);
  return GluingMap(std::move(inv));
}

Slope transform_slope(const GluingMap& g, const Slope& s) {
  const auto& m = g.matrix();
  // Column vector (q, p).
  Integer q = m(0, 0) * s.q() + m(0, 1) * s.p();
  Integer p = m(1, 0) * s.q() + m(1, 1) * s.p();
  return Slope(std::move(p), std::move(q));
}

SeifertData::SeifertData(std::vector<Rational> coeffs) : coefficients(std::move(coeffs)) {
  if (coefficients.empty()) throw UsageError("Seifert data needs at least one coefficient");
}

Rational euler_number(const SeifertData& data) {
  Rational e;
  for (const auto& r : data.coefficients) e += r;
  return e;
}

SeifertData BrieskornSplitting::seifert() const {
  return SeifertData({Rational(-1, 2), Rational(1, 3), Rational(n, 6 * n - 1)});
}

BrieskornSplitting brieskorn_splitting(long n) {
  if (n < 2) {
    throw DomainError("Brieskorn splitting needs n >= 2 (-Sigma(2,3,5) carries no tight structure), got " +
                      std::to_string(n));
  }
  return BrieskornSplitting{n, GluingMap(2, -1, 1, 0), GluingMap(3, 1, -1, 0),
                            GluingMap(6 * n - 1, 6, -n, -1)};
}

std::array<Slope, 3> boundary_slopes(long n, long n1, long n2, long n3) {
  if (n1 >= 0 || n2 >= 0 || n3 >= 0) {
    throw DomainError("standard neighbourhood slopes 1/n_i need every n_i < 0");
  }
  const auto split = brieskorn_splitting(n);
  return {transform_slope(split.phi1, Slope(1, n1)), transform_slope(split.phi2, Slope(1, n2)),
          transform_slope(split.phi3, Slope(1, n3))};
}

Integer solid_torus_tight_count(const Slope& s) {
  if (!s.is_integer() || sgn(s.p()) >= 0) {
    throw DomainError("solid torus count is only supported for negative integer slopes, got " + s.to_string());
  }
  return -s.p();
}

}  // namespace legsurg::torus
