#include "legsurg/handle/handle.hpp"

#include <exception>
#include <numeric>
#include <random>
#include <set>

#include "legsurg/errors.hpp"

namespace legsurg::handle {

namespace {

using namespace vars;

HandleData make_standard() {
  HandleData h;
  h.omega = Form::basis({0, 1}) + Form::basis({2, 3});
  const Rational half(1, 2);
  h.f2 = x1() * x1() - Poly(half) * y1() * y1() + x2() * x2() - Poly(half) * y2() * y2();
  h.v2.components = {Poly(2) * x1(), -y1(), Poly(2) * x2(), -y2()};
  h.alpha2 = Form::basis({0}, y1()) + Form::basis({1}, Poly(2) * x1()) + Form::basis({2}, y2()) +
             Form::basis({3}, Poly(2) * x2());
  h.handle_f = A() * (x1() * x1() + x2() * x2()) - Poly(half) * (y1() * y1() + y2() * y2()) - Poly(1);
  h.transversality = Poly(4) * A() * (x1() * x1() + x2() * x2()) + y1() * y1() + y2() * y2();

  const Poly tx1 = Poly(2) * x1();
  const Poly tx2 = Poly(2) * x2();
  const std::array<std::array<Poly, 4>, 4> rows{{{tx1, y1(), -tx2, y2()},
                                                 {-y1(), tx1, -y2(), -tx2},
                                                 {tx2, y2(), tx1, -y1()},
                                                 {-y2(), tx2, y1(), tx1}}};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t k = 0; k < 4; ++k) h.theta(i, k) = rows[i][k];
  h.theta_norm = Poly(4) * x1() * x1() + y1() * y1() + Poly(4) * x2() * x2() + y2() * y2();

  // omega(u, w) = u^T J w in the order (x1, y1, x2, y2).
  h.j(0, 1) = Poly(1);
  h.j(1, 0) = Poly(-1);
  h.j(2, 3) = Poly(1);
  h.j(3, 2) = Poly(-1);

  h.monodromy = algebra::IntegerMatrix{{1, 1}, {-1, 0}};
  h.lower = algebra::IntegerMatrix{{1, 0}, {-1, 1}};
  h.upper = algebra::IntegerMatrix{{1, 1}, {0, 1}};
  return h;
}

const Form& contact_volume() {
  static const Form eta = [] {
    const auto& h = standard_handle_data();
    return wedge(h.alpha2, exterior_d(h.alpha2));
  }();
  return eta;
}

Rational quadratic(const Point& x, const Rational& a_xx) {
  const Rational half(1, 2);
  return a_xx * (x[0] * x[0] + x[2] * x[2]) - half * (x[1] * x[1] + x[3] * x[3]);
}

Rational bilinear(const Point& x, const Point& y, const Rational& a_xx) {
  const Rational half(1, 2);
  return a_xx * (x[0] * y[0] + x[2] * y[2]) - half * (x[1] * y[1] + x[3] * y[3]);
}

std::string key(const Point& p) {
  std::string k;
  for (const auto& c : p) k += c.to_string() + ",";
  return k;
}

// Second intersections with the level set of
// a_xx (x1^2 + x2^2) - (y1^2 + y2^2)/2 through `seed` of lines through `seed`.
std::vector<Point> points_on_quadric(const Point& seed, const Rational& a_xx, std::vector<Point> out,
                                     std::size_t count, std::uint64_t seed_value) {
  std::set<std::string> seen;
  for (const auto& p : out) seen.insert(key(p));
  std::mt19937_64 rng(seed_value);
  const std::size_t max_attempts = 200 * (count + 1);
  for (std::size_t attempt = 0; out.size() < count && attempt < max_attempts; ++attempt) {
    Point dir;
    for (auto& c : dir) c = Rational(static_cast<long>(rng() % 9) - 4);
    const Rational q = quadratic(dir, a_xx);
    const Rational b = bilinear(seed, dir, a_xx);
    if (q.is_zero() || b.is_zero()) continue;
    const Rational t = Rational(-2) * b / q;
    Point p;
    for (std::size_t i = 0; i < kCoords; ++i) p[i] = seed[i] + t * dir[i];
    if (seen.insert(key(p)).second) out.push_back(std::move(p));
  }
  return out;
}

std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r.sign() < 0) return std::nullopt;
  if (!mpz_perfect_square_p(r.num().get_mpz_t()) || !mpz_perfect_square_p(r.den().get_mpz_t())) {
    return std::nullopt;
  }
  algebra::Integer n;
  algebra::Integer d;
  mpz_sqrt(n.get_mpz_t(), r.num().get_mpz_t());
  mpz_sqrt(d.get_mpz_t(), r.den().get_mpz_t());
  return Rational(n, d);
}

template <typename T, typename Fn>
std::vector<T> parallel_map(std::size_t n, Fn fn) {
  std::vector<T> out(n);
  std::exception_ptr error;
  const auto total = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t k = 0; k < total; ++k) {
    try {
      out[static_cast<std::size_t>(k)] = fn(static_cast<std::size_t>(k));
    } catch (...) {
#pragma omp critical(legsurg_handle_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

void require_on_x_minus(const Point& pt) {
  const Rational residual = standard_handle_data().f2.evaluate(pt) + Rational(1);
  if (!residual.is_zero()) {
    throw PreconditionError("point is not on X- (f2 + 1 = " + residual.to_string() + ")", residual.to_string());
  }
}

}  // namespace

const HandleData& standard_handle_data() {
  static const HandleData data = make_standard();
  return data;
}

bool HandleReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return !checks.empty();
}

HandleReport verify_handle_identities(const HandleData& h) {
  HandleReport report;

  const Form liouville = exterior_d(interior_product(h.v2, h.omega));
  report.checks.push_back({"liouville", liouville == h.omega,
                           "d(i_v2 omega) = " + liouville.to_string() + "; omega = " + h.omega.to_string()});

  const VField grad = gradient(h.f2);
  report.checks.push_back(
      {"gradient", grad == h.v2, "grad f2 = " + grad.to_string() + "; v2 = " + h.v2.to_string()});

  const Form contracted = interior_product(h.v2, h.omega);
  report.checks.push_back({"alpha", contracted == h.alpha2,
                           "i_v2 omega = " + contracted.to_string() + "; alpha2 = " + h.alpha2.to_string()});

  const PolyMatrix mt = h.theta.transpose();
  const bool orthogonal = mt * h.theta == h.theta_norm * PolyMatrix::identity();
  const bool symplectic = mt * h.j * h.theta == h.theta_norm * h.j;
  report.checks.push_back({"theta", orthogonal && symplectic,
                           std::string("M^T M = N I: ") + (orthogonal ? "yes" : "no") +
                               "; M^T J M = N J: " + (symplectic ? "yes" : "no") +
                               "; N = " + h.theta_norm.to_string()});

  const algebra::IntegerMatrix product = h.lower * h.upper;
  report.checks.push_back({"monodromy", product == h.monodromy,
                           h.lower.to_string() + " * " + h.upper.to_string() + " = " + product.to_string()});

  const Poly flux = dot(gradient(h.handle_f), h.v2);
  report.checks.push_back({"transversality", flux == h.transversality,
                           "grad F . v2 = " + flux.to_string() + "; expected " + h.transversality.to_string()});
  return report;
}

std::vector<bool> evaluate_identities_at(const HandleData& h, const Point& pt, const Rational& a) {
  std::vector<bool> out;
  out.push_back(exterior_d(interior_product(h.v2, h.omega)).evaluate(pt, a) == h.omega.evaluate(pt, a));
  out.push_back(gradient(h.f2).evaluate(pt, a) == h.v2.evaluate(pt, a));
  out.push_back(interior_product(h.v2, h.omega).evaluate(pt, a) == h.alpha2.evaluate(pt, a));

  const PolyMatrix m = h.theta.evaluate(pt, a);
  const PolyMatrix j = h.j.evaluate(pt, a);
  const Poly n(h.theta_norm.evaluate(pt, a));
  out.push_back(m.transpose() * m == n * PolyMatrix::identity() && m.transpose() * j * m == n * j);

  out.push_back(h.lower * h.upper == h.monodromy);

  const Vec4 g = gradient(h.handle_f).evaluate(pt, a);
  const Vec4 v = h.v2.evaluate(pt, a);
  Rational flux;
  for (std::size_t i = 0; i < kCoords; ++i) flux += g[i] * v[i];
  out.push_back(flux == h.transversality.evaluate(pt, a));
  return out;
}

std::array<Vec4, 3> tangent_completion(const Point& pt) {
  const Vec4 g = standard_handle_data().v2.evaluate(pt);
  std::size_t k = 0;
  while (k < kCoords && g[k].is_zero()) ++k;
  if (k == kCoords) throw DomainError("v2 vanishes at the origin");

  // b = g_k e_j - g_j e_k is orthogonal to grad f2 = v2.
  std::array<Vec4, 3> basis;
  std::size_t slot = 0;
  for (std::size_t j = 0; j < kCoords; ++j) {
    if (j == k) continue;
    Vec4 b;
    b[j] = g[k];
    b[k] = -g[j];
    basis[slot++] = b;
  }
  if (det4(g, basis[0], basis[1], basis[2]).sign() < 0) {
    for (auto& c : basis[0]) c = -c;
  }
  return basis;
}

Rational contact_positivity_with_basis(const Point& pt, const std::array<Vec4, 3>& basis) {
  require_on_x_minus(pt);
  const Vec4 v = standard_handle_data().v2.evaluate(pt);
  if (det4(v, basis[0], basis[1], basis[2]).sign() <= 0) {
    throw UsageError("(v2, b1, b2, b3) is not a positively oriented basis");
  }
  return contact_volume().evaluate_on(pt, basis);
}

Rational contact_positivity_at(const Point& pt) {
  require_on_x_minus(pt);
  return contact_positivity_with_basis(pt, tangent_completion(pt));
}

Rational sigma_transversality_at(const Rational& a, const Point& pt) {
  if (a <= Rational(1)) throw DomainError("handle parameter A must exceed 1, got " + a.to_string());
  const auto& h = standard_handle_data();
  const Rational residual = h.handle_f.evaluate(pt, a);
  if (!residual.is_zero()) {
    throw PreconditionError("point is not on F = 0 (F = " + residual.to_string() + ")", residual.to_string());
  }
  return dot(gradient(h.handle_f), h.v2).evaluate(pt, a);
}

std::vector<Point> sample_x_minus(std::size_t count, std::uint64_t seed) {
  const Point first{Rational(0), Rational(1), Rational(0), Rational(1)};
  const Point second{Rational(1), Rational(2), Rational(0), Rational(0)};
  std::vector<Point> out;
  if (count > 0) out.push_back(first);
  if (count > 1) out.push_back(second);
  return points_on_quadric(first, Rational(1), std::move(out), count, seed);
}

std::optional<Point> sigma_seed(const Rational& a) {
  std::vector<Rational> grid;
  grid.emplace_back(0);
  for (long den = 1; den <= 3; ++den)
    for (long num = 1; num <= 4; ++num)
      if (std::gcd(num, den) == 1) grid.emplace_back(num, den);
  for (const auto& x1 : grid) {
    for (const auto& x2 : grid) {
      const Rational budget = Rational(2) * (a * (x1 * x1 + x2 * x2) - Rational(1));
      if (budget.sign() < 0) continue;
      for (const auto& y1 : grid) {
        if (auto y2 = rational_sqrt(budget - y1 * y1)) return Point{x1, y1, x2, *y2};
      }
    }
  }
  return std::nullopt;
}

std::vector<Point> sample_sigma(const Rational& a, std::size_t count, std::uint64_t seed) {
  const auto start = sigma_seed(a);
  if (!start || count == 0) return {};
  return points_on_quadric(*start, a, {*start}, count, seed);
}

std::vector<Point> random_points(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Point> out(count);
  for (auto& p : out)
    for (auto& c : p) c = Rational(static_cast<long>(rng() % 19) - 9, static_cast<long>(rng() % 5) + 1);
  return out;
}

std::vector<Rational> random_parameters(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<Rational> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const long den = static_cast<long>(rng() % 4) + 1;
    out.emplace_back(den + 1 + static_cast<long>(rng() % (9 * static_cast<unsigned long>(den))), den);
  }
  return out;
}

std::vector<Rational> contact_positivity_batch(const std::vector<Point>& points) {
  return parallel_map<Rational>(points.size(), [&](std::size_t k) { return contact_positivity_at(points[k]); });
}

std::vector<Rational> contact_positivity_batch_serial(const std::vector<Point>& points) {
  std::vector<Rational> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(contact_positivity_at(p));
  return out;
}

std::vector<Rational> transversality_batch(const Rational& a, const std::vector<Point>& points) {
  return parallel_map<Rational>(points.size(),
                                [&](std::size_t k) { return sigma_transversality_at(a, points[k]); });
}

std::vector<Rational> transversality_batch_serial(const Rational& a, const std::vector<Point>& points) {
  std::vector<Rational> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(sigma_transversality_at(a, p));
  return out;
}

std::vector<std::vector<bool>> evaluate_identities_batch(const HandleData& data, const std::vector<Point>& points,
                                                         const std::vector<Rational>& a_values) {
  if (a_values.size() != points.size()) throw UsageError("one A value per sample point is required");
  return parallel_map<std::vector<bool>>(
      points.size(), [&](std::size_t k) { return evaluate_identities_at(data, points[k], a_values[k]); });
}

std::vector<std::vector<bool>> evaluate_identities_batch_serial(const HandleData& data,
                                                                const std::vector<Point>& points,
                                                                const std::vector<Rational>& a_values) {
  if (a_values.size() != points.size()) throw UsageError("one A value per sample point is required");
  std::vector<std::vector<bool>> out;
  out.reserve(points.size());
  for (std::size_t k = 0; k < points.size(); ++k) out.push_back(evaluate_identities_at(data, points[k], a_values[k]));
  return out;
}

}  // namespace legsurg::handle
