#include <doctest.h>

#include <algorithm>

#include "legsurg/errors.hpp"
#include "legsurg/handle/forms.hpp"
#include "legsurg/handle/handle.hpp"
#include "legsurg/handle/poly.hpp"
#include "test_support.hpp"

using namespace legsurg;
using namespace legsurg::handle;
using namespace legsurg::handle::vars;
using algebra::Integer;
using legsurg::testing::Gen;

namespace {

Rational q(long p, long d) { return Rational(Integer(p), Integer(d)); }

Point pt(Rational a, Rational b, Rational c, Rational d) { return {a, b, c, d}; }

Poly random_poly(Gen& gen, unsigned max_degree, bool with_a) {
  Poly p;
  const long terms = gen.range(0, 4);
  for (long t = 0; t < terms; ++t) {
    Exponents e{};
    unsigned budget = static_cast<unsigned>(gen.range(0, max_degree));
    while (budget-- > 0) ++e[static_cast<std::size_t>(gen.range(0, with_a ? 4 : 3))];
    p += Poly::monomial(gen.rational(5, 3), e);
  }
  return p;
}

Form random_form(Gen& gen, unsigned degree) {
  Form w(degree);
  for (BasisMask mask = 0; mask < 16; ++mask) {
    if (static_cast<unsigned>(__builtin_popcount(mask)) != degree) continue;
    if (gen.coin()) w.add_term(mask, random_poly(gen, 3, true));
  }
  return w;
}

VField random_field(Gen& gen) {
  VField v;
  for (auto& c : v.components) c = random_poly(gen, 2, true);
  return v;
}

Form sign(int s, const Form& w) { return Poly(s) * w; }

// alpha(b1) omega(b2,b3) - alpha(b2) omega(b1,b3) + alpha(b3) omega(b1,b2), with
// alpha = y1 dx1 + 2x1 dy1 + y2 dx2 + 2x2 dy2 and omega the standard form.
Rational contact_oracle(const Point& p, const std::array<Vec4, 3>& b) {
  const Vec4 alpha{p[1], Rational(2) * p[0], p[3], Rational(2) * p[2]};
  auto al = [&](const Vec4& u) {
    Rational s;
    for (std::size_t i = 0; i < 4; ++i) s += alpha[i] * u[i];
    return s;
  };
  auto om = [](const Vec4& u, const Vec4& v) { return u[0] * v[1] - u[1] * v[0] + u[2] * v[3] - u[3] * v[2]; };
  return al(b[0]) * om(b[1], b[2]) - al(b[1]) * om(b[0], b[2]) + al(b[2]) * om(b[0], b[1]);
}

Vec4 v2_at(const Point& p) { return {Rational(2) * p[0], -p[1], Rational(2) * p[2], -p[3]}; }

Rational f2_at(const Point& p) {
  return p[0] * p[0] - q(1, 2) * p[1] * p[1] + p[2] * p[2] - q(1, 2) * p[3] * p[3];
}

Vec4 random_vec(Gen& gen) {
  Vec4 v;
  for (auto& c : v) c = gen.rational(6, 3);
  return v;
}

}  // namespace

TEST_CASE("polynomial basics") {
  const Poly p = Poly(q(3, 2)) * x1() * x1() * y1() - A() * x2();
  CHECK(p.to_string() == "3/2*x1^2*y1 - x2*A");
  CHECK(p.degree() == 3);
  CHECK((p - p).is_zero());
  CHECK(Poly().to_string() == "0");
  CHECK(p.derivative(Var::X1) == Poly(3) * x1() * y1());
  CHECK(p.derivative(Var::A) == -x2());
  CHECK(p.evaluate(pt(Rational(2), Rational(1), Rational(3), Rational(0)), Rational(5)) == Rational(6 - 15));
}

TEST_CASE("exterior derivative examples") {
  const auto& h = standard_handle_data();
  CHECK(exterior_d(Form::scalar(x1())) == Form::coordinate(0));
  CHECK(exterior_d(h.alpha2) == h.omega);
  CHECK(exterior_d(exterior_d(Form::scalar(h.f2))).is_zero());
  CHECK(exterior_d(Form::basis({0, 1, 2, 3}, x1())).is_zero());
  // A is a constant.
  CHECK(exterior_d(Form::scalar(A() * x1())) == Form::basis({0}, A()));
}

TEST_CASE("wedge examples") {
  const auto& h = standard_handle_data();
  CHECK(wedge(Form::coordinate(0), Form::coordinate(0)).is_zero());
  CHECK(wedge(h.omega, h.omega) == Form::basis({0, 1, 2, 3}, Poly(2)));
  CHECK(wedge(h.alpha2, h.alpha2).is_zero());
  CHECK(Form::basis({1, 0}) == sign(-1, Form::basis({0, 1})));
  CHECK(Form::basis({1, 1}).is_zero());
  CHECK(h.omega.to_string() == "dx1^dy1 + dx2^dy2");
}

TEST_CASE("interior product examples") {
  const auto& h = standard_handle_data();
  CHECK(interior_product(h.v2, h.omega) == h.alpha2);
  VField ex1;
  ex1.components = {Poly(1), Poly(), Poly(), Poly()};
  CHECK(interior_product(ex1, Form::basis({0, 1})) == Form::coordinate(1));
  const Poly n = Poly(4) * x1() * x1() + y1() * y1() + Poly(4) * x2() * x2() + y2() * y2();
  CHECK(interior_product(h.v2, exterior_d(Form::scalar(h.f2))) == Form::scalar(n));
  CHECK_THROWS_AS(interior_product(h.v2, Form::scalar(x1())), DomainError);
}

TEST_CASE("gradient examples") {
  const auto& h = standard_handle_data();
  CHECK(gradient(h.f2) == h.v2);
  CHECK(gradient(x1()) == VField{{Poly(1), Poly(), Poly(), Poly()}});
  const VField expected{{Poly(2) * A() * x1(), -y1(), Poly(2) * A() * x2(), -y2()}};
  CHECK(gradient(h.handle_f) == expected);
}

TEST_CASE("property: d squared vanishes") {
  Gen gen(0xdd);
  for (int trial = 0; trial < 300; ++trial) {
    const auto k = static_cast<unsigned>(gen.range(0, 3));
    const Form w = random_form(gen, k);
    CHECK(exterior_d(exterior_d(w)).is_zero());
  }
}

TEST_CASE("property: Leibniz rule") {
  Gen gen(0x1e1b);
  for (int trial = 0; trial < 300; ++trial) {
    const auto ka = static_cast<unsigned>(gen.range(0, 2));
    const auto kb = static_cast<unsigned>(gen.range(0, 3 - static_cast<long>(ka)));
    const Form a = random_form(gen, ka);
    const Form b = random_form(gen, kb);
    const int s = (ka % 2 == 0) ? 1 : -1;
    CHECK(exterior_d(wedge(a, b)) == wedge(exterior_d(a), b) + sign(s, wedge(a, exterior_d(b))));
  }
}

TEST_CASE("property: interior product is an antiderivation") {
  Gen gen(0xa17);
  for (int trial = 0; trial < 300; ++trial) {
    const auto ka = static_cast<unsigned>(gen.range(1, 3));
    const auto kb = static_cast<unsigned>(gen.range(1, 4 - static_cast<long>(ka)));
    const Form a = random_form(gen, ka);
    const Form b = random_form(gen, kb);
    const VField v = random_field(gen);
    const int s = (ka % 2 == 0) ? 1 : -1;
    CHECK(interior_product(v, wedge(a, b)) ==
          wedge(interior_product(v, a), b) + sign(s, wedge(a, interior_product(v, b))));
  }
}

TEST_CASE("property: wedge is graded commutative") {
  Gen gen(0x9c);
  for (int trial = 0; trial < 200; ++trial) {
    const auto ka = static_cast<unsigned>(gen.range(0, 4));
    const auto kb = static_cast<unsigned>(gen.range(0, 4 - static_cast<long>(ka)));
    const Form a = random_form(gen, ka);
    const Form b = random_form(gen, kb);
    CHECK(wedge(a, b) == sign((ka * kb) % 2 == 0 ? 1 : -1, wedge(b, a)));
  }
}

TEST_CASE("all six handle identities hold") {
  const auto report = verify_handle_identities();
  REQUIRE(report.checks.size() == 6);
  const std::vector<std::string> names{"liouville", "gradient", "alpha", "theta", "monodromy", "transversality"};
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(report.checks[i].name == names[i]);
    CHECK_MESSAGE(report.checks[i].pass, report.checks[i].detail);
  }
  CHECK(report.all_pass());
}

TEST_CASE("monodromy factorization") {
  const auto& h = standard_handle_data();
  CHECK(h.lower * h.upper == algebra::IntegerMatrix({{1, 1}, {-1, 0}}));
}

TEST_CASE("theta numerator matches the displayed matrix and is conformally symplectic") {
  Gen gen(0x7e7a);
  const auto& h = standard_handle_data();
  for (int trial = 0; trial < 100; ++trial) {
    const long a = gen.range(-9, 9), b = gen.range(-9, 9), c = gen.range(-9, 9), d = gen.range(-9, 9);
    const long m[4][4] = {{2 * a, b, -2 * c, d}, {-b, 2 * a, -d, -2 * c}, {2 * c, d, 2 * a, -b}, {-d, 2 * c, b, 2 * a}};
    const long n = 4 * a * a + b * b + 4 * c * c + d * d;
    const auto mt = h.theta.evaluate(pt(Rational(a), Rational(b), Rational(c), Rational(d)));
    for (int i = 0; i < 4; ++i)
      for (int k = 0; k < 4; ++k) CHECK(mt(i, k).evaluate({}) == Rational(m[i][k]));
    const long j[4][4] = {{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}};
    for (int r = 0; r < 4; ++r)
      for (int s = 0; s < 4; ++s) {
        long gram = 0;
        long sympl = 0;
        for (int i = 0; i < 4; ++i) {
          gram += m[i][r] * m[i][s];
          for (int k = 0; k < 4; ++k) sympl += m[i][r] * j[i][k] * m[k][s];
        }
        CHECK(gram == (r == s ? n : 0));
        CHECK(sympl == n * j[r][s]);
      }
  }
}

TEST_CASE("a corrupted alpha fails the alpha item") {
  HandleData bad = standard_handle_data();
  bad.alpha2 = bad.alpha2 - Form::basis({0}, Poly(2) * y1());  // y1 dx1 -> -y1 dx1
  const auto report = verify_handle_identities(bad);
  CHECK_FALSE(report.checks[2].pass);
  CHECK(report.checks[1].pass);
  CHECK(report.checks[4].pass);
  CHECK_FALSE(report.all_pass());

  HandleData bad_mono = standard_handle_data();
  bad_mono.upper = algebra::IntegerMatrix{{1, -1}, {0, 1}};
  CHECK_FALSE(verify_handle_identities(bad_mono).checks[4].pass);

  HandleData bad_f = standard_handle_data();
  bad_f.transversality = bad_f.transversality + y1() * y1();
  CHECK_FALSE(verify_handle_identities(bad_f).checks[5].pass);
}

TEST_CASE("contact positivity examples") {
  const Point p1 = pt(Rational(0), Rational(1), Rational(0), Rational(1));
  const Point p2 = pt(Rational(1), Rational(2), Rational(0), Rational(0));
  for (const auto& p : {p1, p2}) {
    const Rational v = contact_positivity_at(p);
    CHECK(v > Rational(0));
    const auto basis = tangent_completion(p);
    CHECK(v == contact_oracle(p, basis));
    CHECK(v == det4(v2_at(p), basis[0], basis[1], basis[2]));
  }
  try {
    contact_positivity_at(pt(Rational(0), Rational(1), Rational(0), Rational(0)));
    FAIL("expected a precondition error");
  } catch (const PreconditionError& e) {
    CHECK(e.residual() == "1/2");
  }
}

TEST_CASE("sampled points on X- are positive") {
  const auto pts = sample_x_minus(40, 7);
  REQUIRE(pts.size() == 40);
  CHECK(pts[0] == pt(Rational(0), Rational(1), Rational(0), Rational(1)));
  CHECK(pts[1] == pt(Rational(1), Rational(2), Rational(0), Rational(0)));
  for (const auto& p : pts) {
    CHECK(f2_at(p) == Rational(-1));
    const auto basis = tangent_completion(p);
    const Rational v = contact_positivity_at(p);
    CHECK(v > Rational(0));
    CHECK(v == contact_oracle(p, basis));
    // Tangent to X-: orthogonal to grad f2 = v2.
    for (const auto& b : basis) {
      const Vec4 g = v2_at(p);
      CHECK(g[0] * b[0] + g[1] * b[1] + g[2] * b[2] + g[3] * b[3] == Rational(0));
    }
  }
}

TEST_CASE("property: positivity does not depend on the completion") {
  Gen gen(0xba5e);
  const auto pts = sample_x_minus(25, 3);
  for (const auto& p : pts) {
    const Vec4 v = v2_at(p);
    int tried = 0;
    while (tried < 8) {
      std::array<Vec4, 3> b{random_vec(gen), random_vec(gen), random_vec(gen)};
      if (gen.coin()) {
        // Project onto the tangent space of X-.
        const Rational vv = v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3];
        for (auto& u : b) {
          const Rational uv = u[0] * v[0] + u[1] * v[1] + u[2] * v[2] + u[3] * v[3];
          for (std::size_t i = 0; i < 4; ++i) u[i] -= uv / vv * v[i];
        }
      }
      const Rational det = det4(v, b[0], b[1], b[2]);
      if (det.is_zero()) continue;
      if (det.sign() < 0) std::swap(b[0], b[1]);
      ++tried;
      const Rational value = contact_positivity_with_basis(p, b);
      CHECK(value > Rational(0));
      CHECK(value == contact_oracle(p, b));
      std::swap(b[0], b[1]);
      CHECK_THROWS_AS(contact_positivity_with_basis(p, b), UsageError);
    }
  }
}

TEST_CASE("transversality examples") {
  const auto& h = standard_handle_data();
  // At x1^2 = 1/2, y = 0, x2 = 0, A = 2 only the 4A x1^2 term survives.
  const Poly flux = dot(gradient(h.handle_f), h.v2);
  CHECK(flux == h.transversality);
  Exponents ax1{};
  ax1[static_cast<std::size_t>(Var::X1)] = 2;
  ax1[static_cast<std::size_t>(Var::A)] = 1;
  CHECK(flux.terms().at(ax1) * Rational(2) * q(1, 2) == Rational(4));

  CHECK(sigma_transversality_at(Rational(2), pt(Rational(1), Rational(1), Rational(0), Rational(1))) == Rational(10));
  CHECK(sigma_transversality_at(q(3, 2), pt(Rational(1), Rational(1), Rational(0), Rational(0))) == Rational(7));
  CHECK_THROWS_AS(sigma_transversality_at(Rational(2), pt(Rational(0), Rational(0), Rational(0), Rational(0))),
                  PreconditionError);
  CHECK_THROWS_AS(sigma_transversality_at(Rational(1), pt(Rational(1), Rational(0), Rational(0), Rational(0))),
                  DomainError);
}

TEST_CASE("sampled points on F = 0 are positively transverse") {
  for (const Rational& a : {Rational(2), q(3, 2), Rational(5), q(7, 3)}) {
    const auto pts = sample_sigma(a, 20, 11);
    CHECK(sigma_seed(a).has_value());
    CHECK(pts.size() == 20);
    for (const auto& p : pts) {
      const Rational f = a * (p[0] * p[0] + p[2] * p[2]) - q(1, 2) * (p[1] * p[1] + p[3] * p[3]) - Rational(1);
      CHECK(f == Rational(0));
      const Rational expected = Rational(4) * a * (p[0] * p[0] + p[2] * p[2]) + p[1] * p[1] + p[3] * p[3];
      CHECK(sigma_transversality_at(a, p) == expected);
      CHECK(expected > Rational(0));
    }
  }
}

TEST_CASE("pointwise evaluation agrees with the symbolic verdicts") {
  const auto pts = random_points(100, 5);
  const auto as = random_parameters(100, 5);
  REQUIRE(pts.size() == 100);
  for (const auto& a : as) CHECK(a > Rational(1));
  const auto& h = standard_handle_data();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto row = evaluate_identities_at(h, pts[i], as[i]);
    CHECK(std::all_of(row.begin(), row.end(), [](bool b) { return b; }));
  }
  HandleData bad = h;
  bad.alpha2 = bad.alpha2 - Form::basis({0}, Poly(2) * y1());
  bool caught = false;
  for (std::size_t i = 0; i < pts.size(); ++i) caught = caught || !evaluate_identities_at(bad, pts[i], as[i])[2];
  CHECK(caught);
}

TEST_CASE("parallel kernels match the serial references") {
  const auto xm = sample_x_minus(60, 9);
  CHECK(contact_positivity_batch(xm) == contact_positivity_batch_serial(xm));
  const auto sg = sample_sigma(Rational(3), 60, 9);
  CHECK(transversality_batch(Rational(3), sg) == transversality_batch_serial(Rational(3), sg));
  const auto pts = random_points(60, 9);
  const auto as = random_parameters(60, 9);
  CHECK(evaluate_identities_batch(standard_handle_data(), pts, as) ==
        evaluate_identities_batch_serial(standard_handle_data(), pts, as));
  // Errors inside the parallel loop surface on the caller's thread.
  std::vector<Point> off = xm;
  off[17] = pt(Rational(0), Rational(0), Rational(0), Rational(0));
  CHECK_THROWS_AS(contact_positivity_batch(off), PreconditionError);
}
