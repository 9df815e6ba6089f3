// One PASS/FAIL line per acceptance criterion; exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "legsurg/algebra/continued_fraction.hpp"
#include "legsurg/algebra/homology.hpp"
#include "legsurg/algebra/smith.hpp"
#include "legsurg/brieskorn/brieskorn.hpp"
#include "legsurg/cli/cli.hpp"
#include "legsurg/criterion/criterion.hpp"
#include "legsurg/errors.hpp"
#include "legsurg/handle/handle.hpp"
#include "legsurg/legendrian/legendrian.hpp"
#include "legsurg/torus/torus.hpp"
#include "test_support.hpp"

using namespace legsurg;
using algebra::ClassInfo;
using algebra::Integer;
using algebra::IntegerMatrix;
using algebra::Rational;
using nlohmann::json;

namespace {

struct Result {
  bool ok = true;
  std::string note;
  void fail(const std::string& why) {
    if (ok) note = why;
    ok = false;
  }
  void expect(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

Rational q(long p, long d) { return Rational(Integer(p), Integer(d)); }

json cli_json(const std::vector<std::string>& args, int& code) {
  std::ostringstream out;
  code = cli::main_entry(args, out);
  return json::parse(out.str());
}

Result brieskorn_counts() {
  Result r;
  for (long n = 2; n <= 12; ++n) {
    int code = 0;
    const json d = cli_json({"brieskorn", "--n", std::to_string(n)}, code);
    r.expect(code == 0, "exit code " + std::to_string(code) + " at n=" + std::to_string(n));
    r.expect(d["upper_bound"] == n * (n - 1) / 2, "upper bound at n=" + std::to_string(n));
    r.expect(d["lower_bound"] == 2 * n - 3, "lower bound at n=" + std::to_string(n));
  }
  return r;
}

Result small_n_closure() {
  Result r;
  for (long n : {2L, 3L}) {
    int code = 0;
    const json d = cli_json({"brieskorn", "--n", std::to_string(n)}, code);
    const long expected = n == 2 ? 1 : 3;
    r.expect(code == 0, "exit code");
    r.expect(d["upper_bound"] == expected && d["lower_bound"] == expected, "bounds at n=" + std::to_string(n));
  }
  return r;
}

Result slope_reproduction() {
  Result r;
  for (long n = 2; n <= 6; ++n)
    for (long n1 = -10; n1 <= -1; ++n1)
      for (long n2 = -10; n2 <= -1; ++n2)
        for (long n3 = -10; n3 <= -1; ++n3) {
          const auto s = torus::boundary_slopes(n, n1, n2, n3);
          r.expect(s[0].value() == q(n1, 2 * n1 - 1), "s1");
          r.expect(s[1].value() == -q(n2, 3 * n2 + 1), "s2");
          r.expect(s[2].value() == -q(n * n3 + 1, (6 * n - 1) * n3 + 6), "s3");
        }
  return r;
}

Result interior_slopes() {
  Result r;
  for (long n = 2; n <= 12; ++n) {
    const auto inv = torus::brieskorn_splitting(n).phi3.inverse();
    for (long m = 1; m < n; ++m) {
      const auto v = torus::transform_slope(inv, torus::Slope(-m, 6 * m - 1));
      r.expect(v == torus::Slope(m - n, 1), "slope at (n,m)=(" + std::to_string(n) + "," + std::to_string(m) + ")");
      r.expect(torus::solid_torus_tight_count(v) == n - m, "solid torus count");
    }
  }
  return r;
}

Result criterion_behaviour() {
  using criterion::Hypothesis;
  using criterion::Verdict;
  Result r;
  r.expect(criterion::decide({{3, 0, 2, ClassInfo::torsion()}}, Hypothesis::WeaklyFillable).not_isotopic(),
           "torsion with p1 != p2");
  const auto hopf = algebra::class_divisibility(algebra::AbelianGroupPresentation::free(1),
                                                std::vector<Integer>{1});
  r.expect(hopf == ClassInfo::non_torsion(1), "hopf fibre class has d = 1");
  r.expect(criterion::decide({{4, 1, 3, hopf}}, Hypothesis::NonVanishingCPlus).kind == Verdict::Kind::Inconclusive,
           "hopf example");
  for (long d = 1; d <= 2; ++d)
    for (long p1 = 0; p1 <= 10; ++p1)
      for (long p2 = 0; p2 <= 10; ++p2)
        for (auto h : {Hypothesis::WeaklyFillable, Hypothesis::NonVanishingCPlus})
          r.expect(criterion::decide({{10, p1, p2, ClassInfo::non_torsion(d)}}, h).kind == Verdict::Kind::Inconclusive,
                   "d in {1,2} distinguished something");
  return r;
}

Result surgery_framing() {
  Result r;
  for (long n = 2; n <= 12; ++n)
    for (long m = 1; m < n; ++m) {
      legendrian::FramedLegendrian k;
      k.twisting = -m;
      for (long p = 0; p <= n - m - 1; ++p)
        r.expect(legendrian::surgery_framing(k, legendrian::StabilizationProfile(n - m - 1, p)) == -n, "framing");
    }
  return r;
}

Result handle_suite() {
  Result r;
  const auto report = handle::verify_handle_identities();
  r.expect(report.checks.size() == 6, "expected six items");
  for (const auto& c : report.checks) r.expect(c.pass, c.name + ": " + c.detail);
  return r;
}

Result contact_positivity() {
  Result r;
  const auto pts = handle::sample_x_minus(24, 1);
  r.expect(pts.size() >= 20, "fewer than 20 points");
  r.expect(pts[0] == handle::Point{Rational(0), Rational(1), Rational(0), Rational(1)}, "(0,1,0,1) missing");
  r.expect(pts[1] == handle::Point{Rational(1), Rational(2), Rational(0), Rational(0)}, "(1,2,0,0) missing");
  testing::Gen gen(2024);
  for (const auto& p : pts) {
    r.expect(handle::contact_positivity_at(p) > Rational(0), "non-positive value");
    const handle::Vec4 v{Rational(2) * p[0], -p[1], Rational(2) * p[2], -p[3]};
    for (int k = 0; k < 5;) {
      std::array<handle::Vec4, 3> b;
      for (auto& u : b)
        for (auto& c : u) c = gen.rational(5, 2);
      const Rational det = handle::det4(v, b[0], b[1], b[2]);
      if (det.is_zero()) continue;
      if (det.sign() < 0) std::swap(b[1], b[2]);
      ++k;
      r.expect(handle::contact_positivity_with_basis(p, b) > Rational(0), "sign changed under another completion");
    }
  }
  return r;
}

Result algebra_suites() {
  Result r;
  testing::Gen gen(99);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto rows = static_cast<std::size_t>(gen.range(1, 5));
    const auto cols = static_cast<std::size_t>(gen.range(1, 5));
    const IntegerMatrix a = gen.matrix(rows, cols, -9, 9);
    const auto s = algebra::smith_normal_form(a);
    r.expect(s.u * a * s.v == s.d, "UAV != D");
    r.expect(abs(s.u.determinant()) == 1 && abs(s.v.determinant()) == 1, "not unimodular");
    r.expect(s.d.is_diagonal(), "D not diagonal");
    const auto diag = s.diagonal();
    for (std::size_t i = 0; i < diag.size(); ++i) {
      r.expect(diag[i] >= 0, "negative invariant factor");
      if (i + 1 < diag.size()) {
        r.expect(diag[i] == 0 ? diag[i + 1] == 0 : diag[i + 1] % diag[i] == 0, "divisibility chain");
      }
    }
  }
  for (long den = 1; den <= 20; ++den)
    for (long num = den; num <= 20 * den; ++num) {
      const Rational x = q(-num, den);
      r.expect(algebra::evaluate_neg_continued_fraction(algebra::neg_continued_fraction(x)) == x, "round trip");
    }
  r.expect(algebra::mapping_torus_h1(IntegerMatrix{{1, 1}, {-1, 0}}).structure().is_infinite_cyclic(), "H1 != Z");
  for (long k = -5; k <= 5; ++k)
    r.expect(algebra::surgery_h1_s3(IntegerMatrix{{0, 1}, {1, k}}).structure().is_trivial(), "hopf surgery");
  return r;
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;  // 0 means no time limit
  std::function<Result()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "brieskorn counts n(n-1)/2 and 2n-3 for n = 2..12", 1.0, brieskorn_counts},
      {2, "closure at n = 2 and n = 3", 0.0, small_n_closure},
      {3, "boundary slopes match the closed forms", 1.0, slope_reproduction},
      {4, "interior slope m - n and solid torus count n - m", 0.0, interior_slopes},
      {5, "criterion: torsion, d = 1 example, d in {1,2}", 0.0, criterion_behaviour},
      {6, "surgery framing is -n", 0.0, surgery_framing},
      {7, "six handle identities hold symbolically", 1.0, handle_suite},
      {8, "contact positivity on X- under any completion", 0.0, contact_positivity},
      {9, "algebra property suites", 10.0, algebra_suites},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Result res;
    try {
      res = c.run();
    } catch (const std::exception& e) {
      res.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_s > 0 && secs >= c.budget_s) res.fail("took " + std::to_string(secs) + " s");
    std::printf("%s  criterion %d  %-52s %8.3f s%s%s\n", res.ok ? "PASS" : "FAIL", c.id, c.name, secs,
                res.ok ? "" : "  ", res.note.c_str());
    if (!res.ok) ++failures;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures;
}
