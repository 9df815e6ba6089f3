#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "legsurg/algebra/integer_matrix.hpp"
#include "legsurg/handle/forms.hpp"

namespace legsurg::handle {

/// Explicit formulas of the standard symplectic 2-handle on R^4.
///
/// Every field is written down directly (not derived from another field), so
/// the identities in verify_handle_identities compare independent expressions.
struct HandleData {
  Form omega;        // dx1^dy1 + dx2^dy2
  Poly f2;           // x1^2 - y1^2/2 + x2^2 - y2^2/2
  VField v2;         // (2x1, -y1, 2x2, -y2)
  Form alpha2;       // y1 dx1 + 2x1 dy1 + y2 dx2 + 2x2 dy2
  Poly handle_f;     // A(x1^2 + x2^2) - (y1^2 + y2^2)/2 - 1
  Poly transversality;  // expected grad F . v2 = 4A(x1^2 + x2^2) + y1^2 + y2^2
  PolyMatrix theta;  // numerator of the frame map into Sp(4)
  Poly theta_norm;   // 4x1^2 + y1^2 + 4x2^2 + y2^2
  PolyMatrix j;      // matrix of omega in the coordinate order
  algebra::IntegerMatrix monodromy;  // [[1,1],[-1,0]]
  algebra::IntegerMatrix lower;      // [[1,0],[-1,1]]
  algebra::IntegerMatrix upper;      // [[1,1],[0,1]]
};

const HandleData& standard_handle_data();

struct CheckItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct HandleReport {
  std::vector<CheckItem> checks;
  bool all_pass() const;
};

// Six exact symbolic checks, in order: liouville, gradient, alpha, theta,
// monodromy, transversality.
HandleReport verify_handle_identities(const HandleData& data = standard_handle_data());

// Same six identities with both sides evaluated at a point (A substituted by `a`).
std::vector<bool> evaluate_identities_at(const HandleData& data, const Point& pt, const Rational& a);

// (alpha2 ^ d alpha2)(b1, b2, b3) at a point of X- = {f2 = -1}, where b1, b2, b3
// span the tangent space and (v2, b1, b2, b3) is positively oriented in R^4.
// Throws PreconditionError (residual f2 + 1) off X-.
Rational contact_positivity_at(const Point& pt);
// As above with a caller-chosen completion; throws UsageError unless
// (v2, b1, b2, b3) is a positively oriented basis.
Rational contact_positivity_with_basis(const Point& pt, const std::array<Vec4, 3>& basis);
// The completion contact_positivity_at uses: tangent to X-, oriented after v2.
std::array<Vec4, 3> tangent_completion(const Point& pt);

// (grad F . v2)(pt) for the hypersurface F = 0. Throws DomainError unless
// A > 1 and PreconditionError (residual F) off the hypersurface.
Rational sigma_transversality_at(const Rational& a, const Point& pt);

// Deterministic rational points on X-; the first two are (0,1,0,1) and (1,2,0,0).
std::vector<Point> sample_x_minus(std::size_t count, std::uint64_t seed);
// Rational points on {F = 0}; empty when no rational seed point is found in a
// small search box.
std::vector<Point> sample_sigma(const Rational& a, std::size_t count, std::uint64_t seed);
std::optional<Point> sigma_seed(const Rational& a);
// Arbitrary rational points (not on any particular hypersurface) and matching
// random values of A in (1, 10], for evaluation cross-checks.
std::vector<Point> random_points(std::size_t count, std::uint64_t seed);
std::vector<Rational> random_parameters(std::size_t count, std::uint64_t seed);

// Batch kernels. The OpenMP versions match the serial references element for element.
std::vector<Rational> contact_positivity_batch(const std::vector<Point>& points);
std::vector<Rational> contact_positivity_batch_serial(const std::vector<Point>& points);
std::vector<Rational> transversality_batch(const Rational& a, const std::vector<Point>& points);
std::vector<Rational> transversality_batch_serial(const Rational& a, const std::vector<Point>& points);
// One row of six verdicts per point.
std::vector<std::vector<bool>> evaluate_identities_batch(const HandleData& data, const std::vector<Point>& points,
                                                         const std::vector<Rational>& a_values);
std::vector<std::vector<bool>> evaluate_identities_batch_serial(const HandleData& data,
                                                                const std::vector<Point>& points,
                                                                const std::vector<Rational>& a_values);

}  // namespace legsurg::handle
