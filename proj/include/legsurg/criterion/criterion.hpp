#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "legsurg/algebra/homology.hpp"

namespace legsurg::criterion {

using algebra::ClassInfo;

/// Which setting the caller asserts. Neither fillability nor non-vanishing of
/// the contact invariant is checked here; the tag is echoed in every report.
enum class Hypothesis {
  WeaklyFillable,     // divisibility measured in the filling's H1
  NonVanishingCPlus,  // divisibility measured in the ambient manifold's H1
  SteinS3,            // links in the standard S^3, compared by rotation numbers
};

std::string_view to_string(Hypothesis h);
// Accepts "weakly-fillable", "c-plus", "stein-s3"; throws UsageError otherwise.
Hypothesis parse_hypothesis(std::string_view text);

/// One link component stabilized s times in both surgeries, p1 resp. p2 of
/// them positive.
struct ComponentComparison {
  // Throws DomainError unless 0 <= p1, p2 <= s.
  ComponentComparison(std::int64_t s, std::int64_t p1, std::int64_t p2, ClassInfo info);

  std::int64_t s;
  std::int64_t p1;
  std::int64_t p2;
  ClassInfo class_info;
};

/// There is deliberately no "isotopic" outcome.
struct Verdict {
  enum class Kind { NotIsotopic, Inconclusive };

  Kind kind = Kind::Inconclusive;
  std::vector<std::size_t> witnesses;  // nonempty iff NotIsotopic

  static Verdict inconclusive() { return {}; }
  static Verdict not_isotopic(std::vector<std::size_t> witnesses);

  bool not_isotopic() const noexcept { return kind == Kind::NotIsotopic; }
  std::string_view tag() const noexcept { return not_isotopic() ? "not-isotopic" : "inconclusive"; }

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

// True when the relative Chern number 2(p1 - p2) is incompatible with isotopy:
// nonzero for a torsion class, nonzero mod d otherwise.
bool decide_component(const ComponentComparison& c);

// Throws UsageError for SteinS3 (use stein_decide).
Verdict decide(const std::vector<ComponentComparison>& components, Hypothesis h);

// Componentwise rotation comparison for smoothly isotopic links in S^3 with
// equal Thurston-Bennequin numbers. Throws UsageError on length mismatch.
Verdict stein_decide(const std::vector<std::int64_t>& rot1, const std::vector<std::int64_t>& rot2);

}  // namespace legsurg::criterion
