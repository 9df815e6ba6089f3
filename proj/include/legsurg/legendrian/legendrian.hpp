#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "legsurg/algebra/rational.hpp"

namespace legsurg::legendrian {

using algebra::Integer;

/// A Legendrian knot with its contact framing recorded against a declared
/// background framing. `class_ref` is the knot's homology class in whatever
/// presentation the caller is working with.
struct FramedLegendrian {
  std::string label;
  std::int64_t twisting = 0;
  std::vector<Integer> class_ref;
  std::string background = "standard";
};

/// s stabilizations in total, p of them positive.
class StabilizationProfile {
public:
  StabilizationProfile() = default;
  // Throws DomainError unless 0 <= p <= s.
  StabilizationProfile(std::int64_t s, std::int64_t p);

  std::int64_t s() const noexcept { return s_; }
  std::int64_t p() const noexcept { return p_; }
  std::int64_t negative() const noexcept { return s_ - p_; }
  // Rotation shift relative to the unstabilized knot.
  std::int64_t rotation_offset() const noexcept { return 2 * p_ - s_; }

  friend bool operator==(const StabilizationProfile&, const StabilizationProfile&) = default;

private:
  std::int64_t s_ = 0;
  std::int64_t p_ = 0;
};

struct SurgeryComponent {
  FramedLegendrian knot;
  StabilizationProfile profile;
};

struct SurgerySpec {
  // Throws UsageError on an empty component list.
  explicit SurgerySpec(std::vector<SurgeryComponent> components);
  std::vector<SurgeryComponent> components;
};

enum class StabilizationSign { Positive, Negative };

// Twisting drops by one, s grows by one, p grows iff the sign is positive.
std::pair<FramedLegendrian, StabilizationProfile> stabilize(const FramedLegendrian& knot,
                                                            const StabilizationProfile& profile,
                                                            StabilizationSign sign);

// Relative first Chern number 2(a.p - b.p) across the handle. Both profiles
// must stabilize the same knot the same number of times.
std::int64_t relative_chern(const StabilizationProfile& a, const StabilizationProfile& b);

// Topological framing of the Legendrian surgery handle against the background:
// contact framing plus s + 1 left twists.
std::int64_t surgery_framing(const FramedLegendrian& knot, const StabilizationProfile& profile);

// In the Stein case over S^3 the Chern class pairs with each handle class as
// that component's rotation number.
std::vector<std::int64_t> stein_chern_values(const std::vector<std::int64_t>& rotations);

}  // namespace legsurg::legendrian
