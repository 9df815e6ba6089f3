#include "legsurg/legendrian/legendrian.hpp"

#include "legsurg/errors.hpp"

namespace legsurg::legendrian {

StabilizationProfile::StabilizationProfile(std::int64_t s, std::int64_t p) : s_(s), p_(p) {
  if (s < 0 || p < 0 || p > s) {
    throw DomainError("stabilization profile needs 0 <= p <= s, got s=" + std::to_string(s) +
                      " p=" + std::to_string(p));
  }
}

SurgerySpec::SurgerySpec(std::vector<SurgeryComponent> comps) : components(std::move(comps)) {
  if (components.empty()) throw UsageError("surgery spec has no components");
}

std::pair<FramedLegendrian, StabilizationProfile> stabilize(const FramedLegendrian& knot,
                                                            const StabilizationProfile& profile,
                                                            StabilizationSign sign) {
  FramedLegendrian out = knot;
  out.twisting -= 1;
  const std::int64_t p = profile.p() + (sign == StabilizationSign::Positive ? 1 : 0);
  return {std::move(out), StabilizationProfile(profile.s() + 1, p)};
}

std::int64_t relative_chern(const StabilizationProfile& a, const StabilizationProfile& b) {
  if (a.s() != b.s()) {
    throw UsageError("relative Chern number needs equal stabilization counts, got s=" +
                     std::to_string(a.s()) + " and s=" + std::to_string(b.s()));
  }
  return a.rotation_offset() - b.rotation_offset();
}

std::int64_t surgery_framing(const FramedLegendrian& knot, const StabilizationProfile& profile) {
  return knot.twisting - profile.s() - 1;
}

std::vector<std::int64_t> stein_chern_values(const std::vector<std::int64_t>& rotations) {
  return rotations;
}

}  // namespace legsurg::legendrian
