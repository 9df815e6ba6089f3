#include "legsurg/criterion/criterion.hpp"

#include "legsurg/errors.hpp"

namespace legsurg::criterion {

std::string_view to_string(Hypothesis h) {
  switch (h) {
    case Hypothesis::WeaklyFillable:
      return "weakly-fillable";
    case Hypothesis::NonVanishingCPlus:
      return "c-plus";
    case Hypothesis::SteinS3:
      return "stein-s3";
  }
  return "unknown";
}

Hypothesis parse_hypothesis(std::string_view text) {
  if (text == "weakly-fillable") return Hypothesis::WeaklyFillable;
  if (text == "c-plus") return Hypothesis::NonVanishingCPlus;
  if (text == "stein-s3") return Hypothesis::SteinS3;
  throw UsageError("unknown hypothesis '" + std::string(text) +
                   "' (expected weakly-fillable, c-plus or stein-s3)");
}

ComponentComparison::ComponentComparison(std::int64_t s_, std::int64_t p1_, std::int64_t p2_, ClassInfo info)
    : s(s_), p1(p1_), p2(p2_), class_info(std::move(info)) {
  if (s < 0 || p1 < 0 || p2 < 0 || p1 > s || p2 > s) {
    throw DomainError("component comparison needs 0 <= p1, p2 <= s, got s=" + std::to_string(s) +
                      " p1=" + std::to_string(p1) + " p2=" + std::to_string(p2));
  }
}

Verdict Verdict::not_isotopic(std::vector<std::size_t> witnesses) {
  if (witnesses.empty()) throw UsageError("a not-isotopic verdict needs at least one witness");
  return Verdict{Kind::NotIsotopic, std::move(witnesses)};
}

bool decide_component(const ComponentComparison& c) {
  const std::int64_t chern = 2 * (c.p1 - c.p2);
  if (c.class_info.is_torsion()) return chern != 0;
  const algebra::Integer residue = algebra::Integer(static_cast<long>(chern)) % c.class_info.divisibility();
  return sgn(residue) != 0;
}

Verdict decide(const std::vector<ComponentComparison>& components, Hypothesis h) {
  if (h == Hypothesis::SteinS3) {
    throw UsageError("the stein-s3 hypothesis compares rotation numbers; use stein_decide");
  }
  std::vector<std::size_t> witnesses;
  for (std::size_t i = 0; i < components.size(); ++i)
    if (decide_component(components[i])) witnesses.push_back(i);
  if (witnesses.empty()) return Verdict::inconclusive();
  return Verdict::not_isotopic(std::move(witnesses));
}

Verdict stein_decide(const std::vector<std::int64_t>& rot1, const std::vector<std::int64_t>& rot2) {
  if (rot1.size() != rot2.size()) {
    throw UsageError("rotation lists differ in length: " + std::to_string(rot1.size()) + " vs " +
                     std::to_string(rot2.size()));
  }
  std::vector<std::size_t> witnesses;
  for (std::size_t i = 0; i < rot1.size(); ++i)
    if (rot1[i] != rot2[i]) witnesses.push_back(i);
  if (witnesses.empty()) return Verdict::inconclusive();
  return Verdict::not_isotopic(std::move(witnesses));
}

}  // namespace legsurg::criterion
