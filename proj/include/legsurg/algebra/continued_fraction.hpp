#pragma once

#include <span>
#include <vector>

#include "legsurg/algebra/rational.hpp"

namespace legsurg::algebra {

// Expansion r = a0 - 1/(a1 - 1/(a2 - ...)) of a rational r <= -1.
// Every term is <= -2 except the single-term expansion [-1] of r = -1.
// Throws DomainError when r > -1.
std::vector<Integer> neg_continued_fraction(const Rational& r);

// Inverse of neg_continued_fraction. Throws UsageError on an empty sequence.
Rational evaluate_neg_continued_fraction(std::span<const Integer> terms);

}  // namespace legsurg::algebra
