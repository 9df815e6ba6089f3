#include "legsurg/algebra/continued_fraction.hpp"

#include "legsurg/errors.hpp"

namespace legsurg::algebra {

std::vector<Integer> neg_continued_fraction(const Rational& r) {
  if (r > Rational(-1)) {
    throw DomainError("negative continued fraction needs r <= -1, got " + r.to_string());
  }
  std::vector<Integer> terms;
  Rational rest = r;
  for (;;) {
    if (rest.is_integer()) {
      terms.push_back(rest.num());
      return terms;
    }
    // a = floor(rest) puts a - rest in (-1, 0), so the tail 1/(a - rest) is < -1.
    Integer a = rest.floor();
    rest = Rational(1) / (Rational(a) - rest);
    terms.push_back(std::move(a));
  }
}

Rational evaluate_neg_continued_fraction(std::span<const Integer> terms) {
  if (terms.empty()) throw UsageError("empty continued fraction");
  Rational value(terms.back());
  for (auto it = terms.rbegin() + 1; it != terms.rend(); ++it) {
    value = Rational(*it) - Rational(1) / value;
  }
  return value;
}

}  // namespace legsurg::algebra
