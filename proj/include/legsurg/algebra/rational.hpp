#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace legsurg::algebra {

using Integer = mpz_class;

// Converts to a fixed-width integer, throwing OverflowError if it does not fit.
std::int64_t to_int64(const Integer& value);

Integer parse_integer(std::string_view text);

/// Exact rational number in lowest terms.
///
/// The denominator is always positive and gcd(|num|, den) = 1; zero is 0/1.
/// Text form is "p/q", or just "p" when the denominator is 1.
class Rational {
public:
  Rational() = default;
  Rational(int value) : num_(value) {}
  Rational(long value) : num_(value) {}
  Rational(Integer value) : num_(std::move(value)) {}
  Rational(Integer num, Integer den);

  static Rational parse(std::string_view text);

  const Integer& num() const noexcept { return num_; }
  const Integer& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return sgn(num_) == 0; }
  bool is_integer() const noexcept { return den_ == 1; }
  int sign() const noexcept { return sgn(num_); }

  // Largest integer <= this.
  Integer floor() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend int compare(const Rational& a, const Rational& b);
  friend bool operator<(const Rational& a, const Rational& b) { return compare(a, b) < 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return compare(a, b) > 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return compare(a, b) <= 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return compare(a, b) >= 0; }

  std::string to_string() const;

private:
  void normalize();

  Integer num_{0};
  Integer den_{1};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace legsurg::algebra
