#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace c4lab {

// Exact rational arithmetic on int64 numerator/denominator. Thresholds in this
// library (alpha*n^2, (rho - eps/2)*q, ...) are compared exactly, never through
// floating point. Overflow throws instead of degrading silently; quantities at
// the scales the library targets fit comfortably.
class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}
  constexpr Rational(long long n) : num_(n), den_(1) {}
  Rational(long long n, long long d);

  // Accepts "3/4", "0.25", "2", with an optional leading minus.
  static Rational parse(const std::string& text);

  long long num() const { return num_; }
  long long den() const { return den_; }

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  Rational operator-() const { return Rational(-num_, den_); }

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const;
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator<=(const Rational& o) const { return !(o < *this); }
  bool operator>=(const Rational& o) const { return !(*this < o); }

  Rational pow(unsigned e) const;

  long long floor() const;
  long long ceil() const;
  double to_double() const { return double(num_) / double(den_); }

  // "num/den", or just "num" when den == 1. Parse/str round-trips exactly.
  std::string str() const;

 private:
  long long num_;
  long long den_;  // > 0, gcd(|num|, den) == 1
};

}  // namespace c4lab
