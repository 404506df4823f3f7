#include "c4lab/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace c4lab {

namespace {

using I128 = __int128;

long long checked_ll(I128 v, const char* ctx) {
  if (v > I128(INT64_MAX) || v < I128(INT64_MIN))
    throw std::overflow_error(std::string("rational overflow in ") + ctx);
  return (long long)v;
}

}  // namespace

Rational::Rational(long long n, long long d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  long long g = std::gcd(n < 0 ? -n : n, d);
  if (g == 0) g = 1;
  num_ = n / g;
  den_ = d / g;
}

Rational Rational::operator+(const Rational& o) const {
  I128 n = I128(num_) * o.den_ + I128(o.num_) * den_;
  I128 d = I128(den_) * o.den_;
  // Reduce in 128 bits before narrowing.
  I128 a = n < 0 ? -n : n, b = d;
  while (b) {
    I128 t = a % b;
    a = b;
    b = t;
  }
  if (a == 0) a = 1;
  return Rational(checked_ll(n / a, "+"), checked_ll(d / a, "+"));
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
  // Cross-reduce first to keep factors small.
  long long g1 = std::gcd(num_ < 0 ? -num_ : num_, o.den_);
  long long g2 = std::gcd(o.num_ < 0 ? -o.num_ : o.num_, den_);
  I128 n = I128(num_ / (g1 ? g1 : 1)) * (o.num_ / (g2 ? g2 : 1));
  I128 d = I128(den_ / (g2 ? g2 : 1)) * (o.den_ / (g1 ? g1 : 1));
  return Rational(checked_ll(n, "*"), checked_ll(d, "*"));
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num_ == 0) throw std::domain_error("rational division by zero");
  return *this * Rational(o.den_, o.num_);
}

bool Rational::operator<(const Rational& o) const {
  return I128(num_) * o.den_ < I128(o.num_) * den_;
}

Rational Rational::pow(unsigned e) const {
  Rational r(1);
  Rational base = *this;
  while (e) {
    if (e & 1) r = r * base;
    base = e > 1 ? base * base : base;
    e >>= 1;
  }
  return r;
}

long long Rational::floor() const {
  long long q = num_ / den_;
  if (num_ < 0 && num_ % den_ != 0) --q;
  return q;
}

long long Rational::ceil() const {
  long long q = num_ / den_;
  if (num_ > 0 && num_ % den_ != 0) ++q;
  return q;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace((unsigned char)c)) s += c;
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  bool neg = false;
  size_t i = 0;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    i = 1;
  }
  auto digits = [&](size_t from, size_t to) {
    if (from == to) throw std::invalid_argument("bad rational literal: " + text);
    long long v = 0;
    for (size_t k = from; k < to; ++k) {
      if (!std::isdigit((unsigned char)s[k]))
        throw std::invalid_argument("bad rational literal: " + text);
      v = checked_ll(I128(v) * 10 + (s[k] - '0'), "parse");
    }
    return v;
  };
  size_t slash = s.find('/', i);
  size_t dot = s.find('.', i);
  if (slash != std::string::npos) {
    long long n = digits(i, slash);
    long long d = digits(slash + 1, s.size());
    return Rational(neg ? -n : n, d);
  }
  if (dot != std::string::npos) {
    long long whole = dot > i ? digits(i, dot) : 0;
    size_t frac_len = s.size() - dot - 1;
    long long frac = frac_len ? digits(dot + 1, s.size()) : 0;
    I128 den = 1;
    for (size_t k = 0; k < frac_len; ++k) den *= 10;
    I128 n = I128(whole) * den + frac;
    return Rational(checked_ll(neg ? -n : n, "parse"), checked_ll(den, "parse"));
  }
  long long n = digits(i, s.size());
  return Rational(neg ? -n : n, 1);
}

}  // namespace c4lab
