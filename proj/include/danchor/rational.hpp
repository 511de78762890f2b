#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace danchor {

// Exact rational number with a canonical (reduced, positive-denominator)
// representation. All graph weights, densities and cut values in this
// library are Rationals; there is no floating point on any decision path.
// Intermediate products are taken in 128 bits and the reduced result must
// fit in 64 bits, otherwise OverflowError is thrown.
class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}
  Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT: implicit by design
  Rational(std::int64_t numerator, std::int64_t denominator);

  // Accepts "7", "-3", "4.25" and "p/q". Throws ParseError on anything else.
  static Rational parse(std::string_view text);

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_positive() const { return num_ > 0; }
  bool is_negative() const { return num_ < 0; }
  bool is_integer() const { return den_ == 1; }

  // Largest integer <= value / smallest integer >= value.
  std::int64_t floor() const;
  std::int64_t ceil() const;

  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);
  Rational operator-() const;

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  // "p/q", or plain "p" for integers.
  std::string to_fraction_string() const;
  // Fixed-point decimal rounded half away from zero, e.g. places=2: "4.74".
  std::string to_decimal_string(int places) const;
  // Exact rendering: terminating decimal when the denominator is 2^a*5^b
  // ("0.5", "3", "1.75"), fraction otherwise ("1/3").
  std::string to_exact_string() const;

  double to_double() const;

 private:
  void normalize_from(__int128 num, __int128 den);

  std::int64_t num_;
  std::int64_t den_;  // > 0 always
};

Rational abs(const Rational& value);

std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace danchor
