#include "danchor/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <limits>
#include <ostream>

#include "danchor/error.hpp"

namespace danchor {
namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t narrow_checked(__int128 value) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min()) {
    throw OverflowError("rational arithmetic overflowed 64 bits");
  }
  return static_cast<std::int64_t>(value);
}

}  // namespace

void Rational::normalize_from(__int128 num, __int128 den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) {
    num_ = 0;
    den_ = 1;
    return;
  }
  __int128 g = gcd128(num, den);
  num_ = narrow_checked(num / g);
  den_ = narrow_checked(den / g);
}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  normalize_from(numerator, denominator);
}

Rational& Rational::operator+=(const Rational& other) {
  normalize_from(static_cast<__int128>(num_) * other.den_ +
                     static_cast<__int128>(other.num_) * den_,
                 static_cast<__int128>(den_) * other.den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  normalize_from(static_cast<__int128>(num_) * other.den_ -
                     static_cast<__int128>(other.num_) * den_,
                 static_cast<__int128>(den_) * other.den_);
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  normalize_from(static_cast<__int128>(num_) * other.num_,
                 static_cast<__int128>(den_) * other.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.num_ == 0) throw DomainError("division by zero rational");
  normalize_from(static_cast<__int128>(num_) * other.den_,
                 static_cast<__int128>(den_) * other.num_);
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

bool operator<(const Rational& a, const Rational& b) {
  return static_cast<__int128>(a.num_) * b.den_ <
         static_cast<__int128>(b.num_) * a.den_;
}

std::int64_t Rational::floor() const {
  if (num_ >= 0) return num_ / den_;
  return -((-num_ + den_ - 1) / den_);
}

std::int64_t Rational::ceil() const {
  if (num_ >= 0) return (num_ + den_ - 1) / den_;
  return -((-num_) / den_);
}

Rational Rational::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty number");
  std::string s(text);

  auto parse_int = [](const std::string& part, const char* what) -> std::int64_t {
    if (part.empty()) throw ParseError(std::string("missing ") + what);
    std::size_t start = (part[0] == '+' || part[0] == '-') ? 1 : 0;
    if (start == part.size()) throw ParseError(std::string("missing ") + what);
    for (std::size_t i = start; i < part.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) {
        throw ParseError("invalid number '" + part + "'");
      }
    }
    errno = 0;
    char* end = nullptr;
    long long v = std::strtoll(part.c_str(), &end, 10);
    if (errno != 0 || end != part.c_str() + part.size()) {
      throw ParseError("number out of range '" + part + "'");
    }
    return v;
  };

  std::size_t slash = s.find('/');
  if (slash != std::string::npos) {
    std::int64_t p = parse_int(s.substr(0, slash), "numerator");
    std::int64_t q = parse_int(s.substr(slash + 1), "denominator");
    if (q == 0) throw ParseError("zero denominator in '" + s + "'");
    return Rational(p, q);
  }

  std::size_t dot = s.find('.');
  if (dot == std::string::npos) {
    return Rational(parse_int(s, "integer"));
  }

  std::string head = s.substr(0, dot);
  std::string frac = s.substr(dot + 1);
  if (frac.empty()) throw ParseError("trailing decimal point in '" + s + "'");
  bool negative = !head.empty() && head[0] == '-';
  if (head.empty() || head == "-" || head == "+") head += '0';
  std::int64_t whole = parse_int(head, "integer part");
  for (char c : frac) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError("invalid number '" + s + "'");
    }
  }
  if (frac.size() > 18) throw ParseError("too many decimal digits in '" + s + "'");
  std::int64_t scale = 1;
  std::int64_t digits = 0;
  for (char c : frac) {
    scale *= 10;
    digits = digits * 10 + (c - '0');
  }
  Rational r(whole);
  Rational tail(digits, scale);
  return negative ? r - tail : r + tail;
}

std::string Rational::to_fraction_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::to_decimal_string(int places) const {
  __int128 scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  __int128 num = num_;
  bool negative = num < 0;
  if (negative) num = -num;
  // round half away from zero
  __int128 scaled = (num * scale * 2 + den_) / (static_cast<__int128>(den_) * 2);
  __int128 whole = scaled / scale;
  __int128 frac = scaled % scale;
  std::string out = negative && scaled != 0 ? "-" : "";
  std::string whole_s;
  if (whole == 0) {
    whole_s = "0";
  } else {
    while (whole > 0) {
      whole_s.insert(whole_s.begin(), static_cast<char>('0' + static_cast<int>(whole % 10)));
      whole /= 10;
    }
  }
  out += whole_s;
  if (places > 0) {
    std::string frac_s(places, '0');
    for (int i = places - 1; i >= 0 && frac > 0; --i) {
      frac_s[i] = static_cast<char>('0' + static_cast<int>(frac % 10));
      frac /= 10;
    }
    out += "." + frac_s;
  }
  return out;
}

std::string Rational::to_exact_string() const {
  std::int64_t d = den_;
  int twos = 0;
  int fives = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++twos;
  }
  while (d % 5 == 0) {
    d /= 5;
    ++fives;
  }
  if (d != 1) return to_fraction_string();
  if (den_ == 1) return std::to_string(num_);
  int places = twos > fives ? twos : fives;
  // Exact by construction: den divides 10^places.
  return to_decimal_string(places);
}

double Rational::to_double() const {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

Rational abs(const Rational& value) {
  return value.is_negative() ? -value : value;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << value.to_fraction_string();
}

}  // namespace danchor
