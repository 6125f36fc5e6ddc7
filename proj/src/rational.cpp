#include "ellsw/rational.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace ellsw {

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

int64_t gcd64(int64_t a, int64_t b) { return narrow128(gcd128(a, b)); }

int64_t lcm64(int64_t a, int64_t b) {
  if (a == 0 || b == 0) return 0;
  __int128 g = gcd128(a, b);
  __int128 l = (__int128)a / g * b;
  return narrow128(l < 0 ? -l : l);
}

int64_t narrow128(__int128 v) {
  if (v > std::numeric_limits<int64_t>::max() || v < std::numeric_limits<int64_t>::min())
    throw std::overflow_error("integer overflow in exact arithmetic");
  return (int64_t)v;
}

int64_t floor_div(int64_t a, int64_t b) {
  int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int64_t mod_floor(int64_t a, int64_t b) {
  int64_t r = a % b;
  return r < 0 ? r + b : r;
}

Rational Rational::from_wide(__int128 n, __int128 d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  __int128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  Rational r;
  r.num_ = narrow128(n);
  r.den_ = narrow128(d);
  return r;
}

Rational::Rational(int64_t n, int64_t d) { *this = from_wide(n, d); }

Rational Rational::operator-() const { return from_wide(-(__int128)num_, den_); }

Rational operator+(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) return Rational::from_wide((__int128)a.num_ + b.num_, a.den_);
  return Rational::from_wide((__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_,
                             (__int128)a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  // cross-reduce first so intermediate products stay small
  int64_t g1 = gcd64(a.num_, b.den_), g2 = gcd64(b.num_, a.den_);
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  return Rational::from_wide((__int128)(a.num_ / g1) * (b.num_ / g2),
                             (__int128)(a.den_ / g2) * (b.den_ / g1));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw std::domain_error("rational division by zero");
  return Rational::from_wide((__int128)a.num_ * b.den_, (__int128)a.den_ * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  __int128 l = (__int128)a.num_ * b.den_, r = (__int128)b.num_ * a.den_;
  return l <=> r;
}

std::string Rational::str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

Rational Rational::parse(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace((unsigned char)s[b])) ++b;
  while (e > b && std::isspace((unsigned char)s[e - 1])) --e;
  auto parse_int = [&](size_t from, size_t to) {
    int64_t v = 0;
    const char* first = s.data() + from;
    const char* last = s.data() + to;
    if (from < to && *first == '+') ++first;
    auto [p, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || p != last || first == last)
      throw std::invalid_argument("malformed rational: '" + s + "'");
    return v;
  };
  size_t slash = s.find('/', b);
  if (slash == std::string::npos || slash >= e) return Rational(parse_int(b, e));
  int64_t d = parse_int(slash + 1, e);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  return Rational(parse_int(b, slash), d);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace ellsw
