#pragma once
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace ellsw {

// Reduced fraction with int64 parts.  Every operation is carried out in
// 128-bit intermediates and throws std::overflow_error if the reduced
// result does not fit.
class Rational {
 public:
  Rational() = default;
  Rational(int64_t n) : num_(n) {}
  Rational(int64_t n, int64_t d);

  int64_t num() const { return num_; }
  int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  double to_double() const { return double(num_) / double(den_); }

  // "p/q" always, e.g. "0/1", "-3/1".
  std::string str() const;
  // Accepts "p/q", "p" and surrounding whitespace; throws std::invalid_argument.
  static Rational parse(const std::string& s);

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  // Builds from 128-bit parts, reducing and range-checking.
  static Rational from_wide(__int128 n, __int128 d);

 private:
  int64_t num_ = 0;
  int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Small integer helpers shared across modules.
int64_t gcd64(int64_t a, int64_t b);
int64_t lcm64(int64_t a, int64_t b);
__int128 gcd128(__int128 a, __int128 b);
int64_t narrow128(__int128 v);  // throws std::overflow_error
int64_t floor_div(int64_t a, int64_t b);
int64_t mod_floor(int64_t a, int64_t b);

}  // namespace ellsw
