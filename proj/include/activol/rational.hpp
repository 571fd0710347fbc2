#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace activol {

// Exact fraction with int64 numerator/denominator. Arithmetic goes through
// 128-bit intermediates and throws std::overflow_error if the reduced result
// does not fit.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(int64_t n);  // NOLINT: implicit by design, integers are rationals
  Rational(int64_t n, int64_t d);

  int64_t num() const { return num_; }
  int64_t den() const { return den_; }

  Rational operator+(const Rational &o) const;
  Rational operator-(const Rational &o) const;
  Rational operator*(const Rational &o) const;
  Rational operator/(const Rational &o) const;
  Rational operator-() const;
  Rational &operator+=(const Rational &o) { return *this = *this + o; }
  Rational &operator-=(const Rational &o) { return *this = *this - o; }
  Rational &operator*=(const Rational &o) { return *this = *this * o; }

  bool operator==(const Rational &o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational &o) const { return !(*this == o); }
  bool operator<(const Rational &o) const;
  bool operator<=(const Rational &o) const { return !(o < *this); }
  bool operator>(const Rational &o) const { return o < *this; }
  bool operator>=(const Rational &o) const { return !(*this < o); }

  int64_t floor() const;
  int64_t ceil() const;
  bool is_integer() const { return den_ == 1; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  // Exact quarter count; throws std::domain_error if 4*x is not an integer.
  int64_t quarters() const;
  int64_t ceil_quarters() const;
  bool is_quarter_multiple() const { return 4 % den_ == 0; }
  static Rational from_quarters(int64_t q) { return Rational(q, 4); }

  // "7", "-3/2"
  std::string str() const;
  // Decimal rendering; exact when the denominator is a product of 2s and 5s,
  // otherwise rounded to `digits` places.
  std::string decimal(int digits = 6) const;
  static Rational parse(const std::string &s);

 private:
  static Rational from_wide(__int128 n, __int128 d);
  int64_t num_ = 0;
  int64_t den_ = 1;
};

std::ostream &operator<<(std::ostream &os, const Rational &r);

// ceil(log2(n)) for n >= 1.
int ceil_log2(uint64_t n);

}  // namespace activol
