#include "activol/rational.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace activol {

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

bool fits(__int128 v) {
  return v >= std::numeric_limits<int64_t>::min() && v <= std::numeric_limits<int64_t>::max();
}

__int128 floor_div(__int128 a, __int128 b) {
  __int128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

Rational::Rational(int64_t n) : num_(n), den_(1) {}

Rational::Rational(int64_t n, int64_t d) {
  *this = from_wide(n, d);
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
  if (!fits(n) || !fits(d)) throw std::overflow_error("rational overflow");
  Rational r;
  r.num_ = static_cast<int64_t>(n);
  r.den_ = static_cast<int64_t>(d);
  return r;
}

Rational Rational::operator+(const Rational &o) const {
  return from_wide(static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_,
                   static_cast<__int128>(den_) * o.den_);
}

Rational Rational::operator-(const Rational &o) const { return *this + (-o); }

Rational Rational::operator*(const Rational &o) const {
  return from_wide(static_cast<__int128>(num_) * o.num_, static_cast<__int128>(den_) * o.den_);
}

Rational Rational::operator/(const Rational &o) const {
  if (o.num_ == 0) throw std::domain_error("rational division by zero");
  return from_wide(static_cast<__int128>(num_) * o.den_, static_cast<__int128>(den_) * o.num_);
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

bool Rational::operator<(const Rational &o) const {
  return static_cast<__int128>(num_) * o.den_ < static_cast<__int128>(o.num_) * den_;
}

int64_t Rational::floor() const { return static_cast<int64_t>(floor_div(num_, den_)); }

int64_t Rational::ceil() const { return -static_cast<int64_t>(floor_div(-static_cast<__int128>(num_), den_)); }

int64_t Rational::quarters() const {
  if (!is_quarter_multiple()) throw std::domain_error("volume " + str() + " is not a whole number of quarter-blocks");
  return num_ * (4 / den_);
}

int64_t Rational::ceil_quarters() const { return (*this * 4).ceil(); }

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::decimal(int digits) const {
  int64_t d = den_;
  int twos = 0, fives = 0;
  while (d % 2 == 0) d /= 2, ++twos;
  while (d % 5 == 0) d /= 5, ++fives;
  bool terminating = d == 1;
  int places = terminating ? std::max(twos, fives) : digits;
  if (places == 0) return std::to_string(num_);
  __int128 scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  __int128 scaled = static_cast<__int128>(num_) * scale;
  // round half away from zero when the expansion does not terminate
  __int128 q = scaled / den_;
  __int128 rem = scaled % den_;
  if (!terminating && 2 * (rem < 0 ? -rem : rem) >= den_) q += (scaled < 0 ? -1 : 1);
  bool neg = q < 0;
  if (neg) q = -q;
  __int128 ip = q / scale, fp = q % scale;
  std::string frac(places, '0');
  for (int i = places - 1; i >= 0; --i) {
    frac[i] = static_cast<char>('0' + static_cast<int>(fp % 10));
    fp /= 10;
  }
  if (terminating) {
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
  }
  std::string out = (neg ? "-" : "") + std::to_string(static_cast<long long>(ip));
  if (!frac.empty()) out += "." + frac;
  return out;
}

Rational Rational::parse(const std::string &s) {
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  }
  auto dot = s.find('.');
  if (dot == std::string::npos) {
    size_t used = 0;
    int64_t v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument("not a number: " + s);
    return Rational(v);
  }
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  size_t used = 0;
  int64_t v = std::stoll(digits, &used);
  if (used != digits.size()) throw std::invalid_argument("not a number: " + s);
  int64_t den = 1;
  for (size_t i = dot + 1; i < s.size(); ++i) den *= 10;
  return Rational(v, den);
}

std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.str(); }

int ceil_log2(uint64_t n) {
  if (n == 0) throw std::invalid_argument("ceil_log2 of zero");
  int k = 0;
  while ((uint64_t{1} << k) < n) ++k;
  return k;
}

}  // namespace activol
