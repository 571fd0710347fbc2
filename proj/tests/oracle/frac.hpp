#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>

// Minimal exact fraction for test oracles, independent of the library type.
struct Frac {
  int64_t n = 0, d = 1;
  Frac(int64_t num = 0, int64_t den = 1) : n(num), d(den) {
    if (d < 0) n = -n, d = -d;
    int64_t g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) n /= g, d /= g;
  }
  friend Frac operator+(Frac a, Frac b) { return {a.n * b.d + b.n * a.d, a.d * b.d}; }
  friend Frac operator-(Frac a, Frac b) { return {a.n * b.d - b.n * a.d, a.d * b.d}; }
  friend Frac operator*(Frac a, Frac b) { return {a.n * b.n, a.d * b.d}; }
  friend Frac operator/(Frac a, Frac b) { return {a.n * b.d, a.d * b.n}; }
  friend bool operator==(Frac a, Frac b) { return a.n == b.n && a.d == b.d; }
  friend std::ostream &operator<<(std::ostream &os, Frac f) { return os << f.n << "/" << f.d; }
};
