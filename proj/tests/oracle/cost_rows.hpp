#pragma once

// Cost-table rows transcribed as affine forms: volume = base + t*C_T +
// ccz*C_CCZ. Each row is evaluated from its closed form at given
// constants, so comparisons against the library are independent of how the
// library assembles its costs.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "oracle/frac.hpp"

namespace oracle {

struct Row {
  std::string name;
  std::function<Frac(Frac ct, Frac cccz)> volume;
  Frac depth;
};

inline int64_t ceil_div(int64_t a, int64_t b) { return (a + b - 1) / b; }
inline int64_t ceil15(int64_t w) { return ceil_div(3 * w, 2); }  // ceil(1.5 w)
inline int64_t clog2(int64_t n) {
  int64_t k = 0;
  while ((int64_t{1} << k) < n) ++k;
  return k;
}

// C_m = ceil(3/2 w_x) + ceil(3/2 (w_z + 1)) + 1
inline Frac cm(int64_t wx, int64_t wz) { return ceil15(wx) + ceil15(wz + 1) + 1; }

inline Frac pi8(Frac c_m, Frac ct) { return c_m + Frac(3, 2) + ct; }
inline Frac variant1(Frac c_m, int64_t b, Frac ct) { return c_m + Frac(3 * b) * (Frac(4) + ct) + 1; }
inline Frac variant2(Frac c_m, int64_t b, Frac cccz) { return c_m + Frac(b - 1) * (Frac(45, 2) + cccz) - Frac(7, 2); }
inline Frac variant3(Frac c_m, int64_t b, Frac ct, Frac cccz) {
  return c_m + Frac(b, 40) * (Frac(305) + Frac(6) * cccz + Frac(24) * ct);
}
inline Frac gidney(int64_t n, Frac cccz) { return Frac(n - 1) * (Frac(22) + cccz) - 3; }
inline Frac controlled_adder(int64_t n, Frac cccz) {
  return Frac(n - 1) * (Frac(30) + Frac(2) * cccz) + 9 + cccz;
}
inline Frac qft(int64_t n, Frac cccz) { return Frac(n * n - 1) * (Frac(15) + cccz) - Frac(3 * n) + 1; }
inline Frac select(int64_t n, Frac c_m, Frac cccz) { return Frac(n - 1) * (Frac(13) + c_m + cccz); }
inline Frac qrom(int64_t n, int64_t b, int64_t lam, Frac cccz) {
  return Frac(n / lam - 1) * (Frac(15) + Frac(3 * b * lam, 4) + cccz) + Frac(b * (lam - 1)) * (Frac(20) + cccz);
}
inline Frac qrom_depth(int64_t n, int64_t lam) { return Frac(n / lam) + clog2(lam); }
inline Frac commuting(int64_t n, Frac c_m, Frac c_rot, Frac cccz) {
  int64_t rot = std::max<int64_t>(1, clog2(n));
  return (c_m + 39 + cccz) * n + c_rot * rot;
}
inline Frac clifford(int64_t n) { return Frac(3 * n * n); }
inline Frac custom_unitary(int64_t n, int64_t nr, Frac c_rot) {
  return Frac(3 * n * n) + Frac(nr) * (Frac(3 * n, 2) + c_rot);
}

}  // namespace oracle
