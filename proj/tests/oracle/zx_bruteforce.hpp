#pragma once

// Brute-force evaluation of a phase-free ZX graph. Every X spider is a Z
// spider with a Hadamard on each leg, so a wire carries H^k with k the number
// of Hadamards met along it; the map entry is a sum over one bit per spider.

#include <cmath>
#include <complex>
#include <vector>

#include "activol/semantics.hpp"

namespace oracle {

inline activol::LinearMap zx_bruteforce(const activol::ZXGraph &g) {
  using activol::BlockType;
  const int ns = static_cast<int>(g.spiders.size());
  const int ni = static_cast<int>(g.inputs.size());
  const int no = static_cast<int>(g.outputs.size());
  const double h = 1 / std::sqrt(2.0);
  auto is_x = [&](int s) { return g.spiders[s] == BlockType::X ? 1 : 0; };
  auto wire = [&](int hadamards, int a, int b) -> double {
    if (hadamards % 2 == 0) return a == b ? 1.0 : 0.0;
    return (a & b) ? -h : h;
  };
  activol::LinearMap m(ni, no);
  for (size_t r = 0; r < m.rows(); ++r) {
    for (size_t c = 0; c < m.cols(); ++c) {
      double total = 0;
      for (int64_t assign = 0; assign < (int64_t{1} << ns); ++assign) {
        auto bit = [&](int s) { return static_cast<int>((assign >> s) & 1); };
        double w = 1;
        for (const auto &e : g.edges) {
          w *= wire(e.hadamard + is_x(e.a) + is_x(e.b), bit(e.a), bit(e.b));
          if (w == 0) break;
        }
        // Input i is the (ni-1-i)-th bit of the column: first qubit is the MSB.
        for (int i = 0; i < ni && w != 0; ++i) {
          int v = static_cast<int>((c >> (ni - 1 - i)) & 1);
          w *= wire(g.inputs[i].hadamard + is_x(g.inputs[i].spider), v, bit(g.inputs[i].spider));
        }
        for (int o = 0; o < no && w != 0; ++o) {
          int v = static_cast<int>((r >> (no - 1 - o)) & 1);
          w *= wire(g.outputs[o].hadamard + is_x(g.outputs[o].spider), v, bit(g.outputs[o].spider));
        }
        total += w;
      }
      m.at(r, c) = total;
    }
  }
  return m;
}

}  // namespace oracle
