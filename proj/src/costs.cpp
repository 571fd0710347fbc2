#include "activol/costs.hpp"

#include <cmath>
#include <stdexcept>

namespace activol {

namespace {

int64_t ceil_three_halves(int64_t w) { return (3 * w + 1) / 2; }

void require(bool ok, const std::string &what) {
  if (!ok) throw std::invalid_argument(what);
}

CostSummary io(CostSummary s, int in, int out, int stale = 0) {
  s.input_qubits = in;
  s.output_qubits = out;
  s.stale_outputs = stale;
  return s;
}

CostSummary blocks(const std::string &name, Rational base, const CostConstants &c) {
  return make_cost(name, base, 0, 0, 0, c);
}

// Chain segments of a pure measurement part: three blocks per pair of
// qubits, two for a trailing single qubit.
std::vector<CostSummary> part_segments(int w, const CostConstants &c) {
  std::vector<CostSummary> segs;
  for (int j = 0; j < (w + 1) / 2; ++j) {
    segs.push_back(blocks("ppm_segment", 2 * j + 1 < w ? 3 : 2, c));
  }
  return segs;
}

}  // namespace

CostSummary make_cost(std::string name, Rational base, Rational t, Rational ccz, Rational depth,
                      const CostConstants &c) {
  CostSummary s;
  s.name = std::move(name);
  s.base_volume = base;
  s.demand.t = t;
  s.demand.ccz = ccz;
  s.volume = base + c.c_t * t + c.c_ccz * ccz;
  s.reaction_depth = depth;
  return s;
}

CostSummary sequence(std::string name, const std::vector<CostSummary> &parts) {
  CostSummary s;
  s.name = std::move(name);
  for (const auto &p : parts) {
    s.base_volume += p.base_volume;
    s.volume += p.volume;
    s.demand.t += p.demand.t;
    s.demand.ccz += p.demand.ccz;
    s.demand.y += p.demand.y;
    s.demand.sqrt_t += p.demand.sqrt_t;
    s.reaction_depth += p.reaction_depth;
    s.input_qubits = std::max(s.input_qubits, p.input_qubits);
    s.output_qubits = std::max(s.output_qubits, p.output_qubits);
    s.stale_outputs += p.stale_outputs;
    s.y_catalyst = s.y_catalyst || p.y_catalyst;
  }
  s.segments = parts;
  return s;
}

CostSummary repeat(const CostSummary &part, int64_t count) {
  require(count >= 0, "repeat count must be non-negative");
  CostSummary s = part;
  s.segments.clear();
  s.base_volume = part.base_volume * count;
  s.volume = part.volume * count;
  s.demand.t = part.demand.t * count;
  s.demand.ccz = part.demand.ccz * count;
  s.demand.y = part.demand.y * count;
  s.demand.sqrt_t = part.demand.sqrt_t * count;
  s.reaction_depth = part.reaction_depth * count;
  s.stale_outputs = static_cast<int>(std::min<int64_t>(part.stale_outputs * count, INT32_MAX));
  return s;
}

WeightPair weights_of(const PauliOp &p) {
  require(!p.is_identity(), "weights_of needs a non-identity Pauli");
  WeightPair w;
  for (char ch : p.ops) {
    if (ch == 'X' || ch == 'Y') ++w.w_x;
    if (ch == 'Z' || ch == 'Y') ++w.w_z;
  }
  if (p.count('Y') % 2 == 1) {
    ++w.w_x;
    ++w.w_z;
  }
  return w;
}

Rational rotation_cm(const WeightPair &w) {
  require(w.w_x >= 0 && w.w_z >= 0, "weights must be non-negative");
  return ceil_three_halves(w.w_x) + ceil_three_halves(w.w_z + 1) + 1;
}

Rational rotation_cm(const PauliOp &p) {
  if (p.weight() == 1) {
    if (p.count('Z')) return 2;
    if (p.count('X')) return 3;
    return 8;
  }
  return rotation_cm(weights_of(p));
}

CostSummary ppm_cost(const PauliOp &p, const CostConstants &c) {
  WeightPair w = weights_of(p);
  int q = static_cast<int>(p.weight());
  CostSummary s;
  if (w.w_x == 0 || w.w_z == 0) {
    int weight = w.w_x + w.w_z;
    Rational vol = weight == 1 ? 0 : weight == 2 ? 2 : ceil_three_halves(weight);
    s = blocks("ppm", vol, c);
    if (weight > 2) s.segments = part_segments(weight, c);
  } else {
    s = blocks("ppm", ceil_three_halves(w.w_x) + ceil_three_halves(w.w_z) + 1, c);
    s.y_catalyst = p.count('Y') % 2 == 1;
    s.segments = part_segments(w.w_z, c);
    s.segments.push_back(blocks("ppm_link", 1, c));
    for (const auto &seg : part_segments(w.w_x, c)) s.segments.push_back(seg);
  }
  return io(s, q, q);
}

CostSummary ppr_pi8_cost(const PauliOp &p, const CostConstants &c) {
  // Single-qubit rotations wait on one reaction; multi-qubit ones are priced with none.
  Rational depth = p.weight() == 1 ? 1 : 0;
  CostSummary s = make_cost("ppr_pi8", rotation_cm(p) + Rational(3, 2), 1, 0, depth, c);
  s.demand.y = Rational(1, 2);
  int q = static_cast<int>(p.weight());
  return io(s, q, q, 1);
}

CostSummary ppr_pi16_cost(const PauliOp &p, const CostConstants &c) {
  CostSummary s = make_cost("ppr_pi16", rotation_cm(p) + Rational(61, 4), 1, Rational(1, 2), Rational(3, 2), c);
  s.demand.sqrt_t = 1;
  int q = static_cast<int>(p.weight());
  return io(s, q, q, 1);
}

CostSummary ppr_variant1_cost(const PauliOp &p, int bits, const CostConstants &c) {
  require(bits >= 1, "precision bits must be >= 1");
  Rational b = bits;
  CostSummary s = make_cost("ppr_variant1", rotation_cm(p) + b * 12 + 1, b * 3, 0, b * 3, c);
  int q = static_cast<int>(p.weight());
  return io(s, q, q, 1);
}

CostSummary ppr_variant1_cost_eps(const PauliOp &p, double eps, const CostConstants &c) {
  require(eps > 0.0 && eps < 1.0, "epsilon must lie in (0, 1)");
  int bits = static_cast<int>(std::ceil(std::log2(1.0 / eps) - 1e-12));
  return ppr_variant1_cost(p, std::max(bits, 1), c);
}

CostSummary ppr_variant2_cost(const PauliOp &p, int bits, const CostConstants &c) {
  require(bits >= 2, "variant 2 needs at least 2 precision bits");
  Rational b1 = bits - 1;
  CostSummary s = make_cost("ppr_variant2", rotation_cm(p) + b1 * Rational(45, 2) - Rational(7, 2), 0, b1,
                            2 * bits - 3, c);
  int q = static_cast<int>(p.weight());
  return io(s, q, q, 1);
}

CostSummary ppr_variant3_cost(const PauliOp &p, int bits, const CostConstants &c) {
  require(bits >= 1, "precision bits must be >= 1");
  Rational f = Rational(bits, 40);
  CostSummary s = make_cost("ppr_variant3", rotation_cm(p) + f * 305, f * 24, f * 6, Rational(3 * bits, 4), c);
  int q = static_cast<int>(p.weight());
  return io(s, q, q, 1);
}

CostSummary c_rot(int bits, const CostConstants &c) {
  PauliOp z = PauliOp::parse("Z");
  switch (c.rotation) {
    case RotationMethod::variant1:
      return ppr_variant1_cost(z, bits, c);
    case RotationMethod::variant2:
      return ppr_variant2_cost(z, bits, c);
    default:
      return ppr_variant3_cost(z, bits, c);
  }
}

CostSummary hadamard(const CostConstants &c) { return io(blocks("hadamard", 3, c), 1, 1); }
CostSummary cnot(const CostConstants &c) { return io(blocks("cnot", 4, c), 2, 2); }
CostSummary zz_measurement(const CostConstants &c) { return io(blocks("zz_measurement", 2, c), 2, 2); }

CostSummary reactive_cz(const CostConstants &c) {
  return io(make_cost("reactive_cz", 5, 0, 0, 1, c), 2, 2, 2);
}

CostSummary toffoli(const CostConstants &c) { return io(make_cost("toffoli", 12, 0, 1, 1, c), 3, 3, 6); }

CostSummary controlled_swap(const CostConstants &c) {
  return io(make_cost("controlled_swap", 20, 0, 1, 1, c), 3, 3, 6);
}

CostSummary z_rotation_pi8(const CostConstants &c) { return ppr_pi8_cost(PauliOp::parse("Z"), c); }
CostSummary z_rotation_pi16(const CostConstants &c) { return ppr_pi16_cost(PauliOp::parse("Z"), c); }

CostSummary temporary_and_compute(const CostConstants &c) {
  return io(make_cost("temporary_and_compute", 9, 0, 1, 1, c), 2, 3, 6);
}

CostSummary temporary_and_uncompute(const CostConstants &c) {
  return io(make_cost("temporary_and_uncompute", 5, 0, 0, 0, c), 3, 2);
}

CostSummary temporary_and_pair(const CostConstants &c) {
  // The halves share their conditional-CZ blocks, so the pair is cheaper
  // than compute + uncompute; it is not split.
  return io(make_cost("temporary_and_pair", 12, 0, 1, 1, c), 2, 2, 6);
}

CostSummary gidney_adder(int n, const CostConstants &c) {
  require(n >= 2, "adder width must be >= 2");
  std::vector<CostSummary> segs;
  segs.push_back(io(make_cost("adder_first", 15, 0, 1, 1, c), 3, 3, 6));
  for (int i = 0; i < n - 2; ++i) segs.push_back(io(make_cost("adder_middle", 22, 0, 1, 2, c), 3, 3, 6));
  segs.push_back(io(make_cost("adder_last", 4, 0, 0, 0, c), 3, 2));
  CostSummary s = sequence("gidney_adder", segs);
  return io(s, 2 * n, 2 * n, s.stale_outputs);
}

CostSummary controlled_adder(int n, const CostConstants &c) {
  require(n >= 2, "adder width must be >= 2");
  Rational n1 = n - 1;
  CostSummary s = make_cost("controlled_adder", n1 * 30 + 9, 0, n1 * 2 + 1, 4 * n - 3, c);
  return io(s, 2 * n + 1, 2 * n + 1, 6 * (2 * n - 1));
}

CostSummary out_of_place_adder_compute(const CostConstants &c) {
  return io(make_cost("out_of_place_adder_compute", 21, 0, 1, 1, c), 3, 4, 6);
}

CostSummary out_of_place_adder_uncompute(const CostConstants &c) {
  return io(make_cost("out_of_place_adder_uncompute", 18, 0, 0, 1, c), 4, 3);
}

CostSummary out_of_place_adder(const CostConstants &c) {
  return sequence("out_of_place_adder", {out_of_place_adder_compute(c), out_of_place_adder_uncompute(c)});
}

CostSummary qft(int n, const CostConstants &c) {
  require(n >= 2, "QFT width must be >= 2");
  Rational sq = Rational(n) * n - 1;
  CostSummary s = make_cost("qft", sq * 15 - 3 * n + 1, 0, sq, 2 * n * n - n - 1, c);
  return io(s, n, n, static_cast<int>(6 * (int64_t{n} * n - 1)));
}

CostSummary select_cost(int n, const Rational &avg_cm, const CostConstants &c) {
  require(n >= 2, "SELECT needs n >= 2");
  require(avg_cm >= 0, "C_m must be non-negative");
  Rational n1 = n - 1;
  CostSummary s = make_cost("select", n1 * (avg_cm + 13), 0, n1, n1, c);
  int idx = ceil_log2(static_cast<uint64_t>(n));
  return io(s, idx, idx, 6 * (n - 1));
}

CostSummary select_cost(int n, const WeightPair &avg_weights, const CostConstants &c) {
  return select_cost(n, rotation_cm(avg_weights), c);
}

CostSummary qrom_cost(int n, int b, int batch, const CostConstants &c) {
  require(n >= 2 && b >= 1 && batch >= 1, "QROM needs n >= 2, b >= 1, batch >= 1");
  require(n % batch == 0, "QROM batch must divide n");
  Rational groups = Rational(n / batch) - 1;
  Rational fan = Rational(b) * (batch - 1);
  Rational base = groups * (Rational(3 * int64_t{b} * batch, 4) + 15) + fan * 20;
  Rational depth = Rational(n / batch) + ceil_log2(static_cast<uint64_t>(batch));
  CostSummary s = make_cost("qrom", base, 0, groups + fan, depth, c);
  int idx = ceil_log2(static_cast<uint64_t>(n));
  return io(s, idx + b, idx + b, static_cast<int>(6 * std::min<int64_t>((groups + fan).floor(), INT32_MAX / 6)));
}

CostSummary commuting_pprs_cost(int n, const Rational &avg_cm, int bits, const CostConstants &c) {
  require(n >= 1, "need at least one rotation");
  int rotations = std::max(1, ceil_log2(static_cast<uint64_t>(n)));
  CostSummary rot = c_rot(bits, c);
  Rational base = (avg_cm + 39) * n + rot.base_volume * rotations;
  CostSummary s = make_cost("commuting_pprs", base, rot.demand.t * rotations, rot.demand.ccz * rotations + n,
                            Rational(2 * n) + rot.reaction_depth, c);
  return io(s, n, n, 6 * n + rotations);
}

CostSummary commuting_pprs_cost(int n, const WeightPair &avg_weights, int bits, const CostConstants &c) {
  return commuting_pprs_cost(n, rotation_cm(avg_weights), bits, c);
}

CostSummary custom_clifford_cost(int n, const CostConstants &c) {
  require(n >= 1, "need at least one qubit");
  return io(blocks("custom_clifford", Rational(3) * n * n, c), n, n);
}

CostSummary custom_unitary_cost(int n, int n_r, int bits, const CostConstants &c) {
  require(n >= 1 && n_r >= 0, "need n >= 1 and n_r >= 0");
  if (n_r == 0) {
    CostSummary s = custom_clifford_cost(n, c);
    s.name = "custom_unitary";
    return s;
  }
  CostSummary rot = c_rot(bits, c);
  Rational base = Rational(3) * n * n + Rational(n_r) * (Rational(3 * n, 2) + rot.base_volume);
  CostSummary s = make_cost("custom_unitary", base, rot.demand.t * n_r, rot.demand.ccz * n_r, 0, c);
  return io(s, n, n, n_r);
}

CostSummary y_state_batch(int n, const CostConstants &c) {
  require(n >= 1, "need at least one Y state");
  return io(blocks("y_state_batch", 3 * n + 1, c), 1, n + 1);
}

CostSummary sqrt_t_pair(const CostConstants &c) {
  return io(make_cost("sqrt_t_pair", Rational(51, 2), 1, 1, 0, c), 0, 2);
}

CostSummary ccz_to_2t(const CostConstants &c) {
  return io(make_cost("ccz_to_2t", Rational(33, 2), 0, 0, 1, c), 3, 2);
}

}  // namespace activol
