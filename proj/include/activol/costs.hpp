#pragma once

#include <string>
#include <vector>

#include "activol/pauli.hpp"
#include "activol/rational.hpp"

namespace activol {

enum class RotationMethod { variant1, variant2, variant3 };

struct CostConstants {
  Rational c_t = 25;
  Rational c_ccz = 35;
  RotationMethod rotation = RotationMethod::variant3;  // how C_rot is priced
};

struct WeightPair {
  int w_x = 0;
  int w_z = 0;
  bool operator==(const WeightPair &o) const = default;
};

// Distilled states consumed, including those spent on catalysts. The volume
// of an operation is affine in (C_T, C_CCZ) with exactly these coefficients.
struct ResourceDemand {
  Rational t;
  Rational ccz;
  Rational y;       // Y states consumed (priced inside base_volume)
  Rational sqrt_t;  // sqrt(T) states consumed (priced inside base_volume)
  bool operator==(const ResourceDemand &o) const = default;
};

struct CostSummary {
  std::string name;
  Rational base_volume;  // blocks, excluding the distilled T and CCZ states
  ResourceDemand demand;
  Rational volume;       // base_volume + C_T * demand.t + C_CCZ * demand.ccz
  Rational reaction_depth;
  int input_qubits = 0;
  int output_qubits = 0;
  int stale_outputs = 0;  // qubits left waiting for a reactive measurement
  bool y_catalyst = false;
  std::vector<CostSummary> segments;  // legal split points; volumes sum to volume
};

CostSummary make_cost(std::string name, Rational base, Rational t, Rational ccz, Rational depth,
                      const CostConstants &c);
// Sum of parts in sequence: volumes and demands add, depths add.
CostSummary sequence(std::string name, const std::vector<CostSummary> &parts);
// `part` repeated `count` times in sequence, without materialising segments.
CostSummary repeat(const CostSummary &part, int64_t count);

WeightPair weights_of(const PauliOp &p);
// C_m of the measurement inside a rotation: ceil(3w_x/2) + ceil(3(w_z+1)/2) + 1,
// with single-qubit special cases Z -> 2, X -> 3, Y -> 8.
Rational rotation_cm(const WeightPair &w);
Rational rotation_cm(const PauliOp &p);

CostSummary ppm_cost(const PauliOp &p, const CostConstants &c = {});
CostSummary ppr_pi8_cost(const PauliOp &p, const CostConstants &c = {});
CostSummary ppr_pi16_cost(const PauliOp &p, const CostConstants &c = {});
CostSummary ppr_variant1_cost(const PauliOp &p, int bits, const CostConstants &c = {});
CostSummary ppr_variant1_cost_eps(const PauliOp &p, double eps, const CostConstants &c = {});
CostSummary ppr_variant2_cost(const PauliOp &p, int bits, const CostConstants &c = {});
CostSummary ppr_variant3_cost(const PauliOp &p, int bits, const CostConstants &c = {});
// Arbitrary-angle single-qubit Z rotation priced with c.rotation.
CostSummary c_rot(int bits, const CostConstants &c = {});

CostSummary hadamard(const CostConstants &c = {});
CostSummary cnot(const CostConstants &c = {});
CostSummary zz_measurement(const CostConstants &c = {});
CostSummary reactive_cz(const CostConstants &c = {});
CostSummary toffoli(const CostConstants &c = {});
CostSummary controlled_swap(const CostConstants &c = {});
CostSummary z_rotation_pi8(const CostConstants &c = {});
CostSummary z_rotation_pi16(const CostConstants &c = {});
CostSummary temporary_and_compute(const CostConstants &c = {});
CostSummary temporary_and_uncompute(const CostConstants &c = {});
CostSummary temporary_and_pair(const CostConstants &c = {});

CostSummary gidney_adder(int n, const CostConstants &c = {});
CostSummary controlled_adder(int n, const CostConstants &c = {});
CostSummary out_of_place_adder_compute(const CostConstants &c = {});
CostSummary out_of_place_adder_uncompute(const CostConstants &c = {});
CostSummary out_of_place_adder(const CostConstants &c = {});
CostSummary qft(int n, const CostConstants &c = {});

CostSummary select_cost(int n, const Rational &avg_cm, const CostConstants &c = {});
CostSummary select_cost(int n, const WeightPair &avg_weights, const CostConstants &c = {});
CostSummary qrom_cost(int n, int b, int batch = 1, const CostConstants &c = {});

CostSummary commuting_pprs_cost(int n, const Rational &avg_cm, int bits, const CostConstants &c = {});
CostSummary commuting_pprs_cost(int n, const WeightPair &avg_weights, int bits, const CostConstants &c = {});

CostSummary custom_clifford_cost(int n, const CostConstants &c = {});
CostSummary custom_unitary_cost(int n, int n_r, int bits, const CostConstants &c = {});

CostSummary y_state_batch(int n, const CostConstants &c = {});
CostSummary sqrt_t_pair(const CostConstants &c = {});
CostSummary ccz_to_2t(const CostConstants &c = {});

}  // namespace activol
