#pragma once

#include <string>
#include <vector>

#include "activol/blocknet.hpp"
#include "activol/pauli.hpp"

namespace activol {

// Reference networks. Every builder returns a network that validates at
// r = 12 with workspace slots in creation order.

// Qubits "c" (control) and "t" (target).
BlockNetwork build_cnot();
// Qubit "q".
BlockNetwork build_hadamard();
// Z^{⊗w} / X^{⊗w} measurement on qubits "q1".."qw". w >= 2.
BlockNetwork build_zmeas_network(int w);
BlockNetwork build_xmeas_network(int w);
// Pauli product measurement. Qubit i (0-based) is labelled "q<i+1>"; Y
// qubits and the Y catalyst ("ycat") cross from the Z part to the X part
// through bridge labels "~q<i+1>" / "~ycat".
BlockNetwork build_ppm_network(const PauliOp &pauli);
// Toffoli via a consumed CCZ state. Inputs c1, c2, t, ccz1..ccz3; outputs
// c1, c2, t plus the six reactive qubits listed by toffoli_reactive_outputs().
BlockNetwork build_toffoli_consumption();
std::vector<std::string> toffoli_reactive_outputs();
// Reactive CZ on x, y; outputs x, y and the pair "cz.1" (Z copy of x) and
// "cz.2" (Hadamarded Z copy of y).
BlockNetwork build_reactive_cz();

// "cnot", "hadamard", "toffoli", "reactive_cz", "zmeas:<w>", "xmeas:<w>",
// "ppm:<pauli>".
BlockNetwork build_by_name(const std::string &name);
std::vector<std::string> builder_names();

}  // namespace activol
