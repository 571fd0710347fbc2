#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "activol/blocknet.hpp"
#include "activol/pauli.hpp"

namespace activol {

using cplx = std::complex<double>;

constexpr int kMaxOpenLegs = 12;

struct SizeCapError : std::length_error {
  using std::length_error::length_error;
};
struct ZeroMapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Dense 2^n_out x 2^n_in matrix, row-major. Within a row or column index the
// first qubit is the most significant bit.
struct LinearMap {
  int n_in = 0;
  int n_out = 0;
  std::vector<cplx> data;

  LinearMap() = default;
  LinearMap(int n_in, int n_out);
  size_t rows() const { return size_t{1} << n_out; }
  size_t cols() const { return size_t{1} << n_in; }
  cplx &at(size_t r, size_t c) { return data[r * cols() + c]; }
  const cplx &at(size_t r, size_t c) const { return data[r * cols() + c]; }
  double max_abs() const;

  static LinearMap identity(int n);
  static LinearMap from_rows(int n_in, int n_out, const std::vector<cplx> &values);
};

LinearMap matmul(const LinearMap &after, const LinearMap &before);
LinearMap kron(const LinearMap &a, const LinearMap &b);

// Standard gate matrices on 1-3 qubits.
LinearMap gate_h();
LinearMap gate_x();
LinearMap gate_z();
LinearMap gate_s();
LinearMap gate_t();
LinearMap gate_cnot();
LinearMap gate_cz();
LinearMap gate_ccz();
LinearMap gate_toffoli();

// Z or X spider with Hadamards on the legs selected by `hadamard_mask`
// (inputs first, then outputs). 1 <= n_in + n_out <= 4.
LinearMap spider_map(BlockType type, int n_in, int n_out, const std::vector<bool> &hadamard_mask = {});

// Raw phase-free ZX diagram. Boundary legs are listed in map order.
struct ZXGraph {
  struct Edge {
    int a, b;
    bool hadamard = false;
  };
  struct Boundary {
    int spider;
    bool hadamard = false;
  };
  std::vector<BlockType> spiders;
  std::vector<Edge> edges;
  std::vector<Boundary> inputs, outputs;
};

LinearMap contract_graph(const ZXGraph &g);

// A state plugged into network inputs, or an effect (row vector, applied
// without conjugation) plugged into outputs.
struct Plug {
  std::vector<std::string> labels;
  std::vector<cplx> vec;
};

struct ContractOptions {
  std::vector<std::string> inputs;   // open input order; default: appearance order
  std::vector<std::string> outputs;  // open output order; default: appearance order
  std::vector<Plug> states;
  std::vector<Plug> effects;
};

// Every connection and every matching bridge label pair is contracted with
// the unnormalized Bell functional. Throws SizeCapError above 12 open legs and
// ZeroMapError when the postselected map vanishes.
LinearMap contract_network(const BlockNetwork &net, const ContractOptions &opt = {});
ZXGraph network_graph(const BlockNetwork &net, const ContractOptions &opt = {});

bool equal_up_to_scalar(const LinearMap &a, const LinearMap &b, double tol = 1e-9);

// matrix(p_out) * m * matrix(p_in) == m within tolerance, signs included.
bool stabilizes(const LinearMap &m, const PauliOp &p_in, const PauliOp &p_out, double tol = 1e-9);
LinearMap pauli_matrix(const PauliOp &p);

struct Gate {
  enum class Kind { h, s, t, x, z, cnot, cz, ccz, prep0, prep_plus, post_z, post_x, state };
  Kind kind;
  std::vector<std::string> qubits;
  int outcome = 0;          // postselection: 0 -> +1 eigenstate, 1 -> -1
  std::vector<cplx> state;  // Kind::state only, over `qubits`
};

struct Circuit {
  std::vector<std::string> inputs;
  std::vector<Gate> gates;
  std::vector<std::string> outputs;  // optional explicit order
};

// Composes gates and unnormalized projectors in order; prep/state gates open
// new wires, postselection closes them.
LinearMap circuit_oracle(const Circuit &c);

std::vector<cplx> ccz_state();
std::vector<cplx> plus_state(int n = 1);

}  // namespace activol
