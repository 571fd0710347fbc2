#pragma once

#include <string>

#include "activol/blocknet.hpp"
#include "activol/semantics.hpp"

namespace activol {

struct VerifyResult {
  bool valid = false;       // structural rules hold
  bool contracted = false;  // linear map computed (open legs within the cap)
  bool matches = false;     // equals the reference map, when one exists
  bool has_reference = false;
  std::string detail;
  bool ok() const { return valid && (!has_reference || matches); }
};

// Structural validation plus contraction when it fits the size cap.
VerifyResult verify_network(const BlockNetwork &net, int range_r = 12);
// As above, and compares a named builder's network with its reference map.
VerifyResult verify_builder(const std::string &name, int range_r = 12);

// Projector (I + P)/2.
LinearMap pauli_projector(const PauliOp &p);

}  // namespace activol
