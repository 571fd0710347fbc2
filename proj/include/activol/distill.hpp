#pragma once

#include <string>
#include <vector>

#include "activol/rational.hpp"

namespace activol {

struct ProtocolSpec {
  std::string name;
  std::string input_kind;  // "injected", "T" or "CCZ"
  int inputs = 0;
  std::string output_kind;  // "T" or "CCZ"
  int outputs = 0;
  Rational volume;  // blocks per run
  Rational reaction_depth;
  // Code distances (d_X, d_Z, d_m) as fractions of d.
  Rational d_x = 1, d_z = 1, d_m = 1;
};

const std::vector<ProtocolSpec> &protocol_catalog();
// Throws std::invalid_argument for unknown names.
const ProtocolSpec &lookup_protocol(const std::string &name);

// Per-block logical error p(d) = prefactor * 10^(-slope * d), plus the error
// rate of injected states.
struct ErrorModel {
  double prefactor = 1.0;
  double slope = 0.5;
  double p_in = 1e-3;

  double p(double d) const;
  static ErrorModel zero() { return {0.0, 0.5, 0.0}; }
};

struct ErrorEstimate {
  double value = 0.0;
  bool clamped = false;  // raw formula exceeded 1
};

// 28 (4 p(d/2) + p_in)^2 + 2 p(d), p_in taken from the model.
ErrorEstimate error_8toccz(double d, const ErrorModel &m);
// 35 (4 p(d/4) + p_in)^3 + 2 p(d/2).
ErrorEstimate error_15to1(double d, const ErrorModel &m);

struct TwoStageError {
  ErrorEstimate t_stage;    // first-stage T states
  ErrorEstimate ccz_stage;  // final CCZ states
};

// 15-to-1 T states (its own reduced distances) feeding an 8-to-CCZ at d;
// `p_inject` replaces m.p_in for the first stage.
TwoStageError two_stage_ccz_error(double d, const ErrorModel &m, double p_inject);

// Output states per logical cycle for `modules` workspace modules running
// the named protocol back to back.
double throughput(const std::string &protocol, int modules);

}  // namespace activol
