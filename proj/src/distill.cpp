#include "activol/distill.hpp"

#include <cmath>
#include <iostream>
#include <stdexcept>

namespace activol {

const std::vector<ProtocolSpec> &protocol_catalog() {
  static const std::vector<ProtocolSpec> catalog = {
      {"8toCCZ", "T", 8, "CCZ", 1, Rational(25, 2), 1, 1, 1, Rational(1, 2)},
      {"15to1", "injected", 15, "T", 1, Rational(35, 2), 1, 1, Rational(1, 2), Rational(1, 2)},
      // Half-distance first stage: 35 modules emit 8 T states every d/2 code cycles.
      {"15to1_half", "injected", 120, "T", 8, Rational(35, 2), 1, Rational(1, 2), Rational(1, 4),
       Rational(1, 4)},
      {"two_stage_ccz", "injected", 120, "CCZ", 1, 30, 2, 1, 1, Rational(1, 2)},
      {"ccz_to_2t", "CCZ", 1, "T", 2, Rational(33, 2), 1, 1, 1, 1},
  };
  return catalog;
}

const ProtocolSpec &lookup_protocol(const std::string &name) {
  for (const auto &p : protocol_catalog()) {
    if (p.name == name) return p;
  }
  throw std::invalid_argument("unknown distillation protocol: " + name);
}

double ErrorModel::p(double d) const { return prefactor * std::pow(10.0, -slope * d); }

namespace {

ErrorEstimate clamp(double raw, const char *what) {
  if (raw > 1.0) {
    std::cerr << "warning: " << what << " error estimate " << raw << " clamped to 1\n";
    return {1.0, true};
  }
  return {raw, false};
}

}  // namespace

ErrorEstimate error_8toccz(double d, const ErrorModel &m) {
  double a = 4 * m.p(d / 2) + m.p_in;
  return clamp(28 * a * a + 2 * m.p(d), "8-to-CCZ");
}

ErrorEstimate error_15to1(double d, const ErrorModel &m) {
  double a = 4 * m.p(d / 4) + m.p_in;
  return clamp(35 * a * a * a + 2 * m.p(d / 2), "15-to-1");
}

TwoStageError two_stage_ccz_error(double d, const ErrorModel &m, double p_inject) {
  ErrorModel first = m;
  first.p_in = p_inject;
  TwoStageError out;
  out.t_stage = error_15to1(d, first);
  ErrorModel second = m;
  second.p_in = out.t_stage.value;
  out.ccz_stage = error_8toccz(d, second);
  return out;
}

double throughput(const std::string &protocol, int modules) {
  if (modules < 0) throw std::invalid_argument("module count must be non-negative");
  const ProtocolSpec &p = lookup_protocol(protocol);
  // A run occupies `volume` module-cycles and emits `outputs` states.
  return modules * p.outputs / p.volume.to_double();
}

}  // namespace activol
