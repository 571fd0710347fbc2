#include "activol/verify.hpp"

#include <cmath>

#include "activol/builders.hpp"

namespace activol {

LinearMap pauli_projector(const PauliOp &p) {
  LinearMap m = pauli_matrix(p);
  LinearMap id = LinearMap::identity(static_cast<int>(p.size()));
  for (size_t i = 0; i < m.data.size(); ++i) m.data[i] = (id.data[i] + m.data[i]) * 0.5;
  return m;
}

namespace {

VerifyResult base_check(const BlockNetwork &net, int range_r) {
  VerifyResult r;
  ValidationReport rep = validate_network(net, range_r);
  r.valid = rep.ok();
  if (!r.valid) r.detail = rep.summary();
  return r;
}

std::vector<cplx> qubit_state(double a, double b) { return {a, b}; }

bool compare(VerifyResult &r, const BlockNetwork &net, const ContractOptions &opt, const LinearMap &expected) {
  r.has_reference = true;
  try {
    LinearMap got = contract_network(net, opt);
    r.contracted = true;
    r.matches = equal_up_to_scalar(got, expected);
    if (!r.matches) r.detail += "map differs from reference";
  } catch (const std::exception &e) {
    r.detail += e.what();
  }
  return r.matches;
}

}  // namespace

VerifyResult verify_network(const BlockNetwork &net, int range_r) {
  VerifyResult r = base_check(net, range_r);
  if (!r.valid) return r;
  try {
    contract_network(net);
    r.contracted = true;
  } catch (const SizeCapError &e) {
    r.detail = std::string("not contracted: ") + e.what();
  } catch (const ZeroMapError &e) {
    r.valid = false;
    r.detail = e.what();
  }
  return r;
}

VerifyResult verify_builder(const std::string &name, int range_r) {
  BlockNetwork net = build_by_name(name);
  VerifyResult r = base_check(net, range_r);
  if (!r.valid) return r;
  ContractOptions opt;
  const double s = 1 / std::sqrt(2.0);
  if (name == "cnot") {
    opt.inputs = opt.outputs = {"c", "t"};
    compare(r, net, opt, gate_cnot());
  } else if (name == "hadamard") {
    compare(r, net, opt, gate_h());
  } else if (name == "reactive_cz") {
    // Bell effect on the reactive pair selects the CZ branch.
    opt.inputs = opt.outputs = {"x", "y"};
    opt.effects.push_back({{"cz.1", "cz.2"}, {1, 0, 0, 1}});
    compare(r, net, opt, gate_cz());
  } else if (name == "toffoli") {
    opt.inputs = opt.outputs = {"c1", "c2", "t"};
    opt.states.push_back({{"ccz1", "ccz2", "ccz3"}, ccz_state()});
    for (const auto &label : toffoli_reactive_outputs()) {
      bool z_copy = label.size() > 2 && label.substr(label.size() - 2) == ".1";
      opt.effects.push_back({{label}, z_copy ? qubit_state(s, s) : qubit_state(1, 0)});
    }
    compare(r, net, opt, gate_toffoli());
  } else if (name.rfind("zmeas:", 0) == 0 || name.rfind("xmeas:", 0) == 0) {
    int w = std::stoi(name.substr(6));
    std::string ops(w, name[0] == 'z' ? 'Z' : 'X');
    PauliOp p = PauliOp::parse(ops);
    std::vector<std::string> labels;
    for (int i = 1; i <= w; ++i) labels.push_back("q" + std::to_string(i));
    opt.inputs = opt.outputs = labels;
    compare(r, net, opt, pauli_projector(p));
  } else {
    try {
      contract_network(net);
      r.contracted = true;
    } catch (const std::exception &e) {
      r.detail = std::string("not contracted: ") + e.what();
    }
  }
  return r;
}

}  // namespace activol
