#include "activol/program_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "activol/distill.hpp"

namespace activol {

using nlohmann::json;

Rational rational_from_json(const json &v) {
  if (v.is_number_integer()) return Rational(v.get<int64_t>());
  if (v.is_number()) return Rational::parse(v.dump());
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  throw std::invalid_argument("expected a number, got " + v.dump());
}

namespace {

RotationMethod parse_rotation(const std::string &s) {
  if (s == "variant1") return RotationMethod::variant1;
  if (s == "variant2") return RotationMethod::variant2;
  if (s == "variant3") return RotationMethod::variant3;
  throw std::invalid_argument("unknown rotation method '" + s + "'");
}

const char *rotation_name(RotationMethod r) {
  switch (r) {
    case RotationMethod::variant1:
      return "variant1";
    case RotationMethod::variant2:
      return "variant2";
    default:
      return "variant3";
  }
}

void check_constants(const CostConstants &c) {
  if (c.c_t < 0 || c.c_ccz < 0) throw std::invalid_argument("cost constants must be non-negative");
}

int get_int(const json &p, const char *key) {
  if (!p.contains(key)) throw std::invalid_argument(std::string("missing parameter '") + key + "'");
  const json &v = p.at(key);
  if (!v.is_number_integer()) throw std::invalid_argument(std::string("parameter '") + key + "' must be an integer");
  return v.get<int>();
}

int get_int_or(const json &p, const char *key, int fallback) { return p.contains(key) ? get_int(p, key) : fallback; }

PauliOp get_pauli(const json &p) {
  if (!p.contains("pauli") || !p.at("pauli").is_string()) throw std::invalid_argument("missing parameter 'pauli'");
  return PauliOp::parse(p.at("pauli").get<std::string>());
}

// Averaged C_m given directly or through (w_x, w_z).
Rational get_cm(const json &p) {
  if (p.contains("c_m")) return rational_from_json(p.at("c_m"));
  if (p.contains("w_x") || p.contains("w_z")) {
    WeightPair w{get_int_or(p, "w_x", 0), get_int_or(p, "w_z", 0)};
    return rotation_cm(w);
  }
  throw std::invalid_argument("need 'c_m' or 'w_x'/'w_z'");
}

CostSummary custom_volume(const json &p, const CostConstants &c) {
  if (!p.contains("blocks")) throw std::invalid_argument("missing parameter 'blocks'");
  Rational depth = p.contains("depth") ? rational_from_json(p.at("depth")) : Rational(0);
  Rational t = p.contains("t") ? rational_from_json(p.at("t")) : Rational(0);
  Rational ccz = p.contains("ccz") ? rational_from_json(p.at("ccz")) : Rational(0);
  Rational blocks = rational_from_json(p.at("blocks"));
  if (blocks < 0 || depth < 0 || t < 0 || ccz < 0) throw std::invalid_argument("custom volume must be non-negative");
  CostSummary s = make_cost("volume", blocks, t, ccz, depth, c);
  s.input_qubits = s.output_qubits = get_int_or(p, "inputs", 0);
  s.stale_outputs = get_int_or(p, "stale", 0);
  if (p.contains("segments")) {
    Rational sum;
    for (const auto &v : p.at("segments")) {
      Rational b = rational_from_json(v);
      s.segments.push_back(make_cost("volume_segment", b, 0, 0, 0, c));
      sum += b;
    }
    if (sum != blocks) throw std::invalid_argument("custom segments must sum to 'blocks'");
  }
  return s;
}

using Factory = CostSummary (*)(const json &, const CostConstants &);

const std::map<std::string, Factory> &registry() {
  static const std::map<std::string, Factory> r = {
      {"hadamard", [](const json &, const CostConstants &c) { return hadamard(c); }},
      {"cnot", [](const json &, const CostConstants &c) { return cnot(c); }},
      {"zz_measurement", [](const json &, const CostConstants &c) { return zz_measurement(c); }},
      {"reactive_cz", [](const json &, const CostConstants &c) { return reactive_cz(c); }},
      {"toffoli", [](const json &, const CostConstants &c) { return toffoli(c); }},
      {"controlled_swap", [](const json &, const CostConstants &c) { return controlled_swap(c); }},
      {"z_rotation_pi8", [](const json &, const CostConstants &c) { return z_rotation_pi8(c); }},
      {"z_rotation_pi16", [](const json &, const CostConstants &c) { return z_rotation_pi16(c); }},
      {"temporary_and_compute", [](const json &, const CostConstants &c) { return temporary_and_compute(c); }},
      {"temporary_and_uncompute", [](const json &, const CostConstants &c) { return temporary_and_uncompute(c); }},
      {"temporary_and_pair", [](const json &, const CostConstants &c) { return temporary_and_pair(c); }},
      {"ppm", [](const json &p, const CostConstants &c) { return ppm_cost(get_pauli(p), c); }},
      {"ppr_pi8", [](const json &p, const CostConstants &c) { return ppr_pi8_cost(get_pauli(p), c); }},
      {"ppr_pi16", [](const json &p, const CostConstants &c) { return ppr_pi16_cost(get_pauli(p), c); }},
      {"ppr_variant1",
       [](const json &p, const CostConstants &c) {
         if (p.contains("eps")) {
           if (!p.at("eps").is_number()) throw std::invalid_argument("parameter 'eps' must be a number");
           return ppr_variant1_cost_eps(get_pauli(p), p.at("eps").get<double>(), c);
         }
         return ppr_variant1_cost(get_pauli(p), get_int(p, "bits"), c);
       }},
      {"ppr_variant2",
       [](const json &p, const CostConstants &c) { return ppr_variant2_cost(get_pauli(p), get_int(p, "bits"), c); }},
      {"ppr_variant3",
       [](const json &p, const CostConstants &c) { return ppr_variant3_cost(get_pauli(p), get_int(p, "bits"), c); }},
      {"c_rot", [](const json &p, const CostConstants &c) { return c_rot(get_int(p, "bits"), c); }},
      {"gidney_adder", [](const json &p, const CostConstants &c) { return gidney_adder(get_int(p, "n"), c); }},
      {"controlled_adder", [](const json &p, const CostConstants &c) { return controlled_adder(get_int(p, "n"), c); }},
      {"out_of_place_adder", [](const json &, const CostConstants &c) { return out_of_place_adder(c); }},
      {"out_of_place_adder_compute",
       [](const json &, const CostConstants &c) { return out_of_place_adder_compute(c); }},
      {"out_of_place_adder_uncompute",
       [](const json &, const CostConstants &c) { return out_of_place_adder_uncompute(c); }},
      {"qft", [](const json &p, const CostConstants &c) { return qft(get_int(p, "n"), c); }},
      {"select", [](const json &p, const CostConstants &c) { return select_cost(get_int(p, "n"), get_cm(p), c); }},
      {"qrom",
       [](const json &p, const CostConstants &c) {
         return qrom_cost(get_int(p, "n"), get_int(p, "b"), get_int_or(p, "batch", 1), c);
       }},
      {"commuting_pprs",
       [](const json &p, const CostConstants &c) {
         return commuting_pprs_cost(get_int(p, "n"), get_cm(p), get_int(p, "bits"), c);
       }},
      {"custom_clifford", [](const json &p, const CostConstants &c) { return custom_clifford_cost(get_int(p, "n"), c); }},
      {"custom_unitary",
       [](const json &p, const CostConstants &c) {
         return custom_unitary_cost(get_int(p, "n"), get_int(p, "n_r"), get_int(p, "bits"), c);
       }},
      {"y_state_batch", [](const json &p, const CostConstants &c) { return y_state_batch(get_int(p, "n"), c); }},
      {"sqrt_t_pair", [](const json &, const CostConstants &c) { return sqrt_t_pair(c); }},
      {"ccz_to_2t", [](const json &, const CostConstants &c) { return ccz_to_2t(c); }},
      {"distill",
       [](const json &p, const CostConstants &c) {
         if (!p.contains("protocol") || !p.at("protocol").is_string())
           throw std::invalid_argument("missing parameter 'protocol'");
         const ProtocolSpec &spec = lookup_protocol(p.at("protocol").get<std::string>());
         CostSummary s = make_cost("distill", spec.volume, 0, 0, spec.reaction_depth, c);
         s.output_qubits = spec.outputs * (spec.output_kind == "CCZ" ? 3 : 1);
         return s;
       }},
      {"volume", custom_volume},
  };
  return r;
}

std::vector<ProgramNode> parse_nodes(const json &ops, const CostConstants &c, int qubits);

ProgramNode parse_node(const json &j, const CostConstants &c, int qubits) {
  if (!j.is_object()) throw std::invalid_argument("program entries must be objects");
  if (j.contains("repeat")) {
    const json &r = j.at("repeat");
    if (!r.contains("count") || !r.at("count").is_number_integer())
      throw std::invalid_argument("repeat needs an integer 'count'");
    if (!r.contains("body") || !r.at("body").is_array()) throw std::invalid_argument("repeat needs a 'body' array");
    return make_repeat_node(r.at("count").get<int64_t>(), parse_nodes(r.at("body"), c, qubits));
  }
  if (!j.contains("op") || !j.at("op").is_string()) throw std::invalid_argument("program entry without 'op'");
  std::string name = j.at("op").get<std::string>();
  std::vector<int> qs;
  if (j.contains("qubits")) {
    for (const auto &q : j.at("qubits")) {
      if (!q.is_number_integer()) throw std::invalid_argument("qubit indices must be integers");
      int v = q.get<int>();
      if (v < 0 || v >= qubits) throw std::invalid_argument("qubit index " + std::to_string(v) + " out of range");
      qs.push_back(v);
    }
  }
  return make_op_node(name, op_cost(name, j, c), std::move(qs));
}

std::vector<ProgramNode> parse_nodes(const json &ops, const CostConstants &c, int qubits) {
  std::vector<ProgramNode> out;
  for (const auto &j : ops) out.push_back(parse_node(j, c, qubits));
  return out;
}

}  // namespace

CostSummary op_cost(const std::string &op, const json &params, const CostConstants &c) {
  auto it = registry().find(op);
  if (it == registry().end()) throw UnknownOpError("unknown op '" + op + "'");
  try {
    return it->second(params, c);
  } catch (const json::exception &e) {
    throw std::invalid_argument("op '" + op + "': " + e.what());
  } catch (const std::domain_error &e) {
    throw std::invalid_argument("op '" + op + "': " + e.what());
  }
}

const std::vector<std::string> &op_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto &[k, _] : registry()) v.push_back(k);
    return v;
  }();
  return names;
}

CostConstants constants_from_json(const json &j, CostConstants base) {
  if (!j.is_object()) throw std::invalid_argument("constants must be an object");
  for (const auto &[k, v] : j.items()) {
    if (k == "c_t") {
      base.c_t = rational_from_json(v);
    } else if (k == "c_ccz") {
      base.c_ccz = rational_from_json(v);
    } else if (k == "rotation") {
      base.rotation = parse_rotation(v.get<std::string>());
    } else {
      throw std::invalid_argument("unknown constant '" + k + "'");
    }
  }
  check_constants(base);
  return base;
}

CostConstants constants_from_string(const std::string &s, CostConstants base) {
  std::stringstream ss(s);
  std::string item;
  json j = json::object();
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("expected key=value in '" + item + "'");
    j[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return constants_from_json(j, base);
}

json constants_to_json(const CostConstants &c) {
  return {{"c_t", c.c_t.str()}, {"c_ccz", c.c_ccz.str()}, {"rotation", rotation_name(c.rotation)}};
}

Program program_from_json(const json &j, const CostConstants *override_constants) {
  try {
    if (!j.is_object()) throw std::invalid_argument("program must be a JSON object");
    Program p;
    p.qubits = j.value("qubits", 0);
    if (p.qubits < 0) throw std::invalid_argument("qubit count must be non-negative");
    if (j.contains("constants")) p.constants = constants_from_json(j.at("constants"));
    if (override_constants) p.constants = *override_constants;
    if (j.contains("ops")) {
      if (!j.at("ops").is_array()) throw std::invalid_argument("'ops' must be an array");
      p.nodes = parse_nodes(j.at("ops"), p.constants, p.qubits == 0 ? INT32_MAX : p.qubits);
    }
    return p;
  } catch (const json::exception &e) {
    throw std::invalid_argument(std::string("program: ") + e.what());
  }
}

Program program_from_file(const std::string &path, const CostConstants *override_constants) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  json j = json::parse(in);  // json::parse_error propagates to the caller
  return program_from_json(j, override_constants);
}

}  // namespace activol

namespace activol {

json read_json_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return json::parse(in);
}

ErrorModel error_model_from_json(const json &j) {
  ErrorModel m;
  m.prefactor = j.value("prefactor", m.prefactor);
  m.slope = j.value("slope", m.slope);
  m.p_in = j.value("p_in", m.p_in);
  if (m.prefactor < 0 || m.slope < 0 || m.p_in < 0 || m.p_in > 1) throw std::invalid_argument("invalid error model");
  return m;
}

MachineConfig machine_from_json(const json &j) {
  try {
    MachineConfig m;
    m.n_modules = j.at("n_modules").get<int>();
    m.range = j.value("range", m.range);
    m.distance = j.value("distance", m.distance);
    m.code_cycle = j.value("code_cycle_s", m.code_cycle);
    m.reaction_time = j.value("reaction_time_s", m.reaction_time);
    if (j.contains("constants")) m.constants = constants_from_json(j.at("constants"));
    if (j.contains("error_model")) m.error_model = error_model_from_json(j.at("error_model"));
    m.validate();
    return m;
  } catch (const json::exception &e) {
    throw std::invalid_argument(std::string("machine: ") + e.what());
  }
}

MachineConfig machine_from_file(const std::string &path) { return machine_from_json(read_json_file(path)); }

std::vector<DevicePreset> presets_from_json(const json &j) {
  try {
    std::vector<DevicePreset> out;
    for (const auto &e : j.at("presets")) {
      DevicePreset p;
      p.name = e.at("name").get<std::string>();
      p.kind = e.at("kind").get<std::string>();
      p.note = e.value("note", "");
      p.photonic.distance = e.at("distance").get<int>();
      if (p.kind == "photonic") {
        p.photonic.rsg_count = e.at("rsgs").get<int>();
        p.photonic.lambda = e.at("lambda").get<double>();
        p.photonic.tau_rsg = e.value("tau_rsg_s", 1e-9);
        std::string delay = e.value("delay", "fiber");
        if (delay != "fiber" && delay != "free_space") throw std::invalid_argument("unknown delay kind " + delay);
        p.photonic.delay = delay == "fiber" ? DelayKind::fiber : DelayKind::free_space;
      } else if (p.kind == "matter") {
        p.n_modules = e.at("n_modules").get<int>();
        p.code_cycle = e.at("code_cycle_s").get<double>();
        p.reaction_time = e.value("reaction_time_s", 1e-6);
      } else {
        throw std::invalid_argument("unknown preset kind " + p.kind);
      }
      out.push_back(std::move(p));
    }
    return out;
  } catch (const json::exception &e) {
    throw std::invalid_argument(std::string("presets: ") + e.what());
  }
}

json presets_to_json(const std::vector<DevicePreset> &presets) {
  json arr = json::array();
  for (const auto &p : presets) {
    json e = {{"name", p.name}, {"kind", p.kind}, {"distance", p.photonic.distance}};
    if (!p.note.empty()) e["note"] = p.note;
    if (p.kind == "photonic") {
      e["rsgs"] = p.photonic.rsg_count;
      e["lambda"] = p.photonic.lambda;
      e["tau_rsg_s"] = p.photonic.tau_rsg;
      e["delay"] = p.photonic.delay == DelayKind::fiber ? "fiber" : "free_space";
    } else {
      e["n_modules"] = p.n_modules;
      e["code_cycle_s"] = p.code_cycle;
      e["reaction_time_s"] = p.reaction_time;
    }
    arr.push_back(e);
  }
  return {{"presets", arr}};
}

}  // namespace activol
