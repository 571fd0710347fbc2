#pragma once

#include <string>
#include <vector>

#include "activol/device.hpp"
#include "activol/program.hpp"
#include "activol/sched.hpp"
#include "json.hpp"

namespace activol {

// Program file:
// {"qubits":6200, "constants":{"c_t":25,"c_ccz":35,"rotation":"variant3"},
//  "ops":[{"op":"gidney_adder","n":2048,"qubits":[0,1]},
//         {"repeat":{"count":10,"body":[...]}}]}
// Unknown op names throw UnknownOpError; bad parameters std::invalid_argument.
Program program_from_json(const nlohmann::json &j, const CostConstants *override_constants = nullptr);
Program program_from_file(const std::string &path, const CostConstants *override_constants = nullptr);

CostSummary op_cost(const std::string &op, const nlohmann::json &params, const CostConstants &c);
const std::vector<std::string> &op_names();

CostConstants constants_from_json(const nlohmann::json &j, CostConstants base = {});
// "c_t=25,c_ccz=35,rotation=variant1"
CostConstants constants_from_string(const std::string &s, CostConstants base = {});
nlohmann::json constants_to_json(const CostConstants &c);

Rational rational_from_json(const nlohmann::json &v);


// Machine file:
// {"n_modules":14000,"range":12,"distance":26,"code_cycle_s":1e-6,
//  "reaction_time_s":1e-6,"constants":{...},
//  "error_model":{"prefactor":1,"slope":0.5,"p_in":1e-3}}
MachineConfig machine_from_json(const nlohmann::json &j);
MachineConfig machine_from_file(const std::string &path);
ErrorModel error_model_from_json(const nlohmann::json &j);

// {"presets":[{"name":..,"kind":"photonic","rsgs":64,"lambda":8192,
//   "distance":32,"delay":"fiber","tau_rsg_s":1e-9}, {"kind":"matter",
//   "n_modules":14000,"distance":26,"code_cycle_s":1e-6,"reaction_time_s":1e-6}]}
std::vector<DevicePreset> presets_from_json(const nlohmann::json &j);
nlohmann::json presets_to_json(const std::vector<DevicePreset> &presets);

nlohmann::json read_json_file(const std::string &path);

}  // namespace activol
