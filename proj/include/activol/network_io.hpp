#pragma once

#include <string>

#include "activol/blocknet.hpp"
#include "json.hpp"

namespace activol {

// Interchange format:
// {"blocks":[{"id":1,"type":"Z","orient":"E","halfDistance":false,
//             "ports":[{"dir":"D","h":false,"term":"in:q1"}, ...]}],
//  "workspaceIndex":{"1":0}, "segments":[[1,2]]}
// Port terms are "in:<label>", "out:<label>" or "c:<blockId>:<slot>".
// Optional block flags "multiport"/"rotatedMemory" and port "level" are
// written only when set.
nlohmann::json network_to_json(const BlockNetwork &net);
BlockNetwork network_from_json(const nlohmann::json &j);

std::string network_to_string(const BlockNetwork &net);
BlockNetwork network_from_string(const std::string &text);

}  // namespace activol
