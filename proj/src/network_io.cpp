#include "activol/network_io.hpp"

#include <stdexcept>

namespace activol {

using nlohmann::json;

namespace {

std::string term_to_string(const Terminal &t) {
  switch (t.kind) {
    case Terminal::Kind::input:
      return "in:" + t.label;
    case Terminal::Kind::output:
      return "out:" + t.label;
    default:
      return "c:" + std::to_string(t.block) + ":" + std::to_string(t.slot);
  }
}

Terminal term_from_string(const std::string &s) {
  if (s.rfind("in:", 0) == 0) return Terminal::input(s.substr(3));
  if (s.rfind("out:", 0) == 0) return Terminal::output(s.substr(4));
  if (s.rfind("c:", 0) == 0) {
    auto colon = s.find(':', 2);
    if (colon == std::string::npos) throw std::invalid_argument("bad connection term '" + s + "'");
    return Terminal::connect(std::stoi(s.substr(2, colon - 2)), std::stoi(s.substr(colon + 1)));
  }
  throw std::invalid_argument("bad port term '" + s + "'");
}

}  // namespace

json network_to_json(const BlockNetwork &net) {
  json blocks = json::array();
  for (const auto &b : net.blocks) {
    json ports = json::array();
    for (const auto &p : b.ports) {
      json jp = {{"dir", std::string(1, to_char(p.dir))}, {"h", p.hadamard}, {"term", term_to_string(p.term)}};
      if (p.level != 0) jp["level"] = p.level;
      ports.push_back(jp);
    }
    json jb = {{"id", b.id},
               {"type", std::string(1, to_char(b.type))},
               {"orient", std::string(1, to_char(b.orient))},
               {"halfDistance", b.half_distance},
               {"ports", ports}};
    if (b.multiport) jb["multiport"] = true;
    if (b.rotated_memory) jb["rotatedMemory"] = true;
    blocks.push_back(jb);
  }
  json j = {{"blocks", blocks}};
  if (!net.workspace_index.empty()) {
    json idx = json::object();
    for (const auto &[id, slot] : net.workspace_index) idx[std::to_string(id)] = slot;
    j["workspaceIndex"] = idx;
  }
  if (!net.segment_boundaries.empty()) j["segments"] = net.segment_boundaries;
  return j;
}

BlockNetwork network_from_json(const json &j) {
  BlockNetwork net;
  for (const auto &jb : j.at("blocks")) {
    LogicalBlock b;
    b.id = jb.at("id").get<int>();
    b.type = parse_block_type(jb.at("type").get<std::string>());
    b.orient = parse_orientation(jb.at("orient").get<std::string>());
    b.half_distance = jb.value("halfDistance", false);
    b.multiport = jb.value("multiport", false);
    b.rotated_memory = jb.value("rotatedMemory", false);
    for (const auto &jp : jb.at("ports")) {
      Port p;
      p.dir = parse_direction(jp.at("dir").get<std::string>());
      p.hadamard = jp.value("h", false);
      p.term = term_from_string(jp.at("term").get<std::string>());
      p.level = jp.value("level", 0);
      b.ports.push_back(p);
    }
    net.blocks.push_back(std::move(b));
  }
  if (j.contains("workspaceIndex")) {
    for (const auto &[k, v] : j.at("workspaceIndex").items()) net.workspace_index[std::stoi(k)] = v.get<int>();
  }
  if (j.contains("segments")) net.segment_boundaries = j.at("segments").get<std::vector<std::vector<int>>>();
  return net;
}

std::string network_to_string(const BlockNetwork &net) { return network_to_json(net).dump(2); }

BlockNetwork network_from_string(const std::string &text) { return network_from_json(json::parse(text)); }

}  // namespace activol
