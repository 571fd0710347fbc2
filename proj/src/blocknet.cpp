#include "activol/blocknet.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>
#include <stdexcept>

namespace activol {

Axis axis_of(Direction d) {
  switch (d) {
    case Direction::U:
    case Direction::D:
      return Axis::UD;
    case Direction::N:
    case Direction::S:
      return Axis::NS;
    default:
      return Axis::EW;
  }
}

Axis axis_of(Orientation o) {
  switch (o) {
    case Orientation::U:
      return Axis::UD;
    case Orientation::N:
      return Axis::NS;
    default:
      return Axis::EW;
  }
}

char to_char(Direction d) { return "UDNESW"[static_cast<int>(d)]; }
char to_char(BlockType t) { return t == BlockType::Z ? 'Z' : 'X'; }
char to_char(Orientation o) { return "ENU"[static_cast<int>(o)]; }

Direction parse_direction(const std::string &s) {
  static const std::string names = "UDNESW";
  if (s.size() == 1) {
    auto p = names.find(s[0]);
    if (p != std::string::npos) return static_cast<Direction>(p);
  }
  throw std::invalid_argument("unknown port direction '" + s + "'");
}

BlockType parse_block_type(const std::string &s) {
  if (s == "Z") return BlockType::Z;
  if (s == "X") return BlockType::X;
  throw std::invalid_argument("unknown block type '" + s + "'");
}

Orientation parse_orientation(const std::string &s) {
  if (s == "E") return Orientation::E;
  if (s == "N") return Orientation::N;
  if (s == "U") return Orientation::U;
  throw std::invalid_argument("unknown orientation '" + s + "'");
}

const LogicalBlock *BlockNetwork::find(int id) const {
  for (const auto &b : blocks) {
    if (b.id == id) return &b;
  }
  return nullptr;
}

std::vector<std::string> BlockNetwork::input_labels() const {
  std::vector<std::string> out;
  for (const auto &b : blocks) {
    for (const auto &p : b.ports) {
      if (p.term.kind == Terminal::Kind::input) out.push_back(p.term.label);
    }
  }
  return out;
}

std::vector<std::string> BlockNetwork::output_labels() const {
  std::vector<std::string> out;
  for (const auto &b : blocks) {
    for (const auto &p : b.ports) {
      if (p.term.kind == Terminal::Kind::output) out.push_back(p.term.label);
    }
  }
  return out;
}

std::string rule_name(Rule r) {
  switch (r) {
    case Rule::duplicate_id: return "duplicate_id";
    case Rule::port_count: return "port_count";
    case Rule::duplicate_direction: return "duplicate_direction";
    case Rule::multiple_d_ports: return "multiple_d_ports";
    case Rule::port_on_axis: return "port_on_axis";
    case Rule::hadamard_direction: return "hadamard_direction";
    case Rule::terminal_direction: return "terminal_direction";
    case Rule::memory_convention: return "memory_convention";
    case Rule::dangling_port: return "dangling_port";
    case Rule::unknown_peer: return "unknown_peer";
    case Rule::asymmetric_connection: return "asymmetric_connection";
    case Rule::direction_mismatch: return "direction_mismatch";
    case Rule::self_connection: return "self_connection";
    case Rule::commensurability: return "commensurability";
    case Rule::slot_parity: return "slot_parity";
    case Rule::missing_index: return "missing_index";
    case Rule::range: return "range";
  }
  return "unknown";
}

bool ValidationReport::has(Rule r) const {
  return std::any_of(violations.begin(), violations.end(), [r](const Violation &v) { return v.rule == r; });
}

std::string ValidationReport::summary() const {
  if (ok()) return "valid";
  std::ostringstream os;
  for (const auto &v : violations) {
    os << rule_name(v.rule) << " [";
    for (size_t i = 0; i < v.blocks.size(); ++i) os << (i ? "," : "") << v.blocks[i];
    os << "] " << v.detail << "\n";
  }
  return os.str();
}

bool commensurate(BlockType a, Orientation oa, BlockType b, Orientation ob, int hadamards) {
  bool plain = (a == b) == (oa == ob);
  return hadamards == 1 ? !plain : plain;
}

namespace {

bool is_lateral(Direction d) { return axis_of(d) != Axis::UD; }
bool is_ew(Direction d) { return axis_of(d) == Axis::EW; }

bool memory_convention_ok(const LogicalBlock &b) {
  if (b.type == BlockType::Z && b.orient == Orientation::E) return true;
  if (b.type == BlockType::X && b.orient == Orientation::N) return true;
  return b.rotated_memory && b.type == BlockType::Z && b.orient == Orientation::N;
}

}  // namespace

ValidationReport validate_network(const BlockNetwork &net, int range_r) {
  if (net.blocks.empty()) throw std::invalid_argument("empty block network");
  if (range_r < 2 || range_r % 2 != 0) throw std::invalid_argument("range must be even and at least 2");

  ValidationReport rep;
  auto add = [&rep](Rule r, std::vector<int> ids, std::string detail) {
    rep.violations.push_back({r, std::move(ids), std::move(detail)});
  };

  std::map<int, const LogicalBlock *> by_id;
  for (const auto &b : net.blocks) {
    if (!by_id.emplace(b.id, &b).second) add(Rule::duplicate_id, {b.id}, "block id used twice");
  }

  bool indexed = !net.workspace_index.empty();
  if (indexed) {
    for (const auto &b : net.blocks) {
      if (!net.workspace_index.count(b.id)) add(Rule::missing_index, {b.id}, "no workspace slot");
    }
  }

  for (const auto &b : net.blocks) {
    size_t max_ports = b.multiport ? 6 : 4;
    if (b.ports.size() < 2 || b.ports.size() > max_ports) {
      add(Rule::port_count, {b.id}, std::to_string(b.ports.size()) + " ports");
    }
    int d_ports = 0;
    std::set<std::pair<Direction, int>> seen;
    bool has_terminal = false;
    for (size_t s = 0; s < b.ports.size(); ++s) {
      const Port &p = b.ports[s];
      std::string where = "slot " + std::to_string(s) + " (" + to_char(p.dir) + ")";
      if (p.dir == Direction::D) ++d_ports;
      if (p.level != 0 && !(b.multiport && is_ew(p.dir))) {
        add(Rule::slot_parity, {b.id}, where + " has a lower slot but is not a multiport E/W port");
      }
      if (!seen.insert({p.dir, p.level}).second) add(Rule::duplicate_direction, {b.id}, where);
      if (axis_of(p.dir) == axis_of(b.orient)) {
        add(Rule::port_on_axis, {b.id}, where + " lies on the orientation axis " + to_char(b.orient));
      }
      if (p.hadamard && !is_ew(p.dir)) add(Rule::hadamard_direction, {b.id}, where);

      if (p.term.kind != Terminal::Kind::connected) {
        has_terminal = true;
        if (is_lateral(p.dir)) {
          add(Rule::dangling_port, {b.id}, where + " is not connected");
        } else if ((p.term.kind == Terminal::Kind::input) != (p.dir == Direction::D)) {
          add(Rule::terminal_direction, {b.id}, where + " inputs belong on D ports, outputs on U ports");
        }
        continue;
      }

      auto it = by_id.find(p.term.block);
      if (it == by_id.end()) {
        add(Rule::unknown_peer, {b.id}, where + " points at missing block " + std::to_string(p.term.block));
        continue;
      }
      const LogicalBlock &q = *it->second;
      if (q.id == b.id) {
        add(Rule::self_connection, {b.id}, where);
        continue;
      }
      if (p.term.slot < 0 || p.term.slot >= static_cast<int>(q.ports.size())) {
        add(Rule::unknown_peer, {b.id, q.id}, where + " points at missing slot");
        continue;
      }
      const Port &pq = q.ports[p.term.slot];
      if (pq.term.kind != Terminal::Kind::connected || pq.term.block != b.id ||
          pq.term.slot != static_cast<int>(s)) {
        add(Rule::asymmetric_connection, {b.id, q.id}, where);
        continue;
      }
      // check each link once, from its lower end
      if (std::make_pair(b.id, static_cast<int>(s)) > std::make_pair(q.id, p.term.slot)) continue;
      if (pq.dir != p.dir) {
        add(Rule::direction_mismatch, {b.id, q.id},
            std::string(1, to_char(p.dir)) + " joined to " + to_char(pq.dir));
        continue;
      }
      int h = (p.hadamard ? 1 : 0) + (pq.hadamard ? 1 : 0);
      if (!commensurate(b.type, b.orient, q.type, q.orient, h)) {
        std::ostringstream os;
        os << to_char(b.type) << "/" << to_char(b.orient) << " vs " << to_char(q.type) << "/" << to_char(q.orient)
           << " with " << h << " Hadamard(s)";
        add(Rule::commensurability, {b.id, q.id}, os.str());
      }
      if (b.multiport && q.multiport && is_ew(p.dir) && p.level != pq.level) {
        add(Rule::slot_parity, {b.id, q.id}, "upper slot joined to lower slot");
      }
      if (indexed && net.workspace_index.count(b.id) && net.workspace_index.count(q.id)) {
        int sep = std::abs(net.workspace_index.at(b.id) - net.workspace_index.at(q.id));
        if (sep > range_r / 2) {
          add(Rule::range, {b.id, q.id}, "separation " + std::to_string(sep) + " > " + std::to_string(range_r / 2));
        }
      }
    }
    if (d_ports > 1) add(Rule::multiple_d_ports, {b.id}, std::to_string(d_ports) + " D ports");
    if (has_terminal && !memory_convention_ok(b)) {
      add(Rule::memory_convention, {b.id},
          std::string("terminal on ") + to_char(b.type) + "/" + to_char(b.orient) + " block");
    }
  }
  return rep;
}

int64_t network_volume(const BlockNetwork &net) {
  int64_t q = 0;
  for (const auto &b : net.blocks) q += b.half_distance ? 2 : 4;
  return q;
}

BlockNetwork relabel(const BlockNetwork &net, const std::map<int, int> &id_map) {
  auto m = [&id_map](int id) {
    auto it = id_map.find(id);
    if (it == id_map.end()) throw std::invalid_argument("relabel map misses block " + std::to_string(id));
    return it->second;
  };
  BlockNetwork out = net;
  for (auto &b : out.blocks) {
    b.id = m(b.id);
    for (auto &p : b.ports) {
      if (p.term.kind == Terminal::Kind::connected) p.term.block = m(p.term.block);
    }
  }
  out.workspace_index.clear();
  for (const auto &[id, slot] : net.workspace_index) out.workspace_index[m(id)] = slot;
  for (auto &seg : out.segment_boundaries) {
    for (auto &id : seg) id = m(id);
  }
  return out;
}

int NetBuilder::block(BlockType t, Orientation o, bool half_distance) {
  LogicalBlock b;
  b.id = static_cast<int>(net_.blocks.size()) + 1;
  b.type = t;
  b.orient = o;
  b.half_distance = half_distance;
  net_.workspace_index[b.id] = static_cast<int>(net_.blocks.size());
  net_.blocks.push_back(b);
  return b.id;
}

LogicalBlock &NetBuilder::get(int id) {
  for (auto &b : net_.blocks) {
    if (b.id == id) return b;
  }
  throw std::invalid_argument("no block " + std::to_string(id));
}

void NetBuilder::input(int block, const std::string &label) {
  get(block).ports.push_back({Direction::D, false, Terminal::input(label), 0});
}

void NetBuilder::output(int block, const std::string &label) {
  get(block).ports.push_back({Direction::U, false, Terminal::output(label), 0});
}

void NetBuilder::connect(int a, int b, Direction dir, bool hadamard_a, bool hadamard_b) {
  LogicalBlock &ba = get(a);
  LogicalBlock &bb = get(b);
  int sa = static_cast<int>(ba.ports.size());
  int sb = static_cast<int>(bb.ports.size()) + (a == b ? 1 : 0);
  ba.ports.push_back({dir, hadamard_a, Terminal::connect(b, sb), 0});
  get(b).ports.push_back({dir, hadamard_b, Terminal::connect(a, sa), 0});
}

}  // namespace activol
