#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace activol {

enum class Direction { U, D, N, E, S, W };
enum class BlockType { Z, X };
enum class Orientation { E, N, U };
enum class Axis { UD, NS, EW };

Axis axis_of(Direction d);
Axis axis_of(Orientation o);
char to_char(Direction d);
char to_char(BlockType t);
char to_char(Orientation o);
Direction parse_direction(const std::string &s);
BlockType parse_block_type(const std::string &s);
Orientation parse_orientation(const std::string &s);

struct Terminal {
  enum class Kind { connected, input, output };
  Kind kind = Kind::connected;
  int block = -1;  // peer block id when connected
  int slot = -1;   // index into the peer's port list
  std::string label;

  static Terminal connect(int block, int slot) { return {Kind::connected, block, slot, {}}; }
  static Terminal input(std::string label) { return {Kind::input, -1, -1, std::move(label)}; }
  static Terminal output(std::string label) { return {Kind::output, -1, -1, std::move(label)}; }
  bool operator==(const Terminal &o) const = default;
};

struct Port {
  Direction dir = Direction::U;
  bool hadamard = false;
  Terminal term;
  int level = 0;  // multiport blocks only: 0 = upper, 1 = lower E/W slot
  bool operator==(const Port &o) const = default;
};

struct LogicalBlock {
  int id = 0;
  BlockType type = BlockType::Z;
  Orientation orient = Orientation::E;
  std::vector<Port> ports;
  bool half_distance = false;
  bool multiport = false;       // duplicated E/W slots (distillation networks)
  bool rotated_memory = false;  // N-oriented Z block allowed to carry terminals
  bool operator==(const LogicalBlock &o) const = default;
};

// Labels starting with '~' are bridge qubits: an output and an input with the
// same bridge label are joined by teleportation outside the network.
inline bool is_bridge_label(const std::string &label) { return !label.empty() && label[0] == '~'; }

struct BlockNetwork {
  std::vector<LogicalBlock> blocks;
  std::map<int, int> workspace_index;             // block id -> workspace slot
  std::vector<std::vector<int>> segment_boundaries;  // block ids per legal segment

  const LogicalBlock *find(int id) const;
  // Open legs in order of appearance (block order, then port order).
  std::vector<std::string> input_labels() const;
  std::vector<std::string> output_labels() const;
  size_t block_count() const { return blocks.size(); }
  bool operator==(const BlockNetwork &o) const = default;
};

enum class Rule {
  duplicate_id,
  port_count,
  duplicate_direction,
  multiple_d_ports,
  port_on_axis,
  hadamard_direction,
  terminal_direction,
  memory_convention,
  dangling_port,
  unknown_peer,
  asymmetric_connection,
  direction_mismatch,
  self_connection,
  commensurability,
  slot_parity,
  missing_index,
  range,
};

std::string rule_name(Rule r);

struct Violation {
  Rule rule;
  std::vector<int> blocks;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  bool has(Rule r) const;
  std::string summary() const;
};

// Commensurability of two joined blocks given how many of the two joined
// ports carry a Hadamard (0, 1 or 2).
bool commensurate(BlockType a, Orientation oa, BlockType b, Orientation ob, int hadamards);

ValidationReport validate_network(const BlockNetwork &net, int range_r = 12);

// Volume in quarter-blocks; half-distance blocks count 2.
int64_t network_volume(const BlockNetwork &net);

// Rename block ids through `id_map` (must cover every block).
BlockNetwork relabel(const BlockNetwork &net, const std::map<int, int> &id_map);

// Incremental construction helper used by the builders. Block ids start at 1
// and workspace slots follow creation order.
class NetBuilder {
 public:
  int block(BlockType t, Orientation o, bool half_distance = false);
  void input(int block, const std::string &label);
  void output(int block, const std::string &label);
  // Joins a port of block a to a port of block b; both point in `dir`.
  void connect(int a, int b, Direction dir, bool hadamard_a = false, bool hadamard_b = false);
  LogicalBlock &get(int id);
  void set_segments(std::vector<std::vector<int>> segs) { net_.segment_boundaries = std::move(segs); }
  BlockNetwork build() const { return net_; }

 private:
  BlockNetwork net_;
};

}  // namespace activol
