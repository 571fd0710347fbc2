#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "activol/costs.hpp"

namespace activol {

struct UnknownOpError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ProgramOp {
  std::string op;
  CostSummary cost;
  std::vector<int> qubits;  // empty: the op may touch every qubit
};

struct ProgramNode {
  bool is_repeat = false;
  ProgramOp op;                   // when !is_repeat
  int64_t count = 0;              // when is_repeat
  std::vector<ProgramNode> body;  // when is_repeat
};

struct Program {
  int qubits = 0;
  CostConstants constants;
  std::vector<ProgramNode> nodes;
};

struct ProgramSummary {
  int memory_requirement = 0;
  Rational active_volume;
  Rational base_volume;
  ResourceDemand demand;
  Rational reaction_depth;
  int64_t op_count = 0;
};

ProgramSummary summarize(const Program &p);

// Longest dependency chain, ops joined when they share a qubit, in program
// order. A repeat counts as one op spanning its body's qubits whose depth is
// count times the body's depth.
Rational reaction_depth(const Program &p);
Rational reaction_depth(const std::vector<ProgramNode> &nodes);

// Calls `f` for every op in execution order, unrolling repeats. Throws
// std::length_error once more than `max_ops` ops would be visited.
void for_each_op(const Program &p, const std::function<void(const ProgramOp &)> &f, int64_t max_ops);

ProgramNode make_op_node(std::string op, CostSummary cost, std::vector<int> qubits = {});
ProgramNode make_repeat_node(int64_t count, std::vector<ProgramNode> body);

}  // namespace activol
