#include "activol/program.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace activol {

namespace {

CostSummary total_cost(const std::vector<ProgramNode> &nodes, int64_t &ops) {
  std::vector<CostSummary> parts;
  for (const auto &n : nodes) {
    if (n.is_repeat) {
      int64_t inner = 0;
      parts.push_back(repeat(total_cost(n.body, inner), n.count));
      ops += inner * n.count;
    } else {
      parts.push_back(n.op.cost);
      ++ops;
    }
  }
  return sequence("program", parts);
}

// Qubits touched by a node list; `all` is set when some op has no list.
void collect_qubits(const std::vector<ProgramNode> &nodes, std::set<int> &out, bool &all) {
  for (const auto &n : nodes) {
    if (n.is_repeat) {
      collect_qubits(n.body, out, all);
    } else if (n.op.qubits.empty()) {
      all = true;
    } else {
      out.insert(n.op.qubits.begin(), n.op.qubits.end());
    }
  }
}

}  // namespace

ProgramSummary summarize(const Program &p) {
  ProgramSummary s;
  s.memory_requirement = p.qubits;
  CostSummary c = total_cost(p.nodes, s.op_count);
  s.active_volume = c.volume;
  s.base_volume = c.base_volume;
  s.demand = c.demand;
  s.reaction_depth = reaction_depth(p.nodes);
  return s;
}

Rational reaction_depth(const std::vector<ProgramNode> &nodes) {
  std::map<int, Rational> finish;
  Rational floor_all;  // finish time of the latest op that touched every qubit
  Rational longest;
  for (const auto &n : nodes) {
    Rational depth;
    std::set<int> qs;
    bool all = false;
    if (n.is_repeat) {
      depth = reaction_depth(n.body) * n.count;
      collect_qubits(n.body, qs, all);
    } else {
      depth = n.op.cost.reaction_depth;
      qs.insert(n.op.qubits.begin(), n.op.qubits.end());
      all = qs.empty();
    }
    Rational start = floor_all;
    if (all) {
      start = longest;
    } else {
      for (int q : qs) {
        auto it = finish.find(q);
        if (it != finish.end()) start = std::max(start, it->second);
      }
    }
    Rational end = start + depth;
    if (all) {
      floor_all = end;
      finish.clear();
    } else {
      for (int q : qs) finish[q] = end;
    }
    longest = std::max(longest, end);
  }
  return longest;
}

Rational reaction_depth(const Program &p) { return reaction_depth(p.nodes); }

namespace {

void visit(const std::vector<ProgramNode> &nodes, const std::function<void(const ProgramOp &)> &f,
           int64_t &budget) {
  for (const auto &n : nodes) {
    if (n.is_repeat) {
      for (int64_t i = 0; i < n.count; ++i) visit(n.body, f, budget);
    } else {
      if (--budget < 0) throw std::length_error("program too large to unroll");
      f(n.op);
    }
  }
}

}  // namespace

void for_each_op(const Program &p, const std::function<void(const ProgramOp &)> &f, int64_t max_ops) {
  int64_t budget = max_ops;
  visit(p.nodes, f, budget);
}

ProgramNode make_op_node(std::string op, CostSummary cost, std::vector<int> qubits) {
  ProgramNode n;
  n.op.op = std::move(op);
  n.op.cost = std::move(cost);
  n.op.qubits = std::move(qubits);
  return n;
}

ProgramNode make_repeat_node(int64_t count, std::vector<ProgramNode> body) {
  if (count < 0) throw std::invalid_argument("repeat count must be non-negative");
  ProgramNode n;
  n.is_repeat = true;
  n.count = count;
  n.body = std::move(body);
  return n;
}

}  // namespace activol
