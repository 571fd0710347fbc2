#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

#include "activol/program_io.hpp"
#include "activol/sched.hpp"

using namespace activol;

namespace {

std::string fixture(const std::string &name) {
  const char *dir = std::getenv("ACTIVOL_FIXTURES");
  return std::string(dir ? dir : "fixtures") + "/" + name;
}

MachineConfig machine(int n) {
  MachineConfig m;
  m.n_modules = n;
  return m;
}

CostSummary blocks(int64_t quarters) { return make_cost("volume", Rational(quarters, 4), 0, 0, 0, CostConstants{}); }

Program volume_program(int qubits, const std::vector<int64_t> &quarters) {
  Program p;
  p.qubits = qubits;
  for (size_t i = 0; i < quarters.size(); ++i)
    p.nodes.push_back(make_op_node("volume", blocks(quarters[i]), {static_cast<int>(i) % qubits}));
  return p;
}

// First-fit in program order without backfill; a piece larger than the
// remaining room spills into the following cycles.
std::vector<int64_t> first_fit_loads(const std::vector<int64_t> &pieces, int64_t budget) {
  std::vector<int64_t> loads;
  int64_t cur = 0;
  for (int64_t q : pieces) {
    if (q == 0) continue;
    if (cur > 0 && cur + q > budget) loads.push_back(cur), cur = 0;
    while (q > 0) {
      int64_t take = std::min(budget - cur, q);
      cur += take;
      q -= take;
      if (q > 0) loads.push_back(cur), cur = 0;
    }
  }
  if (cur > 0) loads.push_back(cur);
  return loads;
}

void expect_conservation(const ScheduleReport &r, const MachineConfig &m) {
  int64_t full = 4 * int64_t{m.workspace()};
  EXPECT_EQ(r.blocks_executed_quarters + r.idle_workspace_quarters + r.borrowed_workspace_quarters,
            r.logical_cycles * full);
  EXPECT_EQ(r.logical_cycles, r.work_cycles + r.stall_cycles);
  EXPECT_EQ(static_cast<int64_t>(r.loads_quarters.size()), r.work_cycles);
}

}  // namespace

TEST(Schedule, WorkedExampleThreeCycles) {
  Program p = program_from_file(fixture("packing_example.json"));
  MachineConfig m = machine_from_file(fixture("packing_machine.json"));
  ScheduleReport r = pack_cycles(p, m);
  EXPECT_EQ(r.work_cycles, 3);
  EXPECT_EQ(r.loads_quarters, (std::vector<int64_t>{24, 24, 20}));
  EXPECT_EQ(r.borrowed_workspace_quarters, 0);
  expect_conservation(r, m);
}

TEST(Schedule, MeasurementExampleOneCycle) {
  Program p = program_from_file(fixture("zmeas_example.json"));
  MachineConfig m = machine_from_file(fixture("zmeas_machine.json"));
  ScheduleReport r = pack_cycles(p, m);
  EXPECT_EQ(r.work_cycles, 1);
  EXPECT_EQ(r.blocks_executed_quarters, 4 * (5 + 2));
  expect_conservation(r, m);
}

TEST(Schedule, LoadsMatchFirstFitOracle) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<int64_t> q(0, 40);
    std::uniform_int_distribution<int> n(1, 40);
    std::vector<int64_t> pieces(n(rng));
    for (auto &x : pieces) x = q(rng);
    MachineConfig m = machine(16);
    ScheduleOptions opt;
    opt.simulate_memory = false;
    ScheduleReport r = pack_cycles(volume_program(4, pieces), m, opt);
    EXPECT_EQ(r.loads_quarters, first_fit_loads(pieces, 32)) << trial;
    int64_t total = 0;
    for (auto x : pieces) total += x;
    EXPECT_EQ(r.blocks_executed_quarters, total);
    EXPECT_GE(r.work_cycles * 32, total);
    expect_conservation(r, m);
  }
}

TEST(Schedule, UnitPiecesFillEveryCycle) {
  // With one-block pieces, only the last cycle can be partial.
  for (int n_ops : {1, 5, 24, 25, 100, 257}) {
    MachineConfig m = machine(12);
    ScheduleOptions opt;
    opt.simulate_memory = false;
    ScheduleReport r = pack_cycles(volume_program(3, std::vector<int64_t>(n_ops, 4)), m, opt);
    int64_t total = 4 * int64_t{n_ops}, budget = 24;
    EXPECT_LT(r.work_cycles * budget - total, budget) << n_ops;
    EXPECT_GE(r.work_cycles * budget - total, 0) << n_ops;
  }
}

TEST(Schedule, MemorySimulationKeepsLoads) {
  std::mt19937_64 rng(8);
  std::vector<int64_t> pieces(60);
  for (auto &x : pieces) x = std::uniform_int_distribution<int64_t>(1, 20)(rng);
  MachineConfig m = machine(40);
  ScheduleOptions off;
  off.simulate_memory = false;
  ScheduleReport a = pack_cycles(volume_program(12, pieces), m), b = pack_cycles(volume_program(12, pieces), m, off);
  EXPECT_EQ(a.loads_quarters, b.loads_quarters);
  EXPECT_GE(a.logical_cycles, b.logical_cycles);
  EXPECT_EQ(a.quickswap_layers.size(), static_cast<size_t>(a.work_cycles));
  expect_conservation(a, m);
}

TEST(Schedule, BorrowingShrinksBudget) {
  // 8 data qubits in 6 memory modules borrow 2 workspace modules.
  MachineConfig m = machine(12);
  ScheduleOptions opt;
  opt.simulate_memory = false;
  opt.trace = true;
  ScheduleReport r = pack_cycles(volume_program(8, {16, 16, 16, 16}), m, opt);
  EXPECT_EQ(r.work_cycles, 4);
  for (const auto &c : r.trace) {
    EXPECT_EQ(c.borrowed, 2);
    EXPECT_EQ(c.budget_quarters, 16);
    EXPECT_EQ(c.occupancy, 8);
  }
  EXPECT_NEAR(r.borrowed_fraction, 1.0 / 3, 1e-12);
  expect_conservation(r, m);
}

TEST(Schedule, NonDataSlots) {
  EXPECT_EQ(non_data_slots(toffoli()), 5 + 6);
  EXPECT_EQ(non_data_slots(z_rotation_pi8()), 2 + 1);
  EXPECT_EQ(non_data_slots(cnot()), 0);
  EXPECT_EQ(non_data_slots(blocks(8)), 0);
}

TEST(Schedule, Infeasible) {
  EXPECT_THROW(pack_cycles(volume_program(12, {4}), machine(12)), InfeasibleMemoryError);
  Program p;
  p.qubits = 11;
  p.nodes.push_back(make_op_node("toffoli", toffoli(), {0, 1, 2}));
  EXPECT_THROW(pack_cycles(p, machine(12)), InfeasibleMemoryError);
  EXPECT_THROW(pack_cycles(volume_program(2, {4}), machine(0)), std::invalid_argument);
}

TEST(Schedule, ExplicitDistillation) {
  Program p;
  p.qubits = 3;
  for (int i = 0; i < 10; ++i) p.nodes.push_back(make_op_node("toffoli", toffoli(), {0, 1, 2}));
  MachineConfig m = machine(200);
  ScheduleOptions opt;
  opt.explicit_distillation = true;
  ScheduleReport r = pack_cycles(p, m, opt);
  EXPECT_EQ(r.distillation_runs, 10);
  EXPECT_EQ(r.blocks_executed_quarters, 10 * 4 * (12 + 30));
  ScheduleReport folded = pack_cycles(p, m);
  EXPECT_EQ(folded.distillation_runs, 0);
  EXPECT_EQ(folded.blocks_executed_quarters, 10 * 4 * (12 + 35));

  Program t;
  t.qubits = 1;
  t.nodes = {make_op_node("pi8", z_rotation_pi8(), {0}), make_op_node("pi8", z_rotation_pi8(), {0})};
  ScheduleReport rt = pack_cycles(t, m, opt);
  // One CCZ converted into two T states serves both rotations.
  EXPECT_EQ(rt.distillation_runs, 2);
  EXPECT_EQ(rt.blocks_executed_quarters, 2 * 14 + 120 + 66);
  expect_conservation(rt, m);
}

TEST(Schedule, ReactionDepthAndTimes) {
  Program p = program_from_file(fixture("adders.json"));
  MachineConfig m = machine_from_file(fixture("adders_machine.json"));
  ScheduleReport r = pack_cycles(p, m);
  EXPECT_EQ(r.reaction_depth, reaction_depth(p));
  EXPECT_EQ(r.reaction_depth, Rational(4 * (2 * 64 - 3)));
  double volume_time = r.logical_cycles * m.distance * m.code_cycle;
  EXPECT_DOUBLE_EQ(r.wall_time, std::max(volume_time, r.reaction_depth.to_double() * m.reaction_time));
  long double expect_err = 1 - std::pow(1 - (long double)m.error_model.p(m.distance), (long double)r.logical_cycles * m.n_modules);
  EXPECT_NEAR(r.total_error / expect_err, 1.0, 1e-6);
  expect_conservation(r, m);
}

TEST(Schedule, TracePlacementsAreContiguous) {
  Program p = program_from_file(fixture("adders.json"));
  MachineConfig m = machine_from_file(fixture("adders_machine.json"));
  ScheduleOptions opt;
  opt.trace = true;
  ScheduleReport r = pack_cycles(p, m, opt);
  ASSERT_EQ(static_cast<int64_t>(r.trace.size()), r.work_cycles);
  int64_t stalls = 0;
  for (const auto &c : r.trace) {
    int64_t at = 0;
    for (const auto &pl : c.placements) {
      EXPECT_EQ(pl.offset_quarters, at);
      at += pl.volume_quarters;
    }
    EXPECT_EQ(at, c.load_quarters);
    EXPECT_LE(c.load_quarters, c.budget_quarters);
    stalls += c.stalls;
  }
  EXPECT_EQ(stalls, r.stall_cycles);
}

TEST(Schedule, PieceCap) {
  Program p = program_from_file(fixture("factoring.json"));
  ScheduleOptions opt;
  opt.max_pieces = 1000;
  EXPECT_THROW(pack_cycles(p, machine(14000), opt), std::length_error);
}

TEST(Schedule, MemoryPressure) {
  Program p;
  p.qubits = 4;
  for (int i = 0; i < 6; ++i) p.nodes.push_back(make_op_node("toffoli", toffoli(), {0, 1, 2}));
  MemoryPressure mp = memory_pressure(p, machine(24));
  ASSERT_FALSE(mp.occupancy.empty());
  for (int occ : mp.occupancy) EXPECT_GT(occ, 4);
  EXPECT_GT(mp.non_data_fraction, 0);
  EXPECT_GE(mp.speed_loss, 0);
}
