#pragma once

#include <string>
#include <vector>

#include "activol/costs.hpp"
#include "activol/distill.hpp"
#include "activol/program.hpp"
#include "activol/quickswap.hpp"

namespace activol {

struct MachineConfig {
  int n_modules = 0;  // N; N/2 workspace and N/2 memory modules
  int range = 12;
  int distance = 26;
  double code_cycle = 1e-6;     // seconds
  double reaction_time = 1e-6;  // seconds
  CostConstants constants;
  ErrorModel error_model;

  int workspace() const { return n_modules / 2; }
  void validate() const;
};

struct InfeasibleMemoryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class SlotKind { empty, data, magic, stale, bridge, catalyst };

struct MemorySlot {
  SlotKind kind = SlotKind::empty;
  int64_t label = -1;
};

struct MemoryState {
  std::vector<MemorySlot> slots;
  explicit MemoryState(int n = 0) : slots(n) {}
  int occupied() const;
  SlotMap occupant_map() const;  // data qubits by label, everything else empty
};

struct ScheduleOptions {
  bool explicit_distillation = false;  // inject distillation instead of folding constants
  int stockpile_low_water = 0;         // CCZ states kept in stock in explicit mode
  bool simulate_memory = true;         // quickswap planning and bridge placement
  bool trace = false;
  int64_t max_pieces = 5'000'000;
};

struct CyclePlacement {
  std::string op;
  int64_t op_index = 0;
  int64_t offset_quarters = 0;
  int64_t volume_quarters = 0;
};

struct CycleTrace {
  int64_t budget_quarters = 0;  // workspace left after borrowing
  int64_t load_quarters = 0;
  int occupancy = 0;  // memory slots in use during the cycle
  int borrowed = 0;   // workspace modules lent to memory
  int bridges = 0;
  int quickswap_layers = 0;
  int stalls = 0;  // idle cycles inserted before this one
  std::vector<CyclePlacement> placements;
};

struct ScheduleReport {
  int64_t logical_cycles = 0;  // work cycles plus stall cycles
  int64_t work_cycles = 0;
  int64_t stall_cycles = 0;
  int64_t blocks_executed_quarters = 0;
  int64_t idle_workspace_quarters = 0;
  int64_t borrowed_workspace_quarters = 0;
  int64_t bridge_qubits_created = 0;
  std::vector<int> quickswap_layers;  // per work cycle
  std::vector<int64_t> loads_quarters;
  double borrowed_fraction = 0;  // share of workspace lent to memory
  Rational reaction_depth;
  double wall_time = 0;
  double total_error = 0;
  int64_t distillation_runs = 0;
  std::vector<CycleTrace> trace;  // filled when requested
};

ScheduleReport pack_cycles(const Program &program, const MachineConfig &cfg, const ScheduleOptions &opt = {});

// Memory slots a piece needs besides data qubits: staged magic states
// (3 per CCZ, 1 per T), their distillation inputs (2 per CCZ, 1 per T),
// and stale outputs awaiting reactive measurement.
int non_data_slots(const CostSummary &piece);

struct MemoryPressure {
  std::vector<int> occupancy;  // per work cycle
  std::vector<int> borrowed;
  double non_data_fraction = 0;  // non-data slots per executed block
  double speed_loss = 0;         // borrowed / workspace
};

MemoryPressure memory_pressure(const Program &program, const MachineConfig &cfg);

}  // namespace activol
