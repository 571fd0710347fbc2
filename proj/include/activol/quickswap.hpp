#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace activol {

struct Swap {
  int a = 0;
  int b = 0;
};
using QuickswapLayer = std::vector<Swap>;

// Memory as slot -> occupant id, -1 for an empty slot. Ids are >= 0.
using SlotMap = std::vector<int64_t>;

struct QuickswapPlan {
  std::vector<QuickswapLayer> layers;
  bool converged = true;  // false when the layer cap was hit
};

bool is_quickswappable(int a, int b);
// Every swap joins slots a power of two apart and no slot appears twice.
bool is_legal_layer(const QuickswapLayer &layer, int n_slots);
void apply_layer(SlotMap &slots, const QuickswapLayer &layer);

int quickswap_layer_cap(int n_slots);

// Greedy layered plan moving each (occupant, slot) target into place.
// Targets must name distinct occupants present in `slots` and distinct slots.
// A negative cap selects quickswap_layer_cap(n).
QuickswapPlan quickswap_plan(const SlotMap &slots, const std::vector<std::pair<int64_t, int>> &targets,
                             int cap = -1);

struct QuickswapStats {
  int n_q = 0;
  int s = 0;
  int trials = 0;
  double mean = 0;  // over converged trials
  double std = 0;
  int max = 0;
  int failures = 0;
  uint64_t seed = 0;
};

// Random full memory of n_q qubits; every s-th slot receives a distinct
// random qubit as target. Deterministic for a given seed.
QuickswapStats quickswap_experiment(int n_q, int s, int trials, uint64_t seed);

std::string quickswap_csv_header();
std::string quickswap_csv_row(const QuickswapStats &st);

}  // namespace activol
