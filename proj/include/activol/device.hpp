#pragma once

#include <string>
#include <vector>

#include "activol/distill.hpp"
#include "activol/rational.hpp"

namespace activol {

enum class DelayKind { fiber, free_space };

struct PhotonicConfig {
  int rsg_count = 1;
  double tau_rsg = 1e-9;  // seconds per resource state
  double lambda = 1000;   // delay length in time bins
  int distance = 26;
  DelayKind delay = DelayKind::fiber;
  double base_reaction = 5e-6;  // reaction time is base_reaction + lambda * tau_rsg
};

struct DeviceMetrics {
  double memory_qubits = 0;
  double workspace_modules = 0;
  double speed_blocks_per_sec = 0;
  double per_block_error = 0;
  double reaction_time = 0;
};

DeviceMetrics photonic_metrics(const PhotonicConfig &cfg, const ErrorModel &em = {});
// Matter-based machine with n_modules qubit modules, half of them workspace.
DeviceMetrics matter_metrics(int n_modules, int distance, double code_cycle, double reaction_time,
                             const ErrorModel &em = {});

// Physical delay length in meters.
double delay_length_m(double lambda, DelayKind kind);

struct RuntimeEstimate {
  double wall_time = 0;
  double volume_time = 0;    // active volume / speed
  double reaction_bound = 0; // reaction depth * reaction time
  std::string limiting;      // "volume" or "reaction"
};

RuntimeEstimate av_runtime(const Rational &volume, const Rational &reaction_depth, const DeviceMetrics &m);
RuntimeEstimate av_runtime(double volume, double reaction_depth, const DeviceMetrics &m);

// Baseline: each T gate takes one logical cycle of d code cycles.
double baseline_runtime_matter(double n_t, int distance, double code_cycle);
// Baseline on interleaving modules: 2 n_q n_t d^3 resource states at M per tau.
double baseline_runtime_photonic(double n_q, double n_t, const PhotonicConfig &cfg);
// Interleaving modules needed to hold 2 n_q logical qubits at lambda/d^2 each.
double baseline_photonic_rsgs(double n_q, double lambda, int distance);

// 1 - (1 - p)^n without cancellation.
double total_error(double p_block, double n_blocks);
// Resource states consumed: 2 * volume * d^3.
double resource_state_count(double volume_blocks, int distance);
// Physical qubits for `patches` surface-code patches of 2 d^2 qubits.
double footprint(double patches, int distance);

struct DevicePreset {
  std::string name;
  std::string kind;  // "photonic" or "matter"
  PhotonicConfig photonic;
  int n_modules = 0;
  double code_cycle = 0;
  double reaction_time = 0;
  std::string note;
};

const std::vector<DevicePreset> &device_presets();
const DevicePreset &lookup_preset(const std::string &name);
DeviceMetrics preset_metrics(const DevicePreset &p, const ErrorModel &em = {});

}  // namespace activol
