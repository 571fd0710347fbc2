#include "activol/device.hpp"

#include <cmath>
#include <stdexcept>

namespace activol {

namespace {

void require(bool ok, const std::string &what) {
  if (!ok) throw std::invalid_argument(what);
}

double d3(int d) { return static_cast<double>(d) * d * d; }

}  // namespace

DeviceMetrics photonic_metrics(const PhotonicConfig &cfg, const ErrorModel &em) {
  require(cfg.rsg_count >= 1, "need at least one RSG");
  require(cfg.distance >= 2, "distance must be >= 2");
  require(cfg.tau_rsg > 0, "RSG period must be positive");
  double d2 = static_cast<double>(cfg.distance) * cfg.distance;
  require(cfg.lambda >= d2, "delay length must be at least d^2");
  DeviceMetrics m;
  m.memory_qubits = std::floor(cfg.rsg_count * cfg.lambda / (2 * d2));
  m.workspace_modules = cfg.rsg_count * cfg.lambda / (2 * d2);
  m.speed_blocks_per_sec = cfg.rsg_count / (2 * d3(cfg.distance) * cfg.tau_rsg);
  m.per_block_error = em.p(cfg.distance);
  m.reaction_time = cfg.base_reaction + cfg.lambda * cfg.tau_rsg;
  return m;
}

DeviceMetrics matter_metrics(int n_modules, int distance, double code_cycle, double reaction_time,
                             const ErrorModel &em) {
  require(n_modules >= 2 && n_modules % 2 == 0, "module count must be even and >= 2");
  require(distance >= 2, "distance must be >= 2");
  require(code_cycle > 0, "code cycle must be positive");
  DeviceMetrics m;
  m.memory_qubits = n_modules / 2;
  m.workspace_modules = n_modules / 2;
  m.speed_blocks_per_sec = (n_modules / 2) / (distance * code_cycle);
  m.per_block_error = em.p(distance);
  m.reaction_time = reaction_time;
  return m;
}

double delay_length_m(double lambda, DelayKind kind) {
  return kind == DelayKind::fiber ? lambda / 5 : 0.3 * lambda;
}

RuntimeEstimate av_runtime(double volume, double reaction_depth, const DeviceMetrics &m) {
  require(volume >= 0 && reaction_depth >= 0, "volume and depth must be non-negative");
  require(m.speed_blocks_per_sec > 0, "device speed must be positive");
  RuntimeEstimate r;
  r.volume_time = volume / m.speed_blocks_per_sec;
  r.reaction_bound = reaction_depth * m.reaction_time;
  r.wall_time = std::max(r.volume_time, r.reaction_bound);
  r.limiting = r.reaction_bound > r.volume_time ? "reaction" : "volume";
  return r;
}

RuntimeEstimate av_runtime(const Rational &volume, const Rational &reaction_depth, const DeviceMetrics &m) {
  return av_runtime(volume.to_double(), reaction_depth.to_double(), m);
}

double baseline_runtime_matter(double n_t, int distance, double code_cycle) {
  require(n_t >= 0 && distance >= 1 && code_cycle > 0, "invalid baseline parameters");
  return n_t * distance * code_cycle;
}

double baseline_runtime_photonic(double n_q, double n_t, const PhotonicConfig &cfg) {
  require(cfg.rsg_count >= 1 && cfg.tau_rsg > 0, "invalid photonic config");
  return 2 * n_q * n_t * d3(cfg.distance) * cfg.tau_rsg / cfg.rsg_count;
}

double baseline_photonic_rsgs(double n_q, double lambda, int distance) {
  require(lambda > 0 && distance >= 1, "invalid photonic parameters");
  return 2 * n_q * distance * distance / lambda;
}

double total_error(double p_block, double n_blocks) {
  require(p_block >= 0 && p_block <= 1 && n_blocks >= 0, "invalid error parameters");
  if (p_block == 1) return n_blocks > 0 ? 1.0 : 0.0;
  return -std::expm1(n_blocks * std::log1p(-p_block));
}

double resource_state_count(double volume_blocks, int distance) {
  require(volume_blocks >= 0 && distance >= 1, "invalid resource-state parameters");
  return 2 * volume_blocks * d3(distance);
}

double footprint(double patches, int distance) { return patches * 2.0 * distance * distance; }

const std::vector<DevicePreset> &device_presets() {
  auto photonic = [](std::string name, int m, double lambda, int d, DelayKind k, std::string note) {
    DevicePreset p;
    p.name = std::move(name);
    p.kind = "photonic";
    p.photonic.rsg_count = m;
    p.photonic.lambda = lambda;
    p.photonic.distance = d;
    p.photonic.delay = k;
    p.note = std::move(note);
    return p;
  };
  auto matter = [](std::string name, int n, int d, double cycle, double reaction, std::string note) {
    DevicePreset p;
    p.name = std::move(name);
    p.kind = "matter";
    p.n_modules = n;
    p.photonic.distance = d;
    p.code_cycle = cycle;
    p.reaction_time = reaction;
    p.note = std::move(note);
    return p;
  };
  static const std::vector<DevicePreset> presets = {
      photonic("device1", 64, 8192, 32, DelayKind::fiber, "1.6 km fiber, 256 qubits"),
      photonic("device3", 64, 32768, 32, DelayKind::free_space, "10 km free space"),
      photonic("device4", 1024, 8192, 32, DelayKind::fiber, "4096 qubits"),
      photonic("device5", 256, 32768, 32, DelayKind::free_space, "10 km free space, 4096 qubits"),
      photonic("rsg8", 8, 1e6, 32, DelayKind::free_space, "1e6-photon free-space delay"),
      photonic("av_photonic_9700", 9700, 1e3, 26, DelayKind::fiber, "factoring, 200 m fiber"),
      photonic("av_photonic_970", 970, 1e4, 26, DelayKind::fiber, "factoring, 2 km fiber"),
      photonic("av_photonic_97", 97, 1e5, 26, DelayKind::free_space, "factoring, 30 km free space"),
      photonic("av_photonic_10", 10, 1e6, 26, DelayKind::free_space, "factoring, 300 km free space"),
      matter("av_matter_1us", 14000, 26, 1e-6, 1e-6, "factoring, superconducting"),
      matter("av_matter_1ms", 14000, 26, 1e-3, 1e-5, "factoring, trapped ions"),
  };
  return presets;
}

const DevicePreset &lookup_preset(const std::string &name) {
  for (const auto &p : device_presets()) {
    if (p.name == name) return p;
  }
  throw std::invalid_argument("unknown device preset: " + name);
}

DeviceMetrics preset_metrics(const DevicePreset &p, const ErrorModel &em) {
  if (p.kind == "photonic") return photonic_metrics(p.photonic, em);
  return matter_metrics(p.n_modules, p.photonic.distance, p.code_cycle, p.reaction_time, em);
}

}  // namespace activol
