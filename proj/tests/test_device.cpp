#include <gtest/gtest.h>

#include <cmath>

#include "activol/device.hpp"

using namespace activol;

namespace {

constexpr double kFactoringVolume = 8.69577e11;

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

PhotonicConfig rsg(int m, double lambda, int d, DelayKind k = DelayKind::fiber) {
  PhotonicConfig c;
  c.rsg_count = m;
  c.lambda = lambda;
  c.distance = d;
  c.delay = k;
  return c;
}

}  // namespace

TEST(Photonic, PerRsgContribution) {
  DeviceMetrics one = photonic_metrics(rsg(1, 8192, 32));
  EXPECT_EQ(one.memory_qubits, 4);
  EXPECT_NEAR(one.speed_blocks_per_sec, 1e9 / (2.0 * 32 * 32 * 32), 1e-6);
  EXPECT_NEAR(one.reaction_time, 5e-6 + 8192e-9, 1e-15);
}

TEST(Photonic, ExampleDevices) {
  DeviceMetrics d1 = photonic_metrics(rsg(64, 8192, 32));
  EXPECT_EQ(d1.memory_qubits, 256);
  EXPECT_LT(rel(d1.speed_blocks_per_sec, 1e6), 0.03);
  DeviceMetrics d3 = photonic_metrics(rsg(64, 32768, 32, DelayKind::free_space));
  EXPECT_EQ(d3.memory_qubits, 4 * d1.memory_qubits);
  DeviceMetrics d4 = photonic_metrics(rsg(1024, 8192, 32));
  EXPECT_EQ(d4.memory_qubits, 4096);
  EXPECT_LT(rel(1e11 / d4.speed_blocks_per_sec, 100 * 60), 0.1);
  DeviceMetrics d5 = photonic_metrics(rsg(256, 32768, 32, DelayKind::free_space));
  EXPECT_EQ(d5.memory_qubits, 4096);
  EXPECT_LT(rel(1e11 / d5.speed_blocks_per_sec, 7 * 3600), 0.05);
  DeviceMetrics d8 = photonic_metrics(rsg(8, 1e6, 32, DelayKind::free_space));
  EXPECT_LT(rel(1e11 / d8.speed_blocks_per_sec, 10 * 86400), 0.1);
  DeviceMetrics huge = photonic_metrics(rsg(1, 1e7 / 0.3, 32, DelayKind::free_space));
  EXPECT_LT(rel(huge.memory_qubits, 16000), 0.05);
}

TEST(Photonic, DelayLengths) {
  EXPECT_NEAR(delay_length_m(8192, DelayKind::fiber), 1638.4, 1e-9);
  EXPECT_NEAR(delay_length_m(1e4, DelayKind::fiber), 2000, 1e-9);
  EXPECT_NEAR(delay_length_m(32768, DelayKind::free_space), 9830.4, 1e-9);
  EXPECT_NEAR(delay_length_m(1e6, DelayKind::free_space), 3e5, 1e-6);
}

TEST(Photonic, RejectsShortDelay) {
  EXPECT_THROW(photonic_metrics(rsg(1, 100, 26)), std::invalid_argument);
  EXPECT_THROW(photonic_metrics(rsg(0, 1000, 26)), std::invalid_argument);
}

TEST(Photonic, FactoringRuntimes) {
  // Wall time is the larger of the volume-limited and reaction-limited times.
  struct Case {
    int m;
    double lambda;
    double expect_s;
    double tol;
  } cases[] = {{9700, 1e3, 54 * 60, 0.05}, {970, 1e4, 8.9 * 3600, 0.05}, {97, 1e5, 3.7 * 86400, 0.05},
               {10, 1e6, 35 * 86400, 0.03}};
  for (const auto &c : cases) {
    DeviceMetrics m = photonic_metrics(rsg(c.m, c.lambda, 26, c.lambda > 1e4 ? DelayKind::free_space : DelayKind::fiber));
    RuntimeEstimate r = av_runtime(kFactoringVolume, 2.56e9, m);
    EXPECT_LT(rel(r.volume_time, c.expect_s), c.tol) << c.m;
    EXPECT_GE(r.wall_time, r.volume_time);
    EXPECT_GE(r.wall_time, r.reaction_bound);
  }
}

TEST(Photonic, BaselineRuntimes) {
  EXPECT_LT(rel(baseline_photonic_rsgs(6200, 1000, 28), 9700), 0.01);
  double t = baseline_runtime_photonic(6200, 6.1e9, rsg(9700, 1000, 28));
  EXPECT_LT(rel(t, 48 * 3600), 0.02);
  double t10 = baseline_runtime_photonic(6200, 6.1e9, rsg(10, 1e6, 28, DelayKind::free_space));
  EXPECT_LT(rel(t10, 5.4 * 365.25 * 86400), 0.05);
}

TEST(Matter, ModulesAndSpeed) {
  DeviceMetrics m = matter_metrics(14000, 26, 1e-6, 1e-6);
  EXPECT_EQ(m.workspace_modules, 7000);
  EXPECT_EQ(m.memory_qubits, 7000);
  EXPECT_NEAR(m.speed_blocks_per_sec, 7000 / 26e-6, 1e-3);
  RuntimeEstimate r = av_runtime(kFactoringVolume, 2.56e9, m);
  EXPECT_LT(rel(r.wall_time, 3230), 0.01);
  EXPECT_EQ(r.limiting, "volume");
  EXPECT_THROW(matter_metrics(1, 26, 1e-6, 1e-6), std::invalid_argument);
}

TEST(Matter, IonTrapExample) {
  DeviceMetrics m = matter_metrics(14000, 26, 1e-3, 1e-5);
  RuntimeEstimate r = av_runtime(kFactoringVolume, 2.56e9, m);
  EXPECT_LT(rel(r.wall_time, 37 * 86400), 0.02);
  EXPECT_LT(rel(footprint(14000, 26), 19e6), 0.01);
  EXPECT_LT(rel(baseline_runtime_matter(6.1e9, 28, 1e-6), 47.4 * 3600), 0.01);
}

TEST(Runtime, ReactionLimited) {
  DeviceMetrics m;
  m.speed_blocks_per_sec = 1e9;
  m.reaction_time = 1e-3;
  RuntimeEstimate r = av_runtime(Rational(1000), Rational(50), m);
  EXPECT_EQ(r.limiting, "reaction");
  EXPECT_NEAR(r.wall_time, 0.05, 1e-12);
  EXPECT_NEAR(r.volume_time, 1e-6, 1e-15);
}

TEST(Totals, ErrorAndResourceStates) {
  EXPECT_NEAR(total_error(1e-15, 1e12), -std::expm1(1e12 * std::log1p(-1e-15)), 1e-18);
  EXPECT_NEAR(total_error(1e-15, 1e12), 1e-3, 1e-6);
  EXPECT_EQ(total_error(0, 1e12), 0.0);
  EXPECT_NEAR(total_error(0.5, 2), 0.75, 1e-15);
  EXPECT_DOUBLE_EQ(resource_state_count(10, 26), 2 * 10 * 17576.0);
  EXPECT_DOUBLE_EQ(footprint(1, 10), 200);
}

TEST(Presets, LookupAndMetrics) {
  EXPECT_GE(device_presets().size(), 10u);
  EXPECT_EQ(lookup_preset("device1").photonic.rsg_count, 64);
  EXPECT_THROW(lookup_preset("device2"), std::invalid_argument);
  DeviceMetrics m = preset_metrics(lookup_preset("av_matter_1us"));
  EXPECT_EQ(m.workspace_modules, 7000);
  DeviceMetrics p = preset_metrics(lookup_preset("av_photonic_10"));
  EXPECT_GE(p.memory_qubits, 6200);
  for (const auto &pr : device_presets()) EXPECT_GT(preset_metrics(pr).speed_blocks_per_sec, 0) << pr.name;
}
