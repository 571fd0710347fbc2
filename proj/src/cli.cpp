#include "activol/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "activol/builders.hpp"
#include "activol/device.hpp"
#include "activol/network_io.hpp"
#include "activol/program_io.hpp"
#include "activol/quickswap.hpp"
#include "activol/sched.hpp"
#include "activol/verify.hpp"

namespace activol {

using nlohmann::json;

namespace {

constexpr double kFactoringQubits = 6200;
constexpr double kFactoringTGates = 6.1e9;

struct Globals {
  std::string constants;
  uint64_t seed = 1;
  std::string format = "text";
  std::string out_path;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct VerifyFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt(double v, int precision = 4) {
  std::ostringstream os;
  os << std::setprecision(precision) << v;
  return os.str();
}

json rational_json(const Rational &r) {
  return {{"blocks", r.decimal(6)}, {"exact", r.str()}, {"quarters", r.ceil_quarters()},
          {"exact_quarters", r.is_quarter_multiple()}};
}

json demand_json(const ResourceDemand &d) {
  return {{"t", d.t.decimal(6)}, {"ccz", d.ccz.decimal(6)}, {"y", d.y.decimal(6)}, {"sqrt_t", d.sqrt_t.decimal(6)}};
}

std::string fixtures_dir() {
  if (const char *env = std::getenv("ACTIVOL_FIXTURES")) return env;
  return "fixtures";
}

std::vector<DevicePreset> load_presets() {
  std::filesystem::path p = std::filesystem::path(fixtures_dir()) / "devices.json";
  if (std::filesystem::exists(p)) return presets_from_json(read_json_file(p.string()));
  return device_presets();
}

const DevicePreset &find_preset(const std::vector<DevicePreset> &presets, const std::string &name) {
  for (const auto &p : presets) {
    if (p.name == name) return p;
  }
  throw std::invalid_argument("unknown device preset: " + name);
}

void emit(const Globals &g, const json &report, const std::string &text, std::ostream &out) {
  std::string body = g.format == "json" ? report.dump(2) + "\n" : text;
  if (g.out_path.empty()) {
    out << body;
    return;
  }
  std::ofstream f(g.out_path);
  if (!f) throw IoError("cannot write '" + g.out_path + "'");
  f << body;
}

Program load_program(const std::string &path, const Globals &g) {
  json j;
  try {
    j = read_json_file(path);
  } catch (const json::parse_error &e) {
    throw IoError(std::string("parse error: ") + e.what());
  } catch (const std::runtime_error &e) {
    throw IoError(e.what());
  }
  CostConstants c;
  if (j.is_object() && j.contains("constants")) c = constants_from_json(j.at("constants"));
  if (!g.constants.empty()) c = constants_from_string(g.constants, c);
  return program_from_json(j, &c);
}

MachineConfig load_machine(const std::string &path) {
  try {
    return machine_from_json(read_json_file(path));
  } catch (const json::parse_error &e) {
    throw IoError(std::string("parse error: ") + e.what());
  } catch (const std::invalid_argument &) {
    throw;
  } catch (const std::runtime_error &e) {
    throw IoError(e.what());
  }
}

void cmd_estimate(const Globals &g, const std::string &program_path, const std::string &machine_path,
                  const std::string &preset_name, std::ostream &out) {
  Program prog = load_program(program_path, g);
  ProgramSummary s = summarize(prog);
  json rep = {{"memory_requirement", s.memory_requirement},
              {"active_volume", rational_json(s.active_volume)},
              {"reaction_depth", s.reaction_depth.decimal(6)},
              {"demand", demand_json(s.demand)},
              {"constants", constants_to_json(prog.constants)}};
  std::ostringstream text;
  text << "memory_requirement: " << s.memory_requirement << "\n"
       << "active_volume: " << s.active_volume.decimal(6) << " blocks\n"
       << "reaction_depth: " << s.reaction_depth.decimal(6) << "\n";

  std::optional<DeviceMetrics> metrics;
  std::string device_name;
  double footprint_qubits = 0;
  int distance = 0;
  if (!machine_path.empty()) {
    MachineConfig m = load_machine(machine_path);
    metrics = matter_metrics(m.n_modules, m.distance, m.code_cycle, m.reaction_time, m.error_model);
    device_name = machine_path;
    footprint_qubits = footprint(m.n_modules, m.distance);
    distance = m.distance;
  } else if (!preset_name.empty()) {
    auto presets = load_presets();
    const DevicePreset &p = find_preset(presets, preset_name);
    metrics = preset_metrics(p);
    device_name = p.name;
    distance = p.photonic.distance;
    footprint_qubits = p.kind == "matter" ? footprint(p.n_modules, distance) : 0;
  }
  if (metrics) {
    // Workspace modules can be lent to memory, all but one of them.
    if (s.memory_requirement > metrics->memory_qubits + metrics->workspace_modules - 1)
      throw InfeasibleMemoryError("program needs " + std::to_string(s.memory_requirement) +
                                  " qubits; the device cannot hold them");
    RuntimeEstimate rt = av_runtime(s.active_volume, s.reaction_depth, *metrics);
    // Memory and workspace both accrue errors: about twice the active volume.
    double err = total_error(std::min(1.0, metrics->per_block_error), 2 * s.active_volume.to_double());
    json dev = {{"device", device_name},
                {"speed_blocks_per_s", metrics->speed_blocks_per_sec},
                {"wall_time_s", rt.wall_time},
                {"wall_time", human_duration(rt.wall_time)},
                {"volume_time_s", rt.volume_time},
                {"reaction_bound_s", rt.reaction_bound},
                {"limiting", rt.limiting},
                {"total_error", err}};
    if (footprint_qubits > 0) dev["footprint_physical_qubits"] = footprint_qubits;
    rep["device"] = dev;
    text << "wall_time: " << human_duration(rt.wall_time) << " (" << fmt(rt.wall_time) << " s, " << rt.limiting
         << "-limited)\n"
         << "volume_time: " << human_duration(rt.volume_time) << "\n"
         << "reaction_bound: " << human_duration(rt.reaction_bound) << "\n"
         << "total_error: " << fmt(err) << "\n";
    if (footprint_qubits > 0) text << "footprint: " << fmt(footprint_qubits) << " physical qubits\n";
  }
  emit(g, rep, text.str(), out);
}

void cmd_schedule(const Globals &g, const std::string &program_path, const std::string &machine_path, bool trace,
                  bool explicit_distill, std::ostream &out) {
  Program prog = load_program(program_path, g);
  MachineConfig m = load_machine(machine_path);
  if (!g.constants.empty()) m.constants = prog.constants;
  ScheduleOptions opt;
  opt.trace = trace;
  opt.explicit_distillation = explicit_distill;
  ScheduleReport r = pack_cycles(prog, m, opt);
  json rep = {{"logical_cycles", r.logical_cycles},
              {"work_cycles", r.work_cycles},
              {"stall_cycles", r.stall_cycles},
              {"blocks_executed", Rational::from_quarters(r.blocks_executed_quarters).decimal(2)},
              {"blocks_executed_quarters", r.blocks_executed_quarters},
              {"idle_workspace_quarters", r.idle_workspace_quarters},
              {"borrowed_workspace_quarters", r.borrowed_workspace_quarters},
              {"borrowed_fraction", r.borrowed_fraction},
              {"bridge_qubits_created", r.bridge_qubits_created},
              {"distillation_runs", r.distillation_runs},
              {"reaction_depth", r.reaction_depth.decimal(6)},
              {"wall_time_s", r.wall_time},
              {"total_error", r.total_error},
              {"quickswap_layers", r.quickswap_layers}};
  std::ostringstream text;
  text << "logical_cycles: " << r.logical_cycles << " (" << r.stall_cycles << " stall)\n"
       << "blocks_executed: " << Rational::from_quarters(r.blocks_executed_quarters).decimal(2) << "\n"
       << "bridge_qubits: " << r.bridge_qubits_created << "\n"
       << "borrowed_fraction: " << fmt(r.borrowed_fraction) << "\n"
       << "reaction_depth: " << r.reaction_depth.decimal(6) << "\n"
       << "wall_time: " << human_duration(r.wall_time) << "\n"
       << "total_error: " << fmt(r.total_error) << "\n";
  if (trace) {
    json cycles = json::array();
    for (size_t i = 0; i < r.trace.size(); ++i) {
      const CycleTrace &c = r.trace[i];
      json placements = json::array();
      text << "cycle " << i + 1 << ": load " << Rational::from_quarters(c.load_quarters).decimal(2) << "/"
           << Rational::from_quarters(c.budget_quarters).decimal(2) << ", occupancy " << c.occupancy << ", bridges "
           << c.bridges << ", quickswap layers " << c.quickswap_layers << "\n";
      for (const auto &p : c.placements) {
        placements.push_back({{"op", p.op}, {"op_index", p.op_index}, {"offset_quarters", p.offset_quarters},
                              {"volume_quarters", p.volume_quarters}});
        text << "  " << p.op << " #" << p.op_index << " at " << Rational::from_quarters(p.offset_quarters).decimal(2)
             << " (" << Rational::from_quarters(p.volume_quarters).decimal(2) << " blocks)\n";
      }
      cycles.push_back({{"load_quarters", c.load_quarters}, {"budget_quarters", c.budget_quarters},
                        {"occupancy", c.occupancy}, {"borrowed", c.borrowed}, {"bridges", c.bridges},
                        {"quickswap_layers", c.quickswap_layers}, {"stalls", c.stalls},
                        {"placements", placements}});
    }
    rep["trace"] = cycles;
  }
  emit(g, rep, text.str(), out);
}

void cmd_quickswap(const Globals &g, int nq, int sep, int trials, const std::string &csv_path, std::ostream &out) {
  QuickswapStats st = quickswap_experiment(nq, sep, trials, g.seed);
  std::string csv = quickswap_csv_header() + "\n" + quickswap_csv_row(st) + "\n";
  if (!csv_path.empty()) {
    std::ofstream f(csv_path);
    if (!f) throw IoError("cannot write '" + csv_path + "'");
    f << csv;
  }
  json rep = {{"n_q", st.n_q}, {"s", st.s},     {"trials", st.trials},     {"mean", st.mean},
              {"std", st.std}, {"max", st.max}, {"failures", st.failures}, {"seed", st.seed}};
  std::string text = g.format == "csv" ? csv
                                       : "n_q " + std::to_string(st.n_q) + ", s " + std::to_string(st.s) +
                                             ": mean " + fmt(st.mean) + " layers (std " + fmt(st.std) + ", max " +
                                             std::to_string(st.max) + ", failures " + std::to_string(st.failures) +
                                             ")\n";
  emit(g, rep, text, out);
}

void cmd_verify(const Globals &g, const std::string &network_path, const std::string &builder, int range,
                std::ostream &out) {
  VerifyResult r;
  std::string what;
  if (!builder.empty()) {
    r = verify_builder(builder, range);
    what = builder;
  } else {
    json j;
    try {
      j = read_json_file(network_path);
    } catch (const json::parse_error &e) {
      throw IoError(std::string("parse error: ") + e.what());
    } catch (const std::runtime_error &e) {
      throw IoError(e.what());
    }
    r = verify_network(network_from_json(j), range);
    what = network_path;
  }
  json rep = {{"network", what},       {"valid", r.valid},    {"contracted", r.contracted},
              {"reference", r.has_reference}, {"matches", r.matches}, {"ok", r.ok()},
              {"detail", r.detail}};
  std::ostringstream text;
  text << what << ": " << (r.ok() ? "PASS" : "FAIL") << " (valid " << r.valid << ", contracted " << r.contracted;
  if (r.has_reference) text << ", matches reference " << r.matches;
  text << ")\n";
  if (!r.detail.empty()) text << r.detail << "\n";
  emit(g, rep, text.str(), out);
  if (!r.ok()) throw VerifyFailed(what + " failed verification");
}

void cmd_devices(const Globals &g, const std::string &preset_name, bool compare, std::ostream &out) {
  auto presets = load_presets();
  std::ostringstream text;
  json rep;
  if (compare) {
    CostConstants c = g.constants.empty() ? CostConstants{} : constants_from_string(g.constants);
    CostSummary f = factoring_cost(c);
    double vol = f.volume.to_double();
    json rows = json::array();
    text << "factoring: active volume " << fmt(vol) << " blocks, reaction depth " << fmt(f.reaction_depth.to_double())
         << "\n";
    auto row = [&](const std::string &arch, const std::string &device, double seconds, const std::string &note) {
      rows.push_back({{"architecture", arch}, {"device", device}, {"wall_time_s", seconds},
                      {"wall_time", human_duration(seconds)}, {"note", note}});
      text << std::left << std::setw(10) << arch << std::setw(50) << device << std::setw(12) << human_duration(seconds)
           << note << "\n";
    };
    row("baseline", "matter, d=28, 1 us code cycle", baseline_runtime_matter(kFactoringTGates, 28, 1e-6), "");
    row("baseline", "matter, d=28, 1 ms code cycle", baseline_runtime_matter(kFactoringTGates, 28, 1e-3), "");
    for (auto [m, lambda] : {std::pair{9700, 1e3}, {970, 1e4}, {97, 1e5}, {10, 1e6}}) {
      PhotonicConfig pc;
      pc.rsg_count = m;
      pc.lambda = lambda;
      pc.distance = 28;
      row("baseline", std::to_string(m) + " RSGs, lambda=" + fmt(lambda),
          baseline_runtime_photonic(kFactoringQubits, kFactoringTGates, pc), "");
    }
    for (const char *name : {"av_matter_1us", "av_matter_1ms", "av_photonic_9700", "av_photonic_970",
                             "av_photonic_97", "av_photonic_10"}) {
      const DevicePreset &p = find_preset(presets, name);
      RuntimeEstimate rt = av_runtime(f.volume, f.reaction_depth, preset_metrics(p));
      std::string note = rt.limiting == "reaction" ? "reaction-limited: " + human_duration(rt.wall_time) +
                                                         " at reaction depth " + fmt(f.reaction_depth.to_double())
                                                   : "";
      row("active", p.name + " (" + p.note + ")", rt.volume_time, note);
    }
    rep = {{"active_volume", vol}, {"rows", rows}};
  } else {
    json arr = json::array();
    for (const auto &p : presets) {
      if (!preset_name.empty() && p.name != preset_name) continue;
      DeviceMetrics m = preset_metrics(p);
      arr.push_back({{"name", p.name}, {"kind", p.kind}, {"memory_qubits", m.memory_qubits},
                     {"speed_blocks_per_s", m.speed_blocks_per_sec}, {"per_block_error", m.per_block_error},
                     {"reaction_time_s", m.reaction_time}, {"note", p.note}});
      text << std::left << std::setw(18) << p.name << "memory " << std::setw(8) << fmt(m.memory_qubits, 6) << " speed "
           << std::setw(10) << fmt(m.speed_blocks_per_sec) << " blocks/s  p_block " << std::setw(8)
           << fmt(m.per_block_error, 3) << " reaction " << fmt(m.reaction_time * 1e6) << " us  " << p.note << "\n";
    }
    if (arr.empty()) throw std::invalid_argument("unknown device preset: " + preset_name);
    rep = {{"devices", arr}};
  }
  emit(g, rep, text.str(), out);
}

}  // namespace

std::string human_duration(double seconds) {
  struct Unit {
    double size;
    const char *name;
  };
  static const Unit units[] = {{365.25 * 86400, "years"}, {86400, "days"}, {3600, "h"}, {60, "min"}, {1, "s"}};
  for (const auto &u : units) {
    if (seconds >= u.size) return fmt(seconds / u.size, 3) + " " + u.name;
  }
  return fmt(seconds, 3) + " s";
}

CostSummary factoring_cost(const CostConstants &c) {
  CostSummary step = sequence("lookup_addition", {gidney_adder(2048, c), qrom_cost(1024, 2048, 1, c)});
  return repeat(step, 500000);
}

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Active-volume resource estimation and scheduling", "activol"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--constants", g.constants, "Cost constants, e.g. c_t=25,c_ccz=35,rotation=variant3");
  app.add_option("--seed", g.seed, "Random seed");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--out", g.out_path, "Write the report to a file");

  std::string program, machine, preset, network, builder, csv;
  bool trace = false, explicit_distill = false, compare = false;
  int nq = 2048, sep = 3, trials = 100, range = 12;

  auto *est = app.add_subcommand("estimate", "Active volume, reaction depth and runtime of a program");
  est->add_option("program", program, "Program JSON")->required();
  auto *est_machine = est->add_option("--machine", machine, "Machine JSON");
  est->add_option("--preset", preset, "Device preset name")->excludes(est_machine);

  auto *sch = app.add_subcommand("schedule", "Pack a program into logical cycles");
  sch->add_option("program", program, "Program JSON")->required();
  sch->add_option("--machine", machine, "Machine JSON")->required();
  sch->add_flag("--trace", trace, "Per-cycle trace");
  sch->add_flag("--explicit-distillation", explicit_distill, "Schedule distillation blocks explicitly");

  auto *qs = app.add_subcommand("quickswap", "Greedy quickswap experiment");
  qs->add_option("--nq", nq, "Memory size")->check(CLI::PositiveNumber);
  qs->add_option("--sep", sep, "Target separation")->check(CLI::PositiveNumber);
  qs->add_option("--trials", trials, "Trials")->check(CLI::PositiveNumber);
  qs->add_option("--csv", csv, "Write CSV statistics");

  auto *ver = app.add_subcommand("verify", "Check a block network");
  auto *ver_net = ver->add_option("--network", network, "Network JSON");
  ver->add_option("--builder", builder, "Built-in network name")->excludes(ver_net);
  ver->add_option("--range", range, "Connection range r");

  auto *dev = app.add_subcommand("devices", "Device presets and the factoring comparison");
  dev->add_option("--preset", preset, "Show one preset");
  dev->add_flag("--compare", compare, "Baseline vs active-volume runtimes for factoring");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    return exit_usage;
  }

  try {
    if (*est) {
      cmd_estimate(g, program, machine, preset, out);
    } else if (*sch) {
      cmd_schedule(g, program, machine, trace, explicit_distill, out);
    } else if (*qs) {
      cmd_quickswap(g, nq, sep, trials, csv, out);
    } else if (*ver) {
      if (network.empty() && builder.empty()) {
        err << "verify needs --network or --builder\n";
        return exit_usage;
      }
      cmd_verify(g, network, builder, range, out);
    } else if (*dev) {
      cmd_devices(g, preset, compare, out);
    }
  } catch (const UnknownOpError &e) {
    err << "error: " << e.what() << "\n";
    return exit_unknown_op;
  } catch (const InfeasibleMemoryError &e) {
    err << "error: " << e.what() << "\n";
    return exit_infeasible;
  } catch (const IoError &e) {
    err << "error: " << e.what() << "\n";
    return exit_io;
  } catch (const VerifyFailed &e) {
    err << "error: " << e.what() << "\n";
    return exit_verify_failed;
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << "\n";
    return exit_invalid_params;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return exit_invalid_params;
  }
  return exit_ok;
}

}  // namespace activol
