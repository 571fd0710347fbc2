#include "activol/sched.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <optional>
#include <stdexcept>

#include "activol/device.hpp"

namespace activol {

void MachineConfig::validate() const {
  if (n_modules < 2 || n_modules % 2 != 0) throw std::invalid_argument("module count must be even and >= 2");
  if (range < 2 || range % 2 != 0) throw std::invalid_argument("range must be even and >= 2");
  if (distance < 2) throw std::invalid_argument("distance must be >= 2");
  if (code_cycle <= 0 || reaction_time < 0) throw std::invalid_argument("invalid timing parameters");
}

int MemoryState::occupied() const {
  return static_cast<int>(
      std::count_if(slots.begin(), slots.end(), [](const MemorySlot &s) { return s.kind != SlotKind::empty; }));
}

SlotMap MemoryState::occupant_map() const {
  SlotMap m(slots.size(), -1);
  for (size_t i = 0; i < slots.size(); ++i) {
    if (slots[i].kind == SlotKind::data) m[i] = slots[i].label;
  }
  return m;
}

int non_data_slots(const CostSummary &piece) {
  Rational staged = piece.demand.ccz * 5 + piece.demand.t * 2;
  return static_cast<int>(staged.ceil()) + piece.stale_outputs;
}

namespace {

struct Piece {
  std::string op;
  int64_t op_index = 0;
  int64_t quarters = 0;
  int non_data = 0;
  Rational t, ccz;
  std::vector<int> qubits;
};

void leaves(const CostSummary &c, std::vector<const CostSummary *> &out) {
  if (c.segments.empty()) {
    out.push_back(&c);
    return;
  }
  for (const auto &s : c.segments) leaves(s, out);
}

// Memory layout: memory slot k sits next to workspace modules k-1 and k, so
// a piece at workspace offset o spanning v modules reads its i-th of k inputs
// from slot o + floor(i v / k) and writes it back to o + floor((i+1) v / k) - 1.
class MemorySim {
 public:
  MemorySim(int slots, int data, int range, int distance)
      : mem_(std::max(slots, data)), reach_(std::max(1, range / 2)), distance_(distance) {
    int n = static_cast<int>(mem_.slots.size());
    for (int q = 0; q < data; ++q) {
      int slot = static_cast<int>(int64_t{q} * n / data);
      mem_.slots[slot] = {SlotKind::data, q};
    }
  }

  struct Entry {
    int64_t offset;  // workspace module
    int64_t span;
    const std::vector<int> *qubits;
  };

  // Moves qubits of the entering pieces into place. Returns quickswap layers;
  // adds to `bridges`.
  int enter(const std::vector<Entry> &entries, int &bridges) {
    const int n = static_cast<int>(mem_.slots.size());
    std::vector<char> slot_used(n, 0);
    std::map<int64_t, int> seen;
    std::vector<std::pair<int64_t, int>> targets;
    for (const auto &e : entries) {
      int k = static_cast<int>(e.qubits->size());
      for (int i = 0; i < k; ++i) {
        int64_t q = (*e.qubits)[i];
        if (seen.count(q)) {
          ++bridges;  // same qubit feeds two pieces in one cycle
          continue;
        }
        int want = static_cast<int>(std::min<int64_t>(e.offset + i * e.span / k, n - 1));
        int slot = nearest_free(slot_used, want);
        if (slot < 0) {
          ++bridges;
          continue;
        }
        slot_used[slot] = 1;
        seen[q] = slot;
        targets.emplace_back(q, slot);
      }
    }
    if (targets.empty()) return 0;
    SlotMap occ = mem_.occupant_map();
    QuickswapPlan plan = quickswap_plan(occ, targets);
    for (const auto &layer : plan.layers) {
      if (!is_legal_layer(layer, n)) throw std::logic_error("quickswap emitted an illegal layer");
      apply_layer(occ, layer);
      for (const auto &s : layer) std::swap(mem_.slots[s.a], mem_.slots[s.b]);
    }
    if (!plan.converged) {
      // Stragglers are teleported through a bridge pair instead.
      for (const auto &[q, t] : targets) {
        int at = static_cast<int>(std::find(occ.begin(), occ.end(), q) - occ.begin());
        if (at == t) continue;
        std::swap(occ[at], occ[t]);
        std::swap(mem_.slots[at], mem_.slots[t]);
        ++bridges;
      }
    }
    return static_cast<int>(plan.layers.size());
  }

  // Qubits of exiting pieces leave their entry slots and land next to the
  // piece's last workspace module.
  void exit(const std::vector<Entry> &entries, int &bridges) {
    const int n = static_cast<int>(mem_.slots.size());
    std::vector<std::pair<int64_t, int>> landing;
    for (const auto &e : entries) {
      int k = static_cast<int>(e.qubits->size());
      for (int i = 0; i < k; ++i) {
        int64_t q = (*e.qubits)[i];
        for (auto &s : mem_.slots) {
          if (s.kind == SlotKind::data && s.label == q) s = {};
        }
        int want = static_cast<int>(std::clamp<int64_t>(e.offset + (i + 1) * e.span / k - 1, 0, n - 1));
        landing.emplace_back(q, want);
      }
    }
    for (const auto &[q, want] : landing) {
      bool placed = false;
      for (const auto &s : mem_.slots) placed = placed || (s.kind == SlotKind::data && s.label == q);
      if (placed) continue;  // bridged qubit that already landed
      int slot = nearest_empty(want);
      if (slot < 0) throw InfeasibleMemoryError("memory full while storing outputs");
      if (std::abs(slot - want) > reach_) ++bridges;  // out of range: stored through a bridge
      mem_.slots[slot] = {SlotKind::data, q};
    }
  }

  int stalls(int layers) const { return layers > distance_ ? (layers + distance_ - 1) / distance_ - 1 : 0; }

 private:
  int nearest_free(const std::vector<char> &used, int want) const {
    for (int d = 0; d <= reach_; ++d) {
      for (int s : {want - d, want + d}) {
        if (s >= 0 && s < static_cast<int>(used.size()) && !used[s]) return s;
      }
    }
    return -1;
  }

  int nearest_empty(int want) const {
    int n = static_cast<int>(mem_.slots.size());
    for (int d = 0; d < n; ++d) {
      for (int s : {want - d, want + d}) {
        if (s >= 0 && s < n && mem_.slots[s].kind == SlotKind::empty) return s;
      }
    }
    return -1;
  }

  MemoryState mem_;
  int reach_;
  int distance_;
};

class Packer {
 public:
  Packer(const Program &p, const MachineConfig &cfg, const ScheduleOptions &opt)
      : cfg_(cfg), opt_(opt), data_(p.qubits), full_(4 * int64_t{cfg.workspace()}) {
    if (opt.simulate_memory && p.qubits > 0) sim_.emplace(cfg.workspace(), p.qubits, cfg.range, cfg.distance);
    if (data_ >= cfg.n_modules) throw InfeasibleMemoryError("program needs more memory than the machine has modules");
  }

  void place(Piece piece) {
    if (opt_.explicit_distillation) restock(piece);
    if (piece.quarters == 0) return;
    int occ = occupancy_with(piece.non_data);
    if (cur_.load_quarters > 0 && cur_.load_quarters + piece.quarters > budget(occ)) close();
    occ = occupancy_with(piece.non_data);
    if (budget(occ) <= 0) throw InfeasibleMemoryError("memory pressure leaves no workspace");
    pieces_.push_back(std::move(piece));
    const Piece &p = pieces_.back();
    int64_t left = p.quarters;
    int64_t start_offset = cur_.load_quarters;
    bool first = true;
    while (left > 0) {
      if (!open_) open();
      occ = occupancy_with(p.non_data);
      int64_t room = budget(occ) - cur_.load_quarters;
      if (room <= 0) {
        close();
        continue;
      }
      int64_t take = std::min(room, left);
      if (first) {
        entering_.push_back({cur_.load_quarters / 4, std::max<int64_t>(1, (p.quarters + 3) / 4), &p.qubits});
        start_offset = cur_.load_quarters;
        first = false;
      }
      if (opt_.trace) cur_.placements.push_back({p.op, p.op_index, cur_.load_quarters, take});
      cur_.load_quarters += take;
      cycle_non_data_ += p.non_data;
      left -= take;
      if (left > 0) close();
    }
    exiting_.push_back({start_offset / 4, std::max<int64_t>(1, (p.quarters + 3) / 4), &p.qubits});
  }

  ScheduleReport finish(const Program &program) {
    if (open_) close();
    rep_.logical_cycles = rep_.work_cycles + rep_.stall_cycles;
    rep_.idle_workspace_quarters += rep_.stall_cycles * full_;
    if (rep_.work_cycles > 0)
      rep_.borrowed_fraction = static_cast<double>(rep_.borrowed_workspace_quarters) / (rep_.work_cycles * full_);
    rep_.reaction_depth = reaction_depth(program);
    double volume_time = rep_.logical_cycles * cfg_.distance * cfg_.code_cycle;
    rep_.wall_time = std::max(volume_time, rep_.reaction_depth.to_double() * cfg_.reaction_time);
    rep_.total_error =
        total_error(std::min(1.0, cfg_.error_model.p(cfg_.distance)), static_cast<double>(rep_.logical_cycles) * cfg_.n_modules);
    return std::move(rep_);
  }

 private:
  int stock_slots() const { return static_cast<int>((stock_ccz_ * 3 + stock_t_).ceil()); }

  int occupancy_with(int extra) const { return data_ + cycle_non_data_ + extra + stock_slots(); }

  int64_t budget(int occupancy) const {
    int borrowed = std::max(0, occupancy - cfg_.workspace());
    return full_ - 4 * int64_t{borrowed};
  }

  void open() {
    cur_ = CycleTrace{};
    cycle_non_data_ = 0;
    open_ = true;
  }

  void close() {
    if (!open_) {
      open();
      return;
    }
    int occ = occupancy_with(0);
    cur_.occupancy = occ;
    cur_.borrowed = std::max(0, occ - cfg_.workspace());
    cur_.budget_quarters = full_ - 4 * int64_t{cur_.borrowed};
    if (sim_) {
      cur_.quickswap_layers = sim_->enter(entering_, cur_.bridges);
      cur_.stalls = sim_->stalls(cur_.quickswap_layers);
      // Exit only for pieces that finished in this cycle; a spilled piece
      // stays in the list until its last portion closes.
      sim_->exit(exiting_, cur_.bridges);
    }
    entering_.clear();
    exiting_.clear();
    ++rep_.work_cycles;
    rep_.stall_cycles += cur_.stalls;
    rep_.blocks_executed_quarters += cur_.load_quarters;
    rep_.idle_workspace_quarters += cur_.budget_quarters - cur_.load_quarters;
    rep_.borrowed_workspace_quarters += 4 * int64_t{cur_.borrowed};
    rep_.bridge_qubits_created += cur_.bridges;
    rep_.quickswap_layers.push_back(cur_.quickswap_layers);
    rep_.loads_quarters.push_back(cur_.load_quarters);
    if (opt_.trace) rep_.trace.push_back(cur_);
    open();
  }

  void restock(Piece &consumer) {
    // Distilled states come from the two-stage CCZ factory; T states from
    // converting a CCZ into two T states.
    const ProtocolSpec &ccz = lookup_protocol("two_stage_ccz");
    const ProtocolSpec &conv = lookup_protocol("ccz_to_2t");
    while (stock_t_ < consumer.t) {
      place_factory(ccz, 0);
      place_factory(conv, 0);
      stock_t_ += 2;
    }
    while (stock_ccz_ < consumer.ccz + opt_.stockpile_low_water) {
      place_factory(ccz, 0);
      stock_ccz_ += 1;
    }
    stock_t_ -= consumer.t;
    stock_ccz_ -= consumer.ccz;
  }

  void place_factory(const ProtocolSpec &spec, int non_data) {
    Piece f;
    f.op = "distill:" + spec.name;
    f.op_index = -1;
    f.quarters = spec.volume.ceil_quarters();
    f.non_data = non_data;
    ++rep_.distillation_runs;
    bool saved = opt_.explicit_distillation;
    opt_.explicit_distillation = false;
    place(std::move(f));
    opt_.explicit_distillation = saved;
  }

  const MachineConfig &cfg_;
  ScheduleOptions opt_;
  int data_;
  int64_t full_;
  std::optional<MemorySim> sim_;
  ScheduleReport rep_;
  CycleTrace cur_;
  bool open_ = false;
  int cycle_non_data_ = 0;
  Rational stock_t_, stock_ccz_;
  std::deque<Piece> pieces_;  // stable addresses for the entry lists
  std::vector<MemorySim::Entry> entering_, exiting_;
};

}  // namespace

ScheduleReport pack_cycles(const Program &program, const MachineConfig &cfg, const ScheduleOptions &opt) {
  cfg.validate();
  Packer packer(program, cfg, opt);
  int64_t index = 0;
  int64_t pieces = 0;
  for_each_op(
      program,
      [&](const ProgramOp &op) {
        std::vector<const CostSummary *> parts;
        leaves(op.cost, parts);
        const int64_t s = static_cast<int64_t>(parts.size());
        const int64_t k = static_cast<int64_t>(op.qubits.size());
        for (int64_t j = 0; j < s; ++j) {
          if (++pieces > opt.max_pieces) throw std::length_error("program too large to schedule piece by piece");
          const CostSummary &c = *parts[j];
          Piece p;
          p.op = op.op;
          p.op_index = index;
          p.quarters = (opt.explicit_distillation ? c.base_volume : c.volume).ceil_quarters();
          p.non_data = non_data_slots(c);
          p.t = c.demand.t;
          p.ccz = c.demand.ccz;
          if (k > 0) {
            int64_t lo = j * k / s;
            int64_t hi = std::min(k, std::max((j + 1) * k / s, lo + 1));
            p.qubits.assign(op.qubits.begin() + lo, op.qubits.begin() + hi);
          }
          packer.place(std::move(p));
        }
        ++index;
      },
      opt.max_pieces);
  return packer.finish(program);
}

MemoryPressure memory_pressure(const Program &program, const MachineConfig &cfg) {
  ScheduleOptions opt;
  opt.trace = true;
  opt.simulate_memory = false;
  ScheduleReport rep = pack_cycles(program, cfg, opt);
  MemoryPressure mp;
  int64_t non_data = 0;
  for (const auto &c : rep.trace) {
    mp.occupancy.push_back(c.occupancy);
    mp.borrowed.push_back(c.borrowed);
    non_data += c.occupancy - program.qubits;
  }
  if (rep.blocks_executed_quarters > 0)
    mp.non_data_fraction = static_cast<double>(non_data) * 4 / rep.blocks_executed_quarters;
  mp.speed_loss = rep.borrowed_fraction;
  return mp;
}

}  // namespace activol
