#include "activol/quickswap.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "activol/rational.hpp"

namespace activol {

bool is_quickswappable(int a, int b) {
  int64_t d = std::abs(int64_t{a} - b);
  return d > 0 && (d & (d - 1)) == 0;
}

bool is_legal_layer(const QuickswapLayer &layer, int n_slots) {
  std::vector<char> used(n_slots, 0);
  for (const auto &s : layer) {
    if (s.a < 0 || s.b < 0 || s.a >= n_slots || s.b >= n_slots) return false;
    if (!is_quickswappable(s.a, s.b)) return false;
    if (used[s.a] || used[s.b]) return false;
    used[s.a] = used[s.b] = 1;
  }
  return true;
}

void apply_layer(SlotMap &slots, const QuickswapLayer &layer) {
  for (const auto &s : layer) std::swap(slots[s.a], slots[s.b]);
}

int quickswap_layer_cap(int n_slots) { return 10 * std::max(1, ceil_log2(static_cast<uint64_t>(n_slots))); }

QuickswapPlan quickswap_plan(const SlotMap &slots, const std::vector<std::pair<int64_t, int>> &targets, int cap) {
  const int n = static_cast<int>(slots.size());
  if (cap < 0) cap = quickswap_layer_cap(n);

  int64_t max_id = -1;
  for (auto id : slots) max_id = std::max(max_id, id);
  std::vector<int> pos(max_id + 1, -1);
  for (int i = 0; i < n; ++i) {
    if (slots[i] >= 0) pos[slots[i]] = i;
  }
  std::vector<char> slot_taken(n, 0);
  std::vector<char> id_taken(max_id + 1, 0);
  for (const auto &[id, t] : targets) {
    if (id < 0 || id > max_id || pos[id] < 0) throw std::invalid_argument("quickswap target names a missing qubit");
    if (t < 0 || t >= n) throw std::invalid_argument("quickswap target slot out of range");
    if (slot_taken[t] || id_taken[id]) throw std::invalid_argument("quickswap targets must be distinct");
    slot_taken[t] = id_taken[id] = 1;
  }

  SlotMap mem = slots;
  std::vector<int> came_from(targets.size(), -1);  // slot left in the previous layer
  std::vector<char> eligible(n);
  QuickswapPlan plan;
  for (;;) {
    std::fill(eligible.begin(), eligible.end(), 1);
    bool done = true;
    for (const auto &[id, t] : targets) {
      if (pos[id] == t) {
        eligible[t] = 0;
      } else {
        done = false;
      }
    }
    if (done) return plan;
    if (static_cast<int>(plan.layers.size()) >= cap) {
      plan.converged = false;
      return plan;
    }
    QuickswapLayer layer;
    std::vector<int> moved_from(targets.size(), -1);
    for (size_t i = 0; i < targets.size(); ++i) {
      auto [id, t] = targets[i];
      int cur = pos[id];
      if (cur == t || !eligible[cur]) continue;
      int best = -1;
      int64_t best_dist = 0;
      for (int64_t step = 1; step < n; step <<= 1) {
        for (int64_t k : {cur - step, cur + step}) {
          if (k < 0 || k >= n || !eligible[k] || k == came_from[i]) continue;
          int64_t dist = std::abs(k - t);
          if (best < 0 || dist < best_dist || (dist == best_dist && k < best)) {
            best = static_cast<int>(k);
            best_dist = dist;
          }
        }
      }
      if (best < 0) continue;
      int64_t other = mem[best];
      std::swap(mem[cur], mem[best]);
      pos[id] = best;
      if (other >= 0) pos[other] = cur;
      eligible[cur] = eligible[best] = 0;
      layer.push_back({cur, best});
      moved_from[i] = cur;
    }
    came_from = moved_from;
    if (layer.empty()) {
      plan.converged = false;
      return plan;
    }
    plan.layers.push_back(std::move(layer));
  }
}

QuickswapStats quickswap_experiment(int n_q, int s, int trials, uint64_t seed) {
  if (n_q < 1 || s < 1 || trials < 1) throw std::invalid_argument("need n_q, s, trials >= 1");
  QuickswapStats st;
  st.n_q = n_q;
  st.s = s;
  st.trials = trials;
  st.seed = seed;
  std::mt19937_64 rng(seed);
  std::vector<int> counts;
  SlotMap mem(n_q);
  std::vector<int64_t> pick(n_q);
  for (int trial = 0; trial < trials; ++trial) {
    std::iota(mem.begin(), mem.end(), 0);
    std::shuffle(mem.begin(), mem.end(), rng);
    std::iota(pick.begin(), pick.end(), 0);
    std::shuffle(pick.begin(), pick.end(), rng);
    std::vector<std::pair<int64_t, int>> targets;
    for (int slot = 0, k = 0; slot < n_q; slot += s, ++k) targets.emplace_back(pick[k], slot);
    QuickswapPlan plan = quickswap_plan(mem, targets);
    if (!plan.converged) {
      ++st.failures;
      continue;
    }
    counts.push_back(static_cast<int>(plan.layers.size()));
  }
  if (!counts.empty()) {
    double sum = std::accumulate(counts.begin(), counts.end(), 0.0);
    st.mean = sum / counts.size();
    double var = 0;
    for (int c : counts) var += (c - st.mean) * (c - st.mean);
    st.std = counts.size() > 1 ? std::sqrt(var / (counts.size() - 1)) : 0.0;
    st.max = *std::max_element(counts.begin(), counts.end());
  }
  return st;
}

std::string quickswap_csv_header() { return "n_q,s,trials,mean,std,max,failures,seed"; }

std::string quickswap_csv_row(const QuickswapStats &st) {
  std::ostringstream os;
  os << st.n_q << ',' << st.s << ',' << st.trials << ',' << st.mean << ',' << st.std << ',' << st.max << ','
     << st.failures << ',' << st.seed;
  return os.str();
}

}  // namespace activol
