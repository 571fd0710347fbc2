#include "activol/semantics.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>

namespace activol {

namespace {

constexpr int kMaxIntermediateLegs = 24;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

struct Tensor {
  std::vector<int> legs;  // legs[0] is the most significant index bit
  std::vector<cplx> data;
};

size_t bit_of(size_t index, size_t rank, size_t pos) { return (index >> (rank - 1 - pos)) & 1u; }

Tensor spider_tensor(BlockType type, size_t k) {
  Tensor t;
  t.data.assign(size_t{1} << k, cplx{0.0, 0.0});
  if (type == BlockType::Z) {
    t.data.front() += 1.0;
    t.data.back() += 1.0;
  } else {
    double amp = std::pow(kInvSqrt2, static_cast<double>(k));
    for (size_t i = 0; i < t.data.size(); ++i) {
      t.data[i] = (std::popcount(i) % 2 == 0) ? 2.0 * amp : 0.0;
    }
  }
  return t;
}

void apply_h(Tensor &t, size_t pos) {
  size_t rank = t.legs.size();
  size_t mask = size_t{1} << (rank - 1 - pos);
  for (size_t i = 0; i < t.data.size(); ++i) {
    if (i & mask) continue;
    cplx a = t.data[i], b = t.data[i | mask];
    t.data[i] = (a + b) * kInvSqrt2;
    t.data[i | mask] = (a - b) * kInvSqrt2;
  }
}

Tensor contract_pair(const Tensor &a, const Tensor &b) {
  std::vector<size_t> a_shared, a_free, b_shared, b_free;
  for (size_t i = 0; i < a.legs.size(); ++i) {
    auto it = std::find(b.legs.begin(), b.legs.end(), a.legs[i]);
    if (it == b.legs.end()) {
      a_free.push_back(i);
    } else {
      a_shared.push_back(i);
      b_shared.push_back(static_cast<size_t>(it - b.legs.begin()));
    }
  }
  for (size_t j = 0; j < b.legs.size(); ++j) {
    if (std::find(b_shared.begin(), b_shared.end(), j) == b_shared.end()) b_free.push_back(j);
  }
  Tensor out;
  for (auto i : a_free) out.legs.push_back(a.legs[i]);
  for (auto j : b_free) out.legs.push_back(b.legs[j]);
  if (out.legs.size() > kMaxIntermediateLegs) throw SizeCapError("intermediate tensor exceeds the contraction cap");
  out.data.assign(size_t{1} << out.legs.size(), cplx{0.0, 0.0});

  auto split = [](size_t idx, size_t rank, const std::vector<size_t> &shared, const std::vector<size_t> &free) {
    size_t s = 0, f = 0;
    for (auto p : shared) s = (s << 1) | bit_of(idx, rank, p);
    for (auto p : free) f = (f << 1) | bit_of(idx, rank, p);
    return std::make_pair(s, f);
  };

  std::vector<std::vector<std::pair<size_t, cplx>>> groups(size_t{1} << b_shared.size());
  for (size_t ib = 0; ib < b.data.size(); ++ib) {
    if (b.data[ib] == cplx{0.0, 0.0}) continue;
    auto [s, f] = split(ib, b.legs.size(), b_shared, b_free);
    groups[s].push_back({f, b.data[ib]});
  }
  size_t fb_bits = b_free.size();
  for (size_t ia = 0; ia < a.data.size(); ++ia) {
    if (a.data[ia] == cplx{0.0, 0.0}) continue;
    auto [s, f] = split(ia, a.legs.size(), a_shared, a_free);
    for (const auto &[fb, v] : groups[s]) out.data[(f << fb_bits) | fb] += a.data[ia] * v;
  }
  return out;
}

size_t shared_count(const Tensor &a, const Tensor &b) {
  size_t n = 0;
  for (int l : a.legs) n += static_cast<size_t>(std::count(b.legs.begin(), b.legs.end(), l));
  return n;
}

struct TensorNet {
  std::vector<Tensor> tensors;
  int next_leg = 0;
};

Tensor contract_all(std::vector<Tensor> ts) {
  if (ts.empty()) return Tensor{{}, {cplx{1.0, 0.0}}};
  while (ts.size() > 1) {
    size_t bi = 0, bj = 1;
    long best = -1;
    bool best_shares = false;
    for (size_t i = 0; i < ts.size(); ++i) {
      for (size_t j = i + 1; j < ts.size(); ++j) {
        size_t sh = shared_count(ts[i], ts[j]);
        long rank = static_cast<long>(ts[i].legs.size() + ts[j].legs.size() - 2 * sh);
        bool shares = sh > 0;
        // prefer pairs that share legs, then the smallest resulting rank
        if (best < 0 || (shares && !best_shares) || (shares == best_shares && rank < best)) {
          best = rank;
          best_shares = shares;
          bi = i;
          bj = j;
        }
      }
    }
    Tensor merged = contract_pair(ts[bi], ts[bj]);
    ts.erase(ts.begin() + static_cast<long>(bj));
    ts[bi] = std::move(merged);
  }
  return ts.front();
}

// Reorders a tensor whose legs are a permutation of `order` into a map.
LinearMap to_map(const Tensor &t, const std::vector<int> &out_legs, const std::vector<int> &in_legs) {
  std::vector<int> order = out_legs;
  order.insert(order.end(), in_legs.begin(), in_legs.end());
  if (order.size() != t.legs.size()) throw std::logic_error("open leg bookkeeping mismatch");
  std::vector<size_t> pos(order.size());
  for (size_t k = 0; k < order.size(); ++k) {
    auto it = std::find(t.legs.begin(), t.legs.end(), order[k]);
    if (it == t.legs.end()) throw std::logic_error("open leg lost during contraction");
    pos[k] = static_cast<size_t>(it - t.legs.begin());
  }
  LinearMap m(static_cast<int>(in_legs.size()), static_cast<int>(out_legs.size()));
  size_t rank = order.size();
  for (size_t idx = 0; idx < m.data.size(); ++idx) {
    size_t src = 0;
    for (size_t k = 0; k < rank; ++k) {
      if (bit_of(idx, rank, k)) src |= size_t{1} << (rank - 1 - pos[k]);
    }
    m.data[idx] = t.data[src];
  }
  return m;
}

struct GraphLegs {
  TensorNet net;
  std::vector<int> in_legs, out_legs;
};

GraphLegs build_tensors(const ZXGraph &g) {
  std::vector<std::vector<int>> legs(g.spiders.size());
  std::vector<std::vector<bool>> had(g.spiders.size());
  GraphLegs out;
  int &next = out.net.next_leg;
  auto check = [&g](int s) {
    if (s < 0 || s >= static_cast<int>(g.spiders.size())) throw std::invalid_argument("edge references missing spider");
  };
  for (const auto &e : g.edges) {
    check(e.a);
    check(e.b);
    if (e.a == e.b) throw std::invalid_argument("self-loop edges are not supported");
    int l = next++;
    legs[e.a].push_back(l);
    had[e.a].push_back(e.hadamard);
    legs[e.b].push_back(l);
    had[e.b].push_back(false);
  }
  for (const auto &bnd : g.inputs) {
    check(bnd.spider);
    int l = next++;
    legs[bnd.spider].push_back(l);
    had[bnd.spider].push_back(bnd.hadamard);
    out.in_legs.push_back(l);
  }
  for (const auto &bnd : g.outputs) {
    check(bnd.spider);
    int l = next++;
    legs[bnd.spider].push_back(l);
    had[bnd.spider].push_back(bnd.hadamard);
    out.out_legs.push_back(l);
  }
  for (size_t s = 0; s < g.spiders.size(); ++s) {
    if (legs[s].size() > 16) throw SizeCapError("spider with more than 16 legs");
    Tensor t = spider_tensor(g.spiders[s], legs[s].size());
    t.legs = legs[s];
    for (size_t k = 0; k < had[s].size(); ++k) {
      if (had[s][k]) apply_h(t, k);
    }
    out.net.tensors.push_back(std::move(t));
  }
  return out;
}

LinearMap finish(const GraphLegs &gl, std::vector<Tensor> extra) {
  int open = static_cast<int>(gl.in_legs.size() + gl.out_legs.size());
  if (open > kMaxOpenLegs) {
    throw SizeCapError(std::to_string(open) + " open legs exceed the cap of " + std::to_string(kMaxOpenLegs));
  }
  std::vector<Tensor> ts = gl.net.tensors;
  for (auto &t : extra) ts.push_back(std::move(t));
  Tensor t = contract_all(std::move(ts));
  LinearMap m = to_map(t, gl.out_legs, gl.in_legs);
  if (m.max_abs() < 1e-12) throw ZeroMapError("network map vanishes (inconsistent postselection)");
  return m;
}

}  // namespace

LinearMap::LinearMap(int n_in_, int n_out_) : n_in(n_in_), n_out(n_out_) {
  data.assign(rows() * cols(), cplx{0.0, 0.0});
}

double LinearMap::max_abs() const {
  double m = 0.0;
  for (const auto &v : data) m = std::max(m, std::abs(v));
  return m;
}

LinearMap LinearMap::identity(int n) {
  LinearMap m(n, n);
  for (size_t i = 0; i < m.rows(); ++i) m.at(i, i) = 1.0;
  return m;
}

LinearMap LinearMap::from_rows(int n_in, int n_out, const std::vector<cplx> &values) {
  LinearMap m(n_in, n_out);
  if (values.size() != m.data.size()) throw std::invalid_argument("matrix size mismatch");
  m.data = values;
  return m;
}

LinearMap matmul(const LinearMap &after, const LinearMap &before) {
  if (after.n_in != before.n_out) throw std::invalid_argument("matmul dimension mismatch");
  LinearMap m(before.n_in, after.n_out);
  for (size_t r = 0; r < after.rows(); ++r) {
    for (size_t k = 0; k < after.cols(); ++k) {
      cplx a = after.at(r, k);
      if (a == cplx{0.0, 0.0}) continue;
      for (size_t c = 0; c < before.cols(); ++c) m.at(r, c) += a * before.at(k, c);
    }
  }
  return m;
}

LinearMap kron(const LinearMap &a, const LinearMap &b) {
  LinearMap m(a.n_in + b.n_in, a.n_out + b.n_out);
  for (size_t ra = 0; ra < a.rows(); ++ra)
    for (size_t ca = 0; ca < a.cols(); ++ca)
      for (size_t rb = 0; rb < b.rows(); ++rb)
        for (size_t cb = 0; cb < b.cols(); ++cb)
          m.at(ra * b.rows() + rb, ca * b.cols() + cb) = a.at(ra, ca) * b.at(rb, cb);
  return m;
}

LinearMap gate_h() {
  double s = kInvSqrt2;
  return LinearMap::from_rows(1, 1, {s, s, s, -s});
}
LinearMap gate_x() { return LinearMap::from_rows(1, 1, {0.0, 1.0, 1.0, 0.0}); }
LinearMap gate_z() { return LinearMap::from_rows(1, 1, {1.0, 0.0, 0.0, -1.0}); }
LinearMap gate_s() { return LinearMap::from_rows(1, 1, {1.0, 0.0, 0.0, cplx{0.0, 1.0}}); }
LinearMap gate_t() { return LinearMap::from_rows(1, 1, {1.0, 0.0, 0.0, std::polar(1.0, M_PI / 4)}); }

LinearMap gate_cnot() {
  LinearMap m(2, 2);
  m.at(0, 0) = m.at(1, 1) = m.at(2, 3) = m.at(3, 2) = 1.0;
  return m;
}

LinearMap gate_cz() {
  LinearMap m = LinearMap::identity(2);
  m.at(3, 3) = -1.0;
  return m;
}

LinearMap gate_ccz() {
  LinearMap m = LinearMap::identity(3);
  m.at(7, 7) = -1.0;
  return m;
}

LinearMap gate_toffoli() {
  LinearMap m = LinearMap::identity(3);
  m.at(6, 6) = m.at(7, 7) = 0.0;
  m.at(6, 7) = m.at(7, 6) = 1.0;
  return m;
}

LinearMap spider_map(BlockType type, int n_in, int n_out, const std::vector<bool> &hadamard_mask) {
  int k = n_in + n_out;
  if (n_in < 0 || n_out < 0 || k < 1 || k > 4) throw SizeCapError("spider_map supports 1 to 4 legs");
  if (!hadamard_mask.empty() && static_cast<int>(hadamard_mask.size()) != k) {
    throw std::invalid_argument("hadamard mask length must equal the leg count");
  }
  ZXGraph g;
  g.spiders = {type};
  for (int i = 0; i < n_in; ++i) g.inputs.push_back({0, !hadamard_mask.empty() && hadamard_mask[i]});
  for (int i = 0; i < n_out; ++i) g.outputs.push_back({0, !hadamard_mask.empty() && hadamard_mask[n_in + i]});
  return contract_graph(g);
}

LinearMap contract_graph(const ZXGraph &g) { return finish(build_tensors(g), {}); }

namespace {

struct LabelledGraph {
  ZXGraph graph;
  std::vector<std::string> in_labels, out_labels;
};

LabelledGraph labelled_graph(const BlockNetwork &net) {
  LabelledGraph lg;
  std::map<int, int> index;
  for (const auto &b : net.blocks) {
    index[b.id] = static_cast<int>(lg.graph.spiders.size());
    lg.graph.spiders.push_back(b.type);
  }
  std::map<std::string, std::pair<int, bool>> bridge_in, bridge_out;
  for (const auto &b : net.blocks) {
    int s = index.at(b.id);
    for (size_t k = 0; k < b.ports.size(); ++k) {
      const Port &p = b.ports[k];
      switch (p.term.kind) {
        case Terminal::Kind::connected: {
          auto it = index.find(p.term.block);
          if (it == index.end()) throw std::invalid_argument("connection to missing block");
          const LogicalBlock *q = net.find(p.term.block);
          if (p.term.slot < 0 || p.term.slot >= static_cast<int>(q->ports.size())) {
            throw std::invalid_argument("connection to missing port slot");
          }
          if (std::make_pair(b.id, static_cast<int>(k)) < std::make_pair(q->id, p.term.slot)) {
            bool h = p.hadamard != q->ports[p.term.slot].hadamard;
            lg.graph.edges.push_back({s, it->second, h});
          }
          break;
        }
        case Terminal::Kind::input:
          if (is_bridge_label(p.term.label)) {
            bridge_in[p.term.label] = {s, p.hadamard};
          } else {
            lg.graph.inputs.push_back({s, p.hadamard});
            lg.in_labels.push_back(p.term.label);
          }
          break;
        case Terminal::Kind::output:
          if (is_bridge_label(p.term.label)) {
            bridge_out[p.term.label] = {s, p.hadamard};
          } else {
            lg.graph.outputs.push_back({s, p.hadamard});
            lg.out_labels.push_back(p.term.label);
          }
          break;
      }
    }
  }
  for (const auto &[label, src] : bridge_out) {
    auto it = bridge_in.find(label);
    if (it == bridge_in.end()) throw std::invalid_argument("bridge " + label + " has no consuming input");
    lg.graph.edges.push_back({src.first, it->second.first, src.second != it->second.second});
  }
  if (bridge_in.size() != bridge_out.size()) throw std::invalid_argument("bridge input without producing output");
  return lg;
}

size_t find_label(const std::vector<std::string> &labels, const std::string &l) {
  auto it = std::find(labels.begin(), labels.end(), l);
  if (it == labels.end()) throw std::invalid_argument("unknown qubit label '" + l + "'");
  if (std::find(it + 1, labels.end(), l) != labels.end()) throw std::invalid_argument("ambiguous qubit label '" + l + "'");
  return static_cast<size_t>(it - labels.begin());
}

}  // namespace

ZXGraph network_graph(const BlockNetwork &net, const ContractOptions &opt) {
  LabelledGraph lg = labelled_graph(net);
  ZXGraph g = lg.graph;
  if (!opt.inputs.empty()) {
    g.inputs.clear();
    for (const auto &l : opt.inputs) g.inputs.push_back(lg.graph.inputs[find_label(lg.in_labels, l)]);
  }
  if (!opt.outputs.empty()) {
    g.outputs.clear();
    for (const auto &l : opt.outputs) g.outputs.push_back(lg.graph.outputs[find_label(lg.out_labels, l)]);
  }
  return g;
}

LinearMap contract_network(const BlockNetwork &net, const ContractOptions &opt) {
  LabelledGraph lg = labelled_graph(net);
  GraphLegs gl = build_tensors(lg.graph);
  std::vector<int> all_in = gl.in_legs, all_out = gl.out_legs;

  std::vector<Tensor> plugs;
  std::vector<bool> in_used(all_in.size(), false), out_used(all_out.size(), false);
  auto plug = [&](const Plug &p, const std::vector<std::string> &labels, const std::vector<int> &legs,
                  std::vector<bool> &used) {
    Tensor t;
    for (const auto &l : p.labels) {
      size_t k = find_label(labels, l);
      used[k] = true;
      t.legs.push_back(legs[k]);
    }
    if (p.vec.size() != (size_t{1} << t.legs.size())) throw std::invalid_argument("plug vector has wrong length");
    t.data = p.vec;
    plugs.push_back(std::move(t));
  };
  for (const auto &p : opt.states) plug(p, lg.in_labels, all_in, in_used);
  for (const auto &p : opt.effects) plug(p, lg.out_labels, all_out, out_used);

  auto order = [](const std::vector<std::string> &want, const std::vector<std::string> &labels,
                  const std::vector<int> &legs, const std::vector<bool> &used) {
    std::vector<int> out;
    if (want.empty()) {
      for (size_t k = 0; k < legs.size(); ++k)
        if (!used[k]) out.push_back(legs[k]);
    } else {
      for (const auto &l : want) {
        size_t k = find_label(labels, l);
        if (used[k]) throw std::invalid_argument("label '" + l + "' is both plugged and open");
        out.push_back(legs[k]);
      }
      size_t open = static_cast<size_t>(std::count(used.begin(), used.end(), false));
      if (out.size() != open) throw std::invalid_argument("explicit leg order must list every open leg");
    }
    return out;
  };
  gl.in_legs = order(opt.inputs, lg.in_labels, all_in, in_used);
  gl.out_legs = order(opt.outputs, lg.out_labels, all_out, out_used);
  return finish(gl, std::move(plugs));
}

bool equal_up_to_scalar(const LinearMap &a, const LinearMap &b, double tol) {
  if (a.n_in != b.n_in || a.n_out != b.n_out) return false;
  size_t k = 0;
  double best = -1.0;
  for (size_t i = 0; i < b.data.size(); ++i) {
    if (std::abs(b.data[i]) > best) {
      best = std::abs(b.data[i]);
      k = i;
    }
  }
  double sa = a.max_abs();
  if (best <= 0.0 || sa <= 0.0) return false;
  cplx c = a.data[k] / b.data[k];
  if (std::abs(c) * best < tol * sa) return false;
  for (size_t i = 0; i < a.data.size(); ++i) {
    if (std::abs(a.data[i] - c * b.data[i]) > tol * sa) return false;
  }
  return true;
}

namespace {

// Applies a Pauli string to every row (left multiply) or column (right).
LinearMap apply_pauli(const LinearMap &m, const PauliOp &p, bool on_rows) {
  int n = on_rows ? m.n_out : m.n_in;
  if (static_cast<int>(p.size()) != n) throw std::invalid_argument("Pauli length does not match map");
  size_t xmask = 0;
  for (int q = 0; q < n; ++q) {
    char c = p.ops[q];
    if (c == 'X' || c == 'Y') xmask |= size_t{1} << (n - 1 - q);
  }
  // P|b> = phase(b) |b ^ xmask>
  auto phase = [&](size_t b) {
    cplx ph = static_cast<double>(p.sign);
    for (int q = 0; q < n; ++q) {
      size_t bit = (b >> (n - 1 - q)) & 1u;
      char c = p.ops[q];
      if (c == 'Z' && bit) ph = -ph;
      if (c == 'Y') ph *= bit ? cplx{0.0, -1.0} : cplx{0.0, 1.0};
    }
    return ph;
  };
  LinearMap out(m.n_in, m.n_out);
  if (on_rows) {
    for (size_t r = 0; r < m.rows(); ++r) {
      cplx ph = phase(r);
      for (size_t c = 0; c < m.cols(); ++c) out.at(r ^ xmask, c) = ph * m.at(r, c);
    }
  } else {
    for (size_t c = 0; c < m.cols(); ++c) {
      cplx ph = phase(c);
      for (size_t r = 0; r < m.rows(); ++r) out.at(r, c) = m.at(r, c ^ xmask) * ph;
    }
  }
  return out;
}

}  // namespace

LinearMap pauli_matrix(const PauliOp &p) {
  return apply_pauli(LinearMap::identity(static_cast<int>(p.size())), p, true);
}

bool stabilizes(const LinearMap &m, const PauliOp &p_in, const PauliOp &p_out, double tol) {
  LinearMap t = apply_pauli(apply_pauli(m, p_in, false), p_out, true);
  double scale = std::max(m.max_abs(), 1e-300);
  for (size_t i = 0; i < m.data.size(); ++i) {
    if (std::abs(t.data[i] - m.data[i]) > tol * scale) return false;
  }
  return true;
}

namespace {

class WireState {
 public:
  explicit WireState(const std::vector<std::string> &inputs) : wires_(inputs), n_in_(static_cast<int>(inputs.size())) {
    check();
    m_ = LinearMap::identity(n_in_);
  }

  void apply(const LinearMap &g, const std::vector<std::string> &qs) {
    std::vector<size_t> shifts;
    for (const auto &q : qs) shifts.push_back(nw() - 1 - index(q));
    size_t k = qs.size();
    if (g.n_in != static_cast<int>(k) || g.n_out != static_cast<int>(k)) throw std::invalid_argument("gate arity");
    size_t mask = 0;
    for (auto s : shifts) mask |= size_t{1} << s;
    std::vector<cplx> buf(size_t{1} << k), res(size_t{1} << k);
    for (size_t c = 0; c < m_.cols(); ++c) {
      for (size_t base = 0; base < m_.rows(); ++base) {
        if (base & mask) continue;
        for (size_t s = 0; s < buf.size(); ++s) buf[s] = m_.at(compose(base, s, shifts), c);
        for (size_t r = 0; r < res.size(); ++r) {
          res[r] = 0.0;
          for (size_t s = 0; s < buf.size(); ++s) res[r] += g.at(r, s) * buf[s];
        }
        for (size_t s = 0; s < res.size(); ++s) m_.at(compose(base, s, shifts), c) = res[s];
      }
    }
  }

  void open(const std::vector<std::string> &qs, const std::vector<cplx> &state) {
    size_t k = qs.size();
    if (state.size() != (size_t{1} << k)) throw std::invalid_argument("state vector has wrong length");
    for (const auto &q : qs) {
      if (std::find(wires_.begin(), wires_.end(), q) != wires_.end()) throw std::invalid_argument("wire exists: " + q);
      wires_.push_back(q);
    }
    check();
    LinearMap next(n_in_, static_cast<int>(wires_.size()));
    for (size_t r = 0; r < m_.rows(); ++r)
      for (size_t s = 0; s < state.size(); ++s)
        for (size_t c = 0; c < m_.cols(); ++c) next.at((r << k) | s, c) = m_.at(r, c) * state[s];
    m_ = std::move(next);
  }

  void close(const std::string &q, const std::vector<cplx> &effect) {
    size_t w = index(q);
    size_t shift = nw() - 1 - w;
    LinearMap next(n_in_, static_cast<int>(nw() - 1));
    for (size_t r = 0; r < next.rows(); ++r) {
      size_t hi = (r >> shift) << (shift + 1), lo = r & ((size_t{1} << shift) - 1);
      for (size_t bit = 0; bit < 2; ++bit) {
        size_t src = hi | (bit << shift) | lo;
        for (size_t c = 0; c < m_.cols(); ++c) next.at(r, c) += effect[bit] * m_.at(src, c);
      }
    }
    wires_.erase(wires_.begin() + static_cast<long>(w));
    m_ = std::move(next);
  }

  LinearMap result(const std::vector<std::string> &order) const {
    if (order.empty()) return m_;
    if (order.size() != wires_.size()) throw std::invalid_argument("output order must list every open wire");
    LinearMap out(n_in_, m_.n_out);
    size_t n = nw();
    std::vector<size_t> pos;
    for (const auto &q : order) pos.push_back(index(q));
    for (size_t r = 0; r < out.rows(); ++r) {
      size_t src = 0;
      for (size_t k = 0; k < n; ++k) {
        if ((r >> (n - 1 - k)) & 1u) src |= size_t{1} << (n - 1 - pos[k]);
      }
      for (size_t c = 0; c < out.cols(); ++c) out.at(r, c) = m_.at(src, c);
    }
    return out;
  }

 private:
  size_t nw() const { return wires_.size(); }
  size_t index(const std::string &q) const {
    auto it = std::find(wires_.begin(), wires_.end(), q);
    if (it == wires_.end()) throw std::invalid_argument("no open wire '" + q + "'");
    return static_cast<size_t>(it - wires_.begin());
  }
  static size_t compose(size_t base, size_t s, const std::vector<size_t> &shifts) {
    size_t k = shifts.size();
    for (size_t j = 0; j < k; ++j) {
      if ((s >> (k - 1 - j)) & 1u) base |= size_t{1} << shifts[j];
    }
    return base;
  }
  void check() const {
    if (static_cast<int>(wires_.size()) + n_in_ > kMaxOpenLegs) throw SizeCapError("circuit exceeds 12 qubit legs");
  }

  std::vector<std::string> wires_;
  int n_in_;
  LinearMap m_;
};

}  // namespace

LinearMap circuit_oracle(const Circuit &c) {
  WireState ws(c.inputs);
  const double s = kInvSqrt2;
  for (const auto &g : c.gates) {
    switch (g.kind) {
      case Gate::Kind::h: ws.apply(gate_h(), g.qubits); break;
      case Gate::Kind::s: ws.apply(gate_s(), g.qubits); break;
      case Gate::Kind::t: ws.apply(gate_t(), g.qubits); break;
      case Gate::Kind::x: ws.apply(gate_x(), g.qubits); break;
      case Gate::Kind::z: ws.apply(gate_z(), g.qubits); break;
      case Gate::Kind::cnot: ws.apply(gate_cnot(), g.qubits); break;
      case Gate::Kind::cz: ws.apply(gate_cz(), g.qubits); break;
      case Gate::Kind::ccz: ws.apply(gate_ccz(), g.qubits); break;
      case Gate::Kind::prep0:
        for (const auto &q : g.qubits) ws.open({q}, {1.0, 0.0});
        break;
      case Gate::Kind::prep_plus:
        for (const auto &q : g.qubits) ws.open({q}, {s, s});
        break;
      case Gate::Kind::state: ws.open(g.qubits, g.state); break;
      case Gate::Kind::post_z:
        for (const auto &q : g.qubits) ws.close(q, g.outcome == 0 ? std::vector<cplx>{1.0, 0.0} : std::vector<cplx>{0.0, 1.0});
        break;
      case Gate::Kind::post_x:
        for (const auto &q : g.qubits) ws.close(q, g.outcome == 0 ? std::vector<cplx>{s, s} : std::vector<cplx>{s, -s});
        break;
    }
  }
  return ws.result(c.outputs);
}

std::vector<cplx> ccz_state() {
  std::vector<cplx> v(8, 1.0 / std::sqrt(8.0));
  v[7] = -v[7];
  return v;
}

std::vector<cplx> plus_state(int n) {
  size_t dim = size_t{1} << n;
  return std::vector<cplx>(dim, 1.0 / std::sqrt(static_cast<double>(dim)));
}

}  // namespace activol
