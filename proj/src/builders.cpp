#include "activol/builders.hpp"

#include <stdexcept>

namespace activol {

namespace {

constexpr auto Z = BlockType::Z;
constexpr auto X = BlockType::X;

// Chain links alternate so that consecutive joins use opposite faces.
Direction z_chain_link(int i) { return i % 2 == 0 ? Direction::E : Direction::W; }
Direction x_chain_link(int i) { return i % 2 == 0 ? Direction::N : Direction::S; }

struct Leg {
  std::string in, out;
};

// Z data blocks hang off X/U chain blocks on N and S; returns the last chain
// block. The chain's free end faces E when the chain length is odd, W when
// even.
int z_part(NetBuilder &nb, const std::vector<Leg> &legs, std::vector<std::vector<int>> &segments) {
  int k = static_cast<int>((legs.size() + 1) / 2);
  int prev = -1;
  for (int j = 0; j < k; ++j) {
    std::vector<int> seg;
    std::vector<int> data;
    for (size_t i = 2 * j; i < legs.size() && i < static_cast<size_t>(2 * j + 2); ++i) {
      int d = nb.block(Z, Orientation::E);
      nb.input(d, legs[i].in);
      nb.output(d, legs[i].out);
      data.push_back(d);
      seg.push_back(d);
    }
    int c = nb.block(X, Orientation::U);
    seg.push_back(c);
    nb.connect(data[0], c, Direction::N);
    if (data.size() > 1) nb.connect(data[1], c, Direction::S);
    if (prev >= 0) nb.connect(prev, c, z_chain_link(j - 1));
    prev = c;
    segments.push_back(seg);
  }
  return prev;
}

Direction z_part_free_end(size_t n_legs) {
  size_t k = (n_legs + 1) / 2;
  return k % 2 == 1 ? Direction::E : Direction::W;
}

Direction x_part_free_end(size_t n_legs) {
  size_t k = (n_legs + 1) / 2;
  return k % 2 == 1 ? Direction::N : Direction::S;
}

// X data blocks hang off Z/U chain blocks on E and W. Built from the far end
// so that the chain end attaching to `anchor` sits next to it.
void x_part(NetBuilder &nb, const std::vector<Leg> &legs, int anchor, Direction anchor_dir,
            std::vector<std::vector<int>> &segments) {
  int m = static_cast<int>((legs.size() + 1) / 2);
  int next = -1;
  for (int j = m - 1; j >= 0; --j) {
    int c = nb.block(Z, Orientation::U);
    std::vector<int> seg{c};
    if (j == m - 1) {
      if (anchor >= 0) nb.connect(anchor, c, anchor_dir);
    } else {
      nb.connect(next, c, x_chain_link(j));
    }
    for (size_t i = 2 * j; i < legs.size() && i < static_cast<size_t>(2 * j + 2); ++i) {
      int d = nb.block(X, Orientation::N);
      nb.input(d, legs[i].in);
      nb.output(d, legs[i].out);
      nb.connect(d, c, i % 2 == 0 ? Direction::E : Direction::W);
      seg.push_back(d);
    }
    next = c;
    segments.push_back(seg);
  }
}

std::vector<Leg> plain_legs(int w) {
  std::vector<Leg> legs;
  for (int i = 1; i <= w; ++i) legs.push_back({"q" + std::to_string(i), "q" + std::to_string(i)});
  return legs;
}

}  // namespace

BlockNetwork build_cnot() {
  NetBuilder nb;
  int ctrl = nb.block(Z, Orientation::E);
  nb.input(ctrl, "c");
  nb.output(ctrl, "c");
  int turn = nb.block(Z, Orientation::E);
  nb.connect(ctrl, turn, Direction::S);
  int up = nb.block(X, Orientation::N);
  nb.connect(turn, up, Direction::U);
  int targ = nb.block(X, Orientation::N);
  nb.input(targ, "t");
  nb.output(targ, "t");
  nb.connect(up, targ, Direction::W);
  return nb.build();
}

BlockNetwork build_hadamard() {
  NetBuilder nb;
  int in = nb.block(Z, Orientation::E);
  nb.input(in, "q");
  int mid = nb.block(X, Orientation::U);
  nb.connect(in, mid, Direction::S);
  int out = nb.block(X, Orientation::N);
  nb.output(out, "q");
  nb.connect(mid, out, Direction::E, true, false);
  return nb.build();
}

BlockNetwork build_zmeas_network(int w) {
  if (w < 2) throw std::invalid_argument("Z measurement network needs weight >= 2");
  NetBuilder nb;
  if (w == 2) {
    int a = nb.block(Z, Orientation::E);
    nb.input(a, "q1");
    nb.output(a, "q1");
    int b = nb.block(Z, Orientation::E);
    nb.input(b, "q2");
    nb.output(b, "q2");
    nb.connect(a, b, Direction::S);
    return nb.build();
  }
  std::vector<std::vector<int>> segs;
  z_part(nb, plain_legs(w), segs);
  nb.set_segments(segs);
  return nb.build();
}

BlockNetwork build_xmeas_network(int w) {
  if (w < 2) throw std::invalid_argument("X measurement network needs weight >= 2");
  NetBuilder nb;
  if (w == 2) {
    int a = nb.block(X, Orientation::N);
    nb.input(a, "q1");
    nb.output(a, "q1");
    int b = nb.block(X, Orientation::N);
    nb.input(b, "q2");
    nb.output(b, "q2");
    nb.connect(a, b, Direction::E);
    return nb.build();
  }
  std::vector<std::vector<int>> segs;
  x_part(nb, plain_legs(w), -1, Direction::N, segs);
  nb.set_segments(segs);
  return nb.build();
}

BlockNetwork build_ppm_network(const PauliOp &pauli) {
  if (pauli.is_identity()) throw std::invalid_argument("cannot measure the identity");
  size_t nx = pauli.count('X'), nz = pauli.count('Z'), ny = pauli.count('Y');
  if (ny == 0 && nx == 0) return build_zmeas_network(static_cast<int>(nz));
  if (ny == 0 && nz == 0) return build_xmeas_network(static_cast<int>(nx));

  std::vector<Leg> zlegs, xlegs;
  for (size_t i = 0; i < pauli.size(); ++i) {
    std::string q = "q" + std::to_string(i + 1);
    switch (pauli.ops[i]) {
      case 'Z':
        zlegs.push_back({q, q});
        break;
      case 'X':
        xlegs.push_back({q, q});
        break;
      case 'Y':
        zlegs.push_back({q, "~" + q});
        xlegs.push_back({"~" + q, q});
        break;
      default:
        break;
    }
  }
  if (ny % 2 == 1) {
    zlegs.push_back({"ycat", "~ycat"});
    xlegs.push_back({"~ycat", "ycat"});
  }

  NetBuilder nb;
  std::vector<std::vector<int>> segs;
  int zend = z_part(nb, zlegs, segs);
  int link = nb.block(Z, Orientation::U);
  nb.connect(zend, link, z_part_free_end(zlegs.size()), false, true);
  segs.push_back({link});
  x_part(nb, xlegs, link, x_part_free_end(xlegs.size()), segs);
  nb.set_segments(segs);
  return nb.build();
}

std::vector<std::string> toffoli_reactive_outputs() {
  // Pair a corrects CZ(c1,c2), pair b CNOT(c1,t), pair c CNOT(c2,t).
  return {"cz_b.1", "cz_a.1", "cz_c.1", "cz_a.2", "cz_b.2", "cz_c.2"};
}

BlockNetwork build_toffoli_consumption() {
  NetBuilder nb;
  int c1 = nb.block(Z, Orientation::E);
  nb.input(c1, "c1");
  nb.output(c1, "c1");
  int m1 = nb.block(Z, Orientation::E);
  nb.input(m1, "ccz1");
  nb.output(m1, "cz_b.1");
  nb.connect(c1, m1, Direction::S);
  int r1 = nb.block(Z, Orientation::E);
  nb.output(r1, "cz_a.1");
  nb.connect(c1, r1, Direction::N);

  int c2 = nb.block(Z, Orientation::E);
  nb.input(c2, "c2");
  nb.output(c2, "c2");
  int m2 = nb.block(Z, Orientation::E);
  nb.input(m2, "ccz2");
  nb.output(m2, "cz_c.1");
  nb.connect(c2, m2, Direction::S);
  int turn = nb.block(X, Orientation::U);
  nb.connect(c2, turn, Direction::N);
  int r2 = nb.block(X, Orientation::N);
  nb.output(r2, "cz_a.2");
  nb.connect(turn, r2, Direction::E, true, false);

  int t = nb.block(X, Orientation::N);
  nb.input(t, "t");
  nb.output(t, "t");
  int bend = nb.block(X, Orientation::U);
  nb.connect(t, bend, Direction::E, false, true);
  int m3 = nb.block(Z, Orientation::E);
  nb.input(m3, "ccz3");
  nb.connect(bend, m3, Direction::S);
  int r3 = nb.block(X, Orientation::N);
  nb.output(r3, "cz_b.2");
  nb.connect(t, r3, Direction::W);
  int r4 = nb.block(X, Orientation::N);
  nb.output(r4, "cz_c.2");
  nb.connect(r3, r4, Direction::E);
  return nb.build();
}

BlockNetwork build_reactive_cz() {
  NetBuilder nb;
  int x = nb.block(Z, Orientation::E);
  nb.input(x, "x");
  nb.output(x, "x");
  int rx = nb.block(Z, Orientation::E);
  nb.output(rx, "cz.1");
  nb.connect(x, rx, Direction::S);
  int y = nb.block(Z, Orientation::E);
  nb.input(y, "y");
  nb.output(y, "y");
  int turn = nb.block(X, Orientation::U);
  nb.connect(y, turn, Direction::S);
  int ry = nb.block(X, Orientation::N);
  nb.output(ry, "cz.2");
  nb.connect(turn, ry, Direction::E, true, false);
  return nb.build();
}

BlockNetwork build_by_name(const std::string &name) {
  if (name == "cnot") return build_cnot();
  if (name == "hadamard") return build_hadamard();
  if (name == "toffoli") return build_toffoli_consumption();
  if (name == "reactive_cz") return build_reactive_cz();
  auto colon = name.find(':');
  if (colon != std::string::npos) {
    std::string kind = name.substr(0, colon), arg = name.substr(colon + 1);
    if (kind == "zmeas") return build_zmeas_network(std::stoi(arg));
    if (kind == "xmeas") return build_xmeas_network(std::stoi(arg));
    if (kind == "ppm") return build_ppm_network(PauliOp::parse(arg));
  }
  throw std::invalid_argument("unknown builder '" + name + "'");
}

std::vector<std::string> builder_names() {
  return {"cnot", "hadamard", "toffoli", "reactive_cz", "zmeas:<w>", "xmeas:<w>", "ppm:<pauli>"};
}

}  // namespace activol
