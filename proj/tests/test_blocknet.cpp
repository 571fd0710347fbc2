#include <gtest/gtest.h>

#include "activol/blocknet.hpp"
#include "activol/builders.hpp"
#include "activol/costs.hpp"
#include "activol/network_io.hpp"

using namespace activol;

namespace {

// Two Z/E blocks joined S-S, each carrying one qubit.
BlockNetwork zz_pair() {
  NetBuilder nb;
  int a = nb.block(BlockType::Z, Orientation::E);
  int b = nb.block(BlockType::Z, Orientation::E);
  nb.input(a, "q1");
  nb.output(a, "q1");
  nb.input(b, "q2");
  nb.output(b, "q2");
  nb.connect(a, b, Direction::S);
  return nb.build();
}

int64_t ceil15(int w) { return (3 * w + 1) / 2; }

}  // namespace

TEST(Commensurate, TruthTable) {
  // Same type and orientation, or different type and orientation, join
  // plainly; exactly one Hadamard flips that.
  const BlockType types[] = {BlockType::Z, BlockType::X};
  const Orientation orients[] = {Orientation::E, Orientation::N, Orientation::U};
  for (auto ta : types)
    for (auto oa : orients)
      for (auto tb : types)
        for (auto ob : orients) {
          bool plain = (ta == tb && oa == ob) || (ta != tb && oa != ob);
          EXPECT_EQ(commensurate(ta, oa, tb, ob, 0), plain);
          EXPECT_EQ(commensurate(ta, oa, tb, ob, 2), plain);
          EXPECT_EQ(commensurate(ta, oa, tb, ob, 1), !plain);
        }
}

TEST(Builders, BlockCountsMatchCostTable) {
  EXPECT_EQ(build_cnot().block_count(), 4u);
  EXPECT_EQ(build_hadamard().block_count(), 3u);
  EXPECT_EQ(build_zmeas_network(2).block_count(), 2u);
  EXPECT_EQ(build_xmeas_network(2).block_count(), 2u);
  EXPECT_EQ(build_reactive_cz().block_count(), 5u);
  EXPECT_EQ(build_toffoli_consumption().block_count(), 12u);
  for (int w = 3; w <= 9; ++w) {
    EXPECT_EQ(static_cast<int64_t>(build_zmeas_network(w).block_count()), ceil15(w)) << w;
    EXPECT_EQ(static_cast<int64_t>(build_xmeas_network(w).block_count()), ceil15(w)) << w;
  }
}

TEST(Builders, AllValidateAtRange12) {
  std::vector<std::string> names = {"cnot", "hadamard", "toffoli", "reactive_cz"};
  for (int w = 2; w <= 10; ++w) {
    names.push_back("zmeas:" + std::to_string(w));
    names.push_back("xmeas:" + std::to_string(w));
  }
  for (const char *p : {"XZ", "XXZZ", "Y", "YY", "XYZ", "ZZZX", "YYY", "XXXXXZ", "ZYXZY"}) names.push_back(std::string("ppm:") + p);
  for (const auto &n : names) {
    ValidationReport r = validate_network(build_by_name(n), 12);
    EXPECT_TRUE(r.ok()) << n << ": " << r.summary();
  }
}

TEST(Builders, ZMeasurementVolumeMatchesCost) {
  for (int w = 3; w <= 12; ++w) {
    std::string z(w, 'Z');
    CostSummary c = ppm_cost(PauliOp::parse(z));
    EXPECT_EQ(network_volume(build_zmeas_network(w)), c.volume.quarters()) << w;
  }
}

TEST(Builders, MixedPpmVolumeMatchesCost) {
  for (const char *p : {"XZ", "XXZZ", "XYZ", "ZZZX", "XXXXXZ", "XZZZZ"}) {
    PauliOp op = PauliOp::parse(p);
    EXPECT_EQ(network_volume(build_ppm_network(op)), ppm_cost(op).volume.quarters()) << p;
  }
}

TEST(Builders, DeclaredTerminals) {
  BlockNetwork cnot = build_cnot();
  auto in = cnot.input_labels();
  std::sort(in.begin(), in.end());
  EXPECT_EQ(in, (std::vector<std::string>{"c", "t"}));
  BlockNetwork toff = build_toffoli_consumption();
  EXPECT_EQ(toff.input_labels().size(), 6u);
  EXPECT_EQ(toff.output_labels().size(), 9u);
}

TEST(Builders, UnknownNameThrows) {
  EXPECT_THROW(build_by_name("teleporter"), std::invalid_argument);
  EXPECT_THROW(build_by_name("zmeas:1"), std::invalid_argument);
}

TEST(Validate, RejectsEmptyAndOddRange) {
  EXPECT_THROW(validate_network(BlockNetwork{}), std::invalid_argument);
  EXPECT_THROW(validate_network(zz_pair(), 7), std::invalid_argument);
}

TEST(Validate, DanglingLateralPort) {
  BlockNetwork n = zz_pair();
  n.blocks[0].ports.push_back({Direction::W, false, Terminal::output("x"), 0});
  EXPECT_TRUE(validate_network(n).has(Rule::dangling_port));
}

TEST(Validate, PortOnOrientationAxis) {
  NetBuilder nb;
  int a = nb.block(BlockType::Z, Orientation::E);
  int b = nb.block(BlockType::Z, Orientation::E);
  nb.input(a, "q");
  nb.output(b, "q");
  nb.connect(a, b, Direction::E);
  EXPECT_TRUE(validate_network(nb.build()).has(Rule::port_on_axis));
}

TEST(Validate, HadamardOnlyOnEastWest) {
  BlockNetwork n = zz_pair();
  n.blocks[0].ports[2].hadamard = true;  // the S port
  n.blocks[1].ports[2].hadamard = true;
  EXPECT_TRUE(validate_network(n).has(Rule::hadamard_direction));
}

TEST(Validate, TerminalDirection) {
  BlockNetwork n = zz_pair();
  n.blocks[0].ports[0].term = Terminal::output("q1");  // output on a D port
  EXPECT_TRUE(validate_network(n).has(Rule::terminal_direction));
}

TEST(Validate, MemoryConvention) {
  BlockNetwork n = zz_pair();
  for (auto &b : n.blocks) b.orient = Orientation::N;  // Z/N with terminals
  for (auto &b : n.blocks) b.ports[2].dir = Direction::E;
  for (auto &b : n.blocks) b.ports[2].dir = Direction::W;
  ValidationReport r = validate_network(n);
  EXPECT_TRUE(r.has(Rule::memory_convention));
  for (auto &b : n.blocks) b.rotated_memory = true;
  EXPECT_FALSE(validate_network(n).has(Rule::memory_convention));
}

TEST(Validate, Commensurability) {
  BlockNetwork n = zz_pair();
  n.blocks[1].type = BlockType::X;
  n.blocks[1].orient = Orientation::N;  // X/N joined plainly to Z/E is fine
  EXPECT_FALSE(validate_network(n).has(Rule::commensurability));
  n.blocks[1].orient = Orientation::E;  // X/E vs Z/E needs a Hadamard
  EXPECT_TRUE(validate_network(n).has(Rule::commensurability));
}

TEST(Validate, AsymmetricAndUnknownPeers) {
  BlockNetwork n = zz_pair();
  n.blocks[1].ports[2].term = Terminal::connect(1, 0);
  EXPECT_TRUE(validate_network(n).has(Rule::asymmetric_connection));
  n = zz_pair();
  n.blocks[0].ports[2].term = Terminal::connect(99, 0);
  EXPECT_TRUE(validate_network(n).has(Rule::unknown_peer));
  n = zz_pair();
  n.blocks[0].ports[2].term = Terminal::connect(1, 2);
  EXPECT_TRUE(validate_network(n).has(Rule::self_connection));
}

TEST(Validate, DirectionMismatch) {
  BlockNetwork n = zz_pair();
  n.blocks[1].ports[2].dir = Direction::N;
  EXPECT_TRUE(validate_network(n).has(Rule::direction_mismatch));
}

TEST(Validate, PortCountDuplicatesAndDPorts) {
  BlockNetwork n = zz_pair();
  n.blocks[0].ports.resize(1);
  EXPECT_TRUE(validate_network(n).has(Rule::port_count));
  n = zz_pair();
  n.blocks[0].ports[1] = {Direction::D, false, Terminal::input("q9"), 0};
  ValidationReport r = validate_network(n);
  EXPECT_TRUE(r.has(Rule::multiple_d_ports));
  EXPECT_TRUE(r.has(Rule::duplicate_direction));
  n = zz_pair();
  n.blocks[1].id = 1;
  EXPECT_TRUE(validate_network(n).has(Rule::duplicate_id));
}

TEST(Validate, LowerSlotsNeedMultiport) {
  BlockNetwork n = zz_pair();
  n.blocks[0].ports[2].level = 1;
  EXPECT_TRUE(validate_network(n).has(Rule::slot_parity));
}

TEST(Validate, RangeAndMissingIndex) {
  BlockNetwork n = zz_pair();
  n.workspace_index[2] = 7;
  EXPECT_TRUE(validate_network(n, 12).has(Rule::range));
  EXPECT_FALSE(validate_network(n, 14).has(Rule::range));
  n.workspace_index.erase(2);
  EXPECT_TRUE(validate_network(n).has(Rule::missing_index));
  n.workspace_index.clear();  // unindexed networks skip the range check
  EXPECT_TRUE(validate_network(n).ok());
}

TEST(Validate, MaxSeparationOfBuildersWithinHalfRange) {
  for (const auto &name : {"toffoli", "zmeas:10", "xmeas:9", "ppm:XXXXXZZZZY", "cnot"}) {
    BlockNetwork n = build_by_name(name);
    EXPECT_TRUE(validate_network(n, 12).ok()) << name;
  }
}

TEST(NetworkVolume, HalfDistanceBlocksCountHalf) {
  BlockNetwork n = zz_pair();
  EXPECT_EQ(network_volume(n), 8);
  n.blocks[0].half_distance = true;
  EXPECT_EQ(network_volume(n), 6);
}

TEST(Relabel, PreservesStructure) {
  BlockNetwork n = build_cnot();
  std::map<int, int> m;
  for (const auto &b : n.blocks) m[b.id] = b.id + 100;
  BlockNetwork r = relabel(n, m);
  EXPECT_TRUE(validate_network(r).ok());
  EXPECT_EQ(r.workspace_index.at(101), n.workspace_index.at(1));
  m.erase(1);
  EXPECT_THROW(relabel(n, m), std::invalid_argument);
}

TEST(NetworkIo, RoundTripsEveryBuilder) {
  for (const auto &name : {"cnot", "hadamard", "toffoli", "reactive_cz", "zmeas:5", "xmeas:4", "ppm:XYZ"}) {
    BlockNetwork n = build_by_name(name);
    BlockNetwork back = network_from_string(network_to_string(n));
    EXPECT_EQ(back, n) << name;
  }
}

TEST(NetworkIo, RejectsMalformedTerms) {
  EXPECT_THROW(network_from_string(R"({"blocks":[{"id":1,"type":"Z","orient":"E",
      "ports":[{"dir":"D","h":false,"term":"bogus"}]}]})"),
               std::invalid_argument);
  EXPECT_THROW(network_from_string(R"({"blocks":[{"id":1,"type":"Q","orient":"E","ports":[]}]})"),
               std::invalid_argument);
}
