#include <gtest/gtest.h>

#include "mimicnet/planar_instance.hpp"
#include "mimicnet/profile.hpp"
#include "support/error_matchers.hpp"

namespace mimicnet {
namespace {

std::size_t pow2(std::size_t e) { return std::size_t{1} << e; }

// Crossings in strip i: each 1-child edge e_{1a} meets the 0-child edges of
// the later parents, 2^i - 1 - dec(a) of them.
std::size_t strip_crossings(std::size_t i) { return pow2(i) * (pow2(i) - 1) / 2; }

std::size_t bits_value(const std::string& s) {
  std::size_t v = 0;
  for (char c : s) v = 2 * v + (c == '1');
  return v;
}

// Weight of the important cycle for signature s from the crossing pattern
// alone: k heavy edges plus c_j per crossing on the layer-j tree edge.
BigInt cycle_weight_formula(const PlanarInstance& inst, const std::string& s) {
  const std::size_t k = inst.k;
  const std::string leaf(s.rbegin(), s.rend());
  BigInt total = inst.weights.big.numerator() * static_cast<unsigned long>(k);
  for (std::size_t j = 1; j + 2 <= k; ++j) {
    const std::string index = leaf.substr(leaf.size() - j);
    const std::size_t a = bits_value(index.substr(1));
    const std::size_t crossings = index[0] == '0' ? a : pow2(j - 1) - 1 - a;
    total += inst.weights.c[j].numerator() * static_cast<unsigned long>(crossings);
  }
  return total;
}

TEST(PlanarWeights, TableForFourTerminals) {
  const WeightTable t = planar_weight_table(4);
  EXPECT_EQ(t.c[2], Weight(1));
  EXPECT_EQ(t.c[1], Weight(6));
  EXPECT_EQ(t.big, Weight(18));
}

TEST(PlanarWeights, TableForSixTerminals) {
  const WeightTable t = planar_weight_table(6);
  EXPECT_EQ(t.c[4], Weight(1));
  EXPECT_EQ(t.c[3], Weight(72));
  EXPECT_EQ(t.c[2], Weight(1512));
  EXPECT_EQ(t.c[1], Weight(10584));
  EXPECT_EQ(t.big, Weight(31752));
}

TEST(PlanarWeights, LayerSizesMatchCrossingCount) {
  for (std::size_t k = 3; k <= 12; ++k) {
    EXPECT_EQ(expected_layer_size(0, k), 1);
    EXPECT_EQ(expected_layer_size(k - 1, k), BigInt(static_cast<unsigned long>(pow2(k - 2))));
    for (std::size_t j = 1; j + 2 <= k; ++j) {
      const std::size_t independent = pow2(j) + 2 * strip_crossings(j - 1);
      EXPECT_EQ(expected_layer_size(j, k), BigInt(static_cast<unsigned long>(independent)));
    }
  }
}

TEST(PlanarInstance, ThreeTerminals) {
  const PlanarInstance inst = generate_planar_dual(3);
  EXPECT_EQ(inst.dual.vertex_count(), 4U);
  EXPECT_EQ(inst.dual.edge_count(), 5U);
  EXPECT_EQ(inst.dual.face_count(), 3U);
  EXPECT_EQ(inst.primal.vertex_count(), 3U);
  EXPECT_TRUE(inst.crossings.empty());
}

TEST(PlanarInstance, FourTerminals) {
  const PlanarInstance inst = generate_planar_dual(4);
  EXPECT_EQ(inst.dual.vertex_count(), 9U);
  EXPECT_EQ(inst.dual.edge_count(), 13U);
  EXPECT_EQ(inst.dual.face_count(), 6U);
  ASSERT_EQ(inst.crossings.size(), 1U);
  EXPECT_EQ(inst.crossings[0].zero_child, "01");
  EXPECT_EQ(inst.crossings[0].one_child, "10");
  const std::vector<std::string> labels{"fn", "fs", "f1", "f2"};
  for (std::size_t t = 0; t < 4; ++t) EXPECT_EQ(inst.primal.label(inst.primal.terminal(t)), labels[t]);
}

TEST(PlanarInstance, CountsGrowAsDerived) {
  for (std::size_t k = 3; k <= 8; ++k) {
    const PlanarInstance inst = generate_planar_dual(k);
    std::size_t crossings = 0;
    for (std::size_t i = 0; i + 3 <= k; ++i) crossings += strip_crossings(i);
    EXPECT_EQ(inst.crossings.size(), crossings);
    EXPECT_EQ(inst.dual.vertex_count(), 1 + (pow2(k - 1) - 2) + 1 + crossings);
    std::size_t edges = 0;
    for (std::size_t j = 0; j < k; ++j) {
      EXPECT_EQ(BigInt(static_cast<unsigned long>(inst.layers[j].size())), expected_layer_size(j, k));
      edges += inst.layers[j].size();
    }
    EXPECT_EQ(inst.dual.edge_count(), edges);
    EXPECT_FALSE(inst.sheared);
  }
  EXPECT_EQ(generate_planar_dual(7).crossings.size(), 155U);
  EXPECT_EQ(generate_planar_dual(8).crossings.size(), 651U);
}

TEST(PlanarInstance, RejectsOutOfRangeK) {
  EXPECT_MIMICNET_ERROR(generate_planar_dual(2), ErrorCode::Parameter);
  EXPECT_MIMICNET_ERROR(generate_planar_dual(11), ErrorCode::Parameter);
  EXPECT_MIMICNET_ERROR(generate_planar_dual(5, 4), ErrorCode::Parameter);
}

TEST(PlanarInstance, EquatorFacesSitOnTheMeridians) {
  const PlanarInstance inst = generate_planar_dual(5);
  for (std::size_t i = 1; i <= 3; ++i) {
    const std::size_t f = inst.equator_faces[i - 1];
    EXPECT_EQ(inst.dual.face_containing(Point{Rational(static_cast<long>(i)), 0}), f);
    EXPECT_EQ(inst.primal.terminal(i + 1), inst.primal_of_face[f]);
  }
  EXPECT_EQ(inst.south_face, inst.dual.outer_face());
}

TEST(PlanarInstance, TreeEdgeLookup) {
  const PlanarInstance inst = generate_planar_dual(5);
  const TreeEdgeRecord& e = inst.tree_edge("101");
  EXPECT_EQ(e.index, "101");
  EXPECT_EQ(e.layer, 3U);
  EXPECT_EQ(e.parent, inst.branching.at("01"));
  EXPECT_EQ(e.child, inst.branching.at("101"));
  EXPECT_EQ(e.pieces.size(), 1 + pow2(2) - 1 - 1);
  EXPECT_MIMICNET_ERROR(inst.tree_edge("1010"), ErrorCode::NotFound);
  EXPECT_MIMICNET_ERROR(inst.tree_edge(""), ErrorCode::NotFound);
}

TEST(Signature, TextAndBipartitionRoundTrip) {
  const Signature s = Signature::parse("0110");
  EXPECT_EQ(s.str(), "0110");
  EXPECT_EQ(s.reversed().str(), "0110");
  EXPECT_EQ(Signature::parse("001").reversed().str(), "100");
  EXPECT_EQ(Signature::parse("110").dec(), 6);
  EXPECT_MIMICNET_ERROR(Signature::parse("012"), ErrorCode::Parameter);
  for (const Bipartition& b : enumerate_bipartitions(6)) {
    if (!is_important(b)) {
      EXPECT_TRUE(b.contains(1));
      continue;
    }
    EXPECT_EQ(important_bipartition(signature_of(b)), b);
  }
  const Bipartition b = important_bipartition(Signature::parse("10"));
  EXPECT_TRUE(b.contains(2));   // f1 north
  EXPECT_FALSE(b.contains(3));  // f2 south
  EXPECT_FALSE(b.contains(1));  // fs south
}

TEST(ImportantCycle, FourTerminalValues) {
  const PlanarInstance inst = generate_planar_dual(4);
  const std::vector<std::pair<std::string, long>> expected{{"00", 72}, {"10", 73}, {"01", 73}, {"11", 72}};
  for (const auto& [s, value] : expected) {
    const auto cycle = important_cycle(inst, Signature::parse(s));
    EXPECT_EQ(edge_set_weight(inst, cycle), Weight(value)) << s;
  }
  EXPECT_MIMICNET_ERROR(important_cycle(inst, Signature::parse("1")), ErrorCode::Parameter);
  EXPECT_MIMICNET_ERROR(important_cycle(inst, Signature::parse("101")), ErrorCode::Parameter);
}

// Minimum cut values of important bipartitions equal the crossing-pattern
// formula, and the canonical cut is the cycle itself.
TEST(ImportantCycleProperty, MinCutsMatchCrossingFormula) {
  for (std::size_t k = 3; k <= 6; ++k) {
    const PlanarInstance inst = generate_planar_dual(k);
    const CutProfile p = cut_profile(inst.primal);
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (!is_important(p.bipartitions[i])) continue;
      const Signature s = signature_of(p.bipartitions[i]);
      EXPECT_EQ(p.cuts[i].value, Weight(cycle_weight_formula(inst, s.str()), 1)) << "k=" << k << " s=" << s.str();
      auto cycle = important_cycle(inst, s);
      std::sort(cycle.begin(), cycle.end());
      EXPECT_EQ(p.cuts[i].crossing_edges, cycle);
      EXPECT_TRUE(p.cuts[i].unique);
    }
  }
}

TEST(PlanarVerifiers, PassOnGeneratedInstances) {
  for (std::size_t k = 3; k <= 5; ++k) {
    const PlanarInstance inst = generate_planar_dual(k);
    const VerificationReport paths = verify_claim_paths(inst);
    EXPECT_TRUE(paths.passed()) << paths.render();
    const VerificationReport cycles = verify_unique_cycles(inst);
    EXPECT_TRUE(cycles.passed()) << cycles.render();
    const VerificationReport structure = verify_structure(inst);
    EXPECT_TRUE(structure.passed()) << structure.render();
  }
}

TEST(PlanarVerifiers, UniqueCycleCheckIsBounded) {
  const PlanarInstance inst = generate_planar_dual(9, 9);
  EXPECT_MIMICNET_ERROR(verify_unique_cycles(inst), ErrorCode::Parameter);
}

TEST(PlanarVerifiers, StructureCatchesTamperedWeights) {
  PlanarInstance inst = generate_planar_dual(4);
  inst.dual_weights[inst.tree_edges.back().pieces.front()] = Weight(2);
  EXPECT_FALSE(verify_structure(inst).passed());
}

TEST(PlanarVerifiers, ClaimPathsCatchBrokenPaths) {
  PlanarInstance inst = generate_planar_dual(4);
  std::swap(inst.fan_edges[0], inst.fan_edges[3]);
  EXPECT_FALSE(verify_claim_paths(inst).passed());
}

}  // namespace
}  // namespace mimicnet
