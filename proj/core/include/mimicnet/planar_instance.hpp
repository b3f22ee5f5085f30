#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "mimicnet/parallel.hpp"
#include "mimicnet/plane_graph.hpp"
#include "mimicnet/report.hpp"
#include "mimicnet/terminal_graph.hpp"
#include "mimicnet/weight.hpp"

namespace mimicnet {

inline constexpr std::size_t kDefaultMaxPlanarK = 10;

/// Edge weights of the layered planar construction: c[j] for 1 <= j <= k-2
/// (c[0] is unused) and the heavy weight C.
struct WeightTable {
  std::vector<Weight> c;
  Weight big;
};

/// Number of drawn edges in layer j of the planar instance.
BigInt expected_layer_size(std::size_t j, std::size_t k);
/// c_{k-2} = 1, c_i = sum_{j>i} |E_j| c_j, C = sum_j |E_j| c_j.
WeightTable planar_weight_table(std::size_t k);

/// Bit vector over the equator faces f_1..f_{k-2}; bit i-1 is set iff f_i is
/// on the north side.
struct Signature {
  std::vector<bool> bits;

  /// Binary value, first bit most significant.
  BigInt dec() const;
  Signature reversed() const;
  /// "0110"-style text, first bit first.
  std::string str() const;
  static Signature parse(const std::string& text);

  friend bool operator==(const Signature&, const Signature&) = default;
};

/// One subdivided edge of the underlying tree, from parent v_a to child v_ba.
struct TreeEdgeRecord {
  std::string index;  // "ba", the child's index
  std::size_t layer = 0;
  VertexId parent = 0;
  VertexId child = 0;
  /// Drawn pieces in order from the parent; the last one weighs C.
  std::vector<EdgeId> pieces;
};

/// Crossing vertex where e_{0a} (a "0-child" edge) meets e_{1a'}.
struct CrossingRecord {
  VertexId vertex = 0;
  std::size_t strip = 0;
  std::string zero_child;
  std::string one_child;
};

/// The layered planar instance: the drawn graph G, its dual G* (the
/// terminal graph whose cuts are studied) and all construction metadata.
struct PlanarInstance {
  std::size_t k = 0;
  PlaneGraph dual;
  std::vector<Weight> dual_weights;
  TerminalGraph primal{{"a", "b"}, {0, 1}, {}};
  std::vector<std::size_t> face_of_primal;
  std::vector<VertexId> primal_of_face;

  VertexId root = 0;
  VertexId apex = 0;
  EdgeId apex_edge = 0;
  /// Branching vertex ids by index string (root is "").
  std::map<std::string, VertexId> branching;
  /// Tree edges ordered by layer, then by child index.
  std::vector<TreeEdgeRecord> tree_edges;
  /// Leaf-to-apex edges ordered by leaf index.
  std::vector<EdgeId> fan_edges;
  std::vector<CrossingRecord> crossings;
  /// layers[j] lists the drawn edges of layer j, 0 <= j <= k-1.
  std::vector<std::vector<EdgeId>> layers;
  WeightTable weights;

  std::size_t north_face = 0;
  std::size_t south_face = 0;
  std::vector<std::size_t> equator_faces;
  bool sheared = false;

  const TreeEdgeRecord& tree_edge(const std::string& index) const;
  /// Primal terminal order is (f_n, f_s, f_1, ..., f_{k-2}).
  std::size_t important_count() const { return std::size_t{1} << (k - 2); }
};

/// Builds the instance for k terminals, 3 <= k <= max_k.
PlanarInstance generate_planar_dual(std::size_t k, std::size_t max_k = kDefaultMaxPlanarK);

/// True iff S holds f_n and not f_s. Canonical bipartitions always hold f_n.
bool is_important(const Bipartition& b);
Signature signature_of(const Bipartition& b);
Bipartition important_bipartition(const Signature& s);

/// Edges of the important cycle for signature s: the apex edge, the
/// subdivided root-to-leaf path to v_rev(s), and that leaf's fan edge.
/// Throws if they do not form one simple cycle with exactly k weight-C edges.
std::vector<EdgeId> important_cycle(const PlanarInstance& inst, const Signature& s);
Weight edge_set_weight(const PlanarInstance& inst, const std::vector<EdgeId>& edges);

/// Edge-disjoint weight-C north-to-south paths in the primal graph.
VerificationReport verify_claim_paths(const PlanarInstance& inst);

/// Important minimum cuts are unique and equal the important cycles; also
/// measures uniqueness of every other bipartition.
inline constexpr std::size_t kMaxUniqueCycleK = 8;
VerificationReport verify_unique_cycles(const PlanarInstance& inst, Parallelism p = {});

/// Layer sizes, Euler's formula, weight recurrence and hierarchy, crossing
/// counts and crossing partners.
VerificationReport verify_structure(const PlanarInstance& inst);

}  // namespace mimicnet
