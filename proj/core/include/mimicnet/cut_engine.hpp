#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "mimicnet/terminal_graph.hpp"
#include "mimicnet/weight.hpp"

namespace mimicnet {

/// Minimum cut for one bipartition, normalised to the source-minimal side.
struct CanonicalCut {
  Weight value;
  /// Edges leaving `source_side`, ascending id.
  std::vector<EdgeId> crossing_edges;
  /// Vertices residually reachable from the S terminals after max-flow; the
  /// inclusion-minimal source side over all minimum cuts.
  VertexSet source_side;
  /// Complement of the vertices that can still reach an S-bar terminal; the
  /// inclusion-maximal source side.
  VertexSet sink_complement;
  bool unique = false;
};

/// Net flow per edge (positive means u -> v) certifying a cut's optimality.
struct FlowWitness {
  std::vector<Rational> edge_flow;
  Weight value;
};

/// Max-flow/min-cut over a fixed graph.
///
/// Capacities are scaled once to integers by the common denominator of all
/// weights. If the scaled total stays below 2^62 the flow runs on int64,
/// otherwise on GMP integers; either way it is exact. Each call to min_cut()
/// works on private residual state, so concurrent calls are safe.
class CutEngine {
 public:
  explicit CutEngine(const TerminalGraph& g);
  ~CutEngine();
  CutEngine(CutEngine&&) noexcept;
  CutEngine& operator=(CutEngine&&) noexcept;

  CanonicalCut min_cut(const Bipartition& b, FlowWitness* witness = nullptr) const;

  const TerminalGraph& graph() const noexcept { return *graph_; }
  bool uses_machine_integers() const noexcept;

 private:
  struct Impl;
  const TerminalGraph* graph_;
  std::unique_ptr<Impl> impl_;
};

/// Exact minimum cut between the S and S-bar terminals using shortest
/// augmenting paths (Dinic). Throws Disconnected if g is not connected.
CanonicalCut min_cut(const TerminalGraph& g, const Bipartition& b, FlowWitness* witness = nullptr);

bool is_unique(const TerminalGraph& g, const Bipartition& b);

inline constexpr std::size_t kBruteForceMaxFreeVertices = 20;

struct BruteForceCut {
  Weight value;
  /// Every optimal source side, in enumeration order.
  std::vector<VertexSet> optimal_sides;
};

/// Oracle: enumerates all 2^(n-k) placements of the non-terminals.
BruteForceCut brute_force_min_cut(const TerminalGraph& g, const Bipartition& b);

}  // namespace mimicnet
