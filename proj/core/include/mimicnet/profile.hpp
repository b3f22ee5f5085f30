#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "mimicnet/cut_engine.hpp"
#include "mimicnet/parallel.hpp"
#include "mimicnet/terminal_graph.hpp"

namespace mimicnet {

/// Canonical cut for every canonical bipartition, in enumeration order.
struct CutProfile {
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  std::vector<Bipartition> bipartitions;
  std::vector<CanonicalCut> cuts;

  std::size_t size() const noexcept { return cuts.size(); }
  std::size_t unique_count() const;
};

CutProfile cut_profile(const TerminalGraph& g, Parallelism p = {});

/// Bit i is set iff the vertex lies in the source side of bipartition i.
using SideVector = std::vector<bool>;

std::vector<SideVector> side_vectors(const TerminalGraph& g, const CutProfile& profile);

struct CompressionResult {
  TerminalGraph graph;
  /// classes[i] lists the original vertices merged into output vertex i.
  std::vector<std::vector<VertexId>> classes;
};

/// Merges every group of vertices sharing a side vector into one vertex.
CompressionResult hagerup_compress(const TerminalGraph& g, Parallelism p = {});

struct CutMismatch {
  Bipartition bipartition;
  Weight original;
  Weight other;
};

struct MimickingReport {
  std::size_t checked = 0;
  std::vector<CutMismatch> mismatches;

  bool passed() const noexcept { return mismatches.empty(); }
};

/// Compares min-cut values of g and g2 over every bipartition. The terminal
/// lists must carry the same labels in the same order.
MimickingReport validate_mimicking(const TerminalGraph& g, const TerminalGraph& g2,
                                   Parallelism p = {});

/// True iff identifying u and v leaves every minimum cut value unchanged.
bool mergeability_test(const TerminalGraph& g, VertexId u, VertexId v);

/// Same test, reusing a profile of g. Bipartitions whose canonical cut keeps
/// u and v together are settled without a flow computation: that cut survives
/// the merge, and merging never lowers a minimum cut.
bool mergeability_test(const TerminalGraph& g, const CutProfile& profile, VertexId u, VertexId v);

}  // namespace mimicnet
