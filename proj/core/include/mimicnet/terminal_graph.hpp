#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mimicnet/weight.hpp"

namespace mimicnet {

using VertexId = std::size_t;
using EdgeId = std::size_t;

/// Vertex membership mask; `side[v]` is true iff v is on the side.
using VertexSet = std::vector<bool>;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  Weight weight;
};

/// Undirected, exactly weighted graph with an ordered terminal list.
///
/// Immutable after construction. Vertex ids are dense indices; every vertex
/// carries a unique label (generated as "v<id>" when left empty). Parallel
/// edges are allowed, self-loops are not.
class TerminalGraph {
 public:
  TerminalGraph(std::vector<std::string> labels, std::vector<VertexId> terminals,
                std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::size_t terminal_count() const noexcept { return terminals_.size(); }

  const std::string& label(VertexId v) const { return labels_.at(v); }
  std::span<const std::string> labels() const noexcept { return labels_; }
  std::optional<VertexId> find(std::string_view label) const;
  /// Like find(), but throws NotFound.
  VertexId vertex(std::string_view label) const;

  std::span<const VertexId> terminals() const noexcept { return terminals_; }
  VertexId terminal(std::size_t index) const { return terminals_.at(index); }
  bool is_terminal(VertexId v) const { return terminal_index_.at(v) >= 0; }
  /// Position of v in the terminal list, if v is a terminal.
  std::optional<std::size_t> terminal_index(VertexId v) const;

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }

  /// Connectivity over all edges, zero-weight ones included.
  bool connected() const;

  /// Incident edge ids per vertex, in edge order.
  std::vector<std::vector<EdgeId>> incidence() const;

 private:
  std::vector<std::string> labels_;
  std::vector<VertexId> terminals_;
  std::vector<Edge> edges_;
  std::vector<long> terminal_index_;
  std::unordered_map<std::string, VertexId> by_label_;
};

/// Canonical terminal bipartition S | Q\S with the first terminal in S.
///
/// Bit j-1 of `members` is set iff terminal j (0-based, j >= 1) is in S. The
/// enumeration order of all bipartitions is ascending `members`.
struct Bipartition {
  std::uint64_t members = 0;
  std::size_t terminal_count = 0;

  bool contains(std::size_t terminal_index) const {
    return terminal_index == 0 || ((members >> (terminal_index - 1)) & 1U) != 0;
  }
  /// Terminal indices in S, ascending.
  std::vector<std::size_t> side() const;

  /// Canonical form of an arbitrary nonempty proper terminal subset
  /// (given as terminal indices); complements it if it lacks terminal 0.
  static Bipartition from_subset(std::span<const std::size_t> terminal_indices,
                                 std::size_t terminal_count);

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

std::size_t bipartition_count(std::size_t terminal_count);

/// All 2^{k-1} - 1 canonical bipartitions in ascending mask order.
std::vector<Bipartition> enumerate_bipartitions(std::size_t terminal_count);
std::vector<Bipartition> enumerate_bipartitions(std::span<const VertexId> terminals);

/// Identifies u and v. The survivor is the terminal among the two if there is
/// one, otherwise u; it keeps its label. Edges between u and v vanish and
/// parallel edges from the merged vertex to any third vertex are summed.
TerminalGraph merge_vertices(const TerminalGraph& g, VertexId u, VertexId v);

/// Contracts every class of `class_of` (a class id per vertex) to a single
/// vertex. Each class may contain at most one terminal; the representative is
/// the terminal, or the smallest vertex id in the class. Output vertices are
/// ordered by representative id. `representatives`, if given, receives the
/// original id behind each output vertex.
TerminalGraph contract_classes(const TerminalGraph& g, std::span<const std::size_t> class_of,
                               std::vector<VertexId>* representatives = nullptr);

/// Total weight of edges with exactly one endpoint in `side`.
Weight cut_value(const TerminalGraph& g, const VertexSet& side);

/// Membership mask of the terminals on the S side of b.
VertexSet terminal_side(const TerminalGraph& g, const Bipartition& b);

}  // namespace mimicnet
