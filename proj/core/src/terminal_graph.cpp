#include "mimicnet/terminal_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

#include "mimicnet/errors.hpp"

namespace mimicnet {

TerminalGraph::TerminalGraph(std::vector<std::string> labels, std::vector<VertexId> terminals,
                             std::vector<Edge> edges)
    : labels_(std::move(labels)), terminals_(std::move(terminals)), edges_(std::move(edges)) {
  const std::size_t n = labels_.size();
  for (std::size_t v = 0; v < n; ++v) {
    if (labels_[v].empty()) labels_[v] = "v" + std::to_string(v);
    if (!by_label_.emplace(labels_[v], v).second) {
      throw Error(ErrorCode::Precondition, "duplicate vertex label '" + labels_[v] + "'");
    }
  }
  if (terminals_.size() < 2) {
    throw Error(ErrorCode::InvalidTerminalSet, "at least two terminals are required");
  }
  terminal_index_.assign(n, -1);
  for (std::size_t i = 0; i < terminals_.size(); ++i) {
    const VertexId t = terminals_[i];
    if (t >= n) {
      throw Error(ErrorCode::InvalidTerminalSet,
                  "terminal " + std::to_string(t) + " is not a vertex");
    }
    if (terminal_index_[t] >= 0) {
      throw Error(ErrorCode::InvalidTerminalSet, "terminal '" + labels_[t] + "' listed twice");
    }
    terminal_index_[t] = static_cast<long>(i);
  }
  for (const Edge& e : edges_) {
    if (e.u >= n || e.v >= n) {
      throw Error(ErrorCode::NotFound, "edge endpoint out of range");
    }
    if (e.u == e.v) {
      throw Error(ErrorCode::Precondition, "self-loop at '" + labels_[e.u] + "'");
    }
  }
}

std::optional<VertexId> TerminalGraph::find(std::string_view label) const {
  const auto it = by_label_.find(std::string(label));
  if (it == by_label_.end()) return std::nullopt;
  return it->second;
}

VertexId TerminalGraph::vertex(std::string_view label) const {
  if (auto v = find(label)) return *v;
  throw Error(ErrorCode::NotFound, "no vertex labelled '" + std::string(label) + "'");
}

std::optional<std::size_t> TerminalGraph::terminal_index(VertexId v) const {
  const long i = terminal_index_.at(v);
  if (i < 0) return std::nullopt;
  return static_cast<std::size_t>(i);
}

bool TerminalGraph::connected() const {
  const std::size_t n = vertex_count();
  if (n == 0) return true;
  std::vector<VertexId> parent(n);
  std::iota(parent.begin(), parent.end(), VertexId{0});
  auto find_root = [&](VertexId x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::size_t components = n;
  for (const Edge& e : edges_) {
    const VertexId a = find_root(e.u);
    const VertexId b = find_root(e.v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

std::vector<std::vector<EdgeId>> TerminalGraph::incidence() const {
  std::vector<std::vector<EdgeId>> inc(vertex_count());
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    inc[edges_[e].u].push_back(e);
    inc[edges_[e].v].push_back(e);
  }
  return inc;
}

std::vector<std::size_t> Bipartition::side() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < terminal_count; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

Bipartition Bipartition::from_subset(std::span<const std::size_t> terminal_indices,
                                     std::size_t terminal_count) {
  if (terminal_count < 2 || terminal_count > 63) {
    throw Error(ErrorCode::InvalidTerminalSet, "terminal count out of range");
  }
  std::vector<bool> in(terminal_count, false);
  for (std::size_t t : terminal_indices) {
    if (t >= terminal_count) {
      throw Error(ErrorCode::InvalidTerminalSet, "terminal index out of range");
    }
    in[t] = true;
  }
  const auto count = static_cast<std::size_t>(std::count(in.begin(), in.end(), true));
  if (count == 0 || count == terminal_count) {
    throw Error(ErrorCode::InvalidSide, "terminal side must be nonempty and proper");
  }
  const bool flip = !in[0];
  Bipartition b{0, terminal_count};
  for (std::size_t t = 1; t < terminal_count; ++t) {
    if (in[t] != flip) b.members |= std::uint64_t{1} << (t - 1);
  }
  return b;
}

std::size_t bipartition_count(std::size_t terminal_count) {
  if (terminal_count < 2 || terminal_count > 63) {
    throw Error(ErrorCode::InvalidTerminalSet,
                "need 2 <= k <= 63 terminals, got " + std::to_string(terminal_count));
  }
  return (std::size_t{1} << (terminal_count - 1)) - 1;
}

std::vector<Bipartition> enumerate_bipartitions(std::size_t terminal_count) {
  const std::size_t count = bipartition_count(terminal_count);
  std::vector<Bipartition> out;
  out.reserve(count);
  for (std::uint64_t m = 0; m < count; ++m) out.push_back(Bipartition{m, terminal_count});
  return out;
}

std::vector<Bipartition> enumerate_bipartitions(std::span<const VertexId> terminals) {
  return enumerate_bipartitions(terminals.size());
}

namespace {

// Shared contraction; `rep_of_class[c]` is the surviving original vertex of
// class c. Output vertices are ordered by survivor id.
TerminalGraph contract_with(const TerminalGraph& g, std::span<const std::size_t> class_of,
                            std::vector<VertexId> rep_of_class,
                            std::vector<VertexId>* representatives) {
  const std::size_t n = g.vertex_count();
  const std::size_t classes = rep_of_class.size();

  std::vector<std::size_t> class_size(classes, 0);
  for (VertexId v = 0; v < n; ++v) ++class_size[class_of[v]];

  std::vector<std::size_t> order(classes);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return rep_of_class[a] < rep_of_class[b]; });
  std::vector<VertexId> new_id(classes);
  std::vector<std::string> labels;
  labels.reserve(classes);
  for (std::size_t i = 0; i < classes; ++i) {
    new_id[order[i]] = i;
    labels.push_back(g.label(rep_of_class[order[i]]));
  }

  std::vector<VertexId> terminals;
  terminals.reserve(g.terminal_count());
  for (VertexId t : g.terminals()) terminals.push_back(new_id[class_of[t]]);

  std::vector<Edge> edges;
  std::map<std::pair<VertexId, VertexId>, std::size_t> merged_slot;
  for (const Edge& e : g.edges()) {
    const std::size_t cu = class_of[e.u];
    const std::size_t cv = class_of[e.v];
    if (cu == cv) continue;
    VertexId a = new_id[cu];
    VertexId b = new_id[cv];
    if (class_size[cu] == 1 && class_size[cv] == 1) {
      edges.push_back(Edge{a, b, e.weight});
      continue;
    }
    const auto key = std::minmax(a, b);
    auto [it, inserted] = merged_slot.try_emplace(key, edges.size());
    if (inserted) {
      edges.push_back(Edge{a, b, e.weight});
    } else {
      edges[it->second].weight += e.weight;
    }
  }

  if (representatives != nullptr) {
    representatives->clear();
    for (std::size_t i = 0; i < classes; ++i) representatives->push_back(rep_of_class[order[i]]);
  }
  return TerminalGraph(std::move(labels), std::move(terminals), std::move(edges));
}

}  // namespace

TerminalGraph merge_vertices(const TerminalGraph& g, VertexId u, VertexId v) {
  const std::size_t n = g.vertex_count();
  if (u >= n || v >= n) {
    throw Error(ErrorCode::NotFound, "merge of a vertex that does not exist");
  }
  if (u == v) {
    throw Error(ErrorCode::IllegalMerge, "cannot merge a vertex with itself");
  }
  if (g.is_terminal(u) && g.is_terminal(v)) {
    throw Error(ErrorCode::IllegalMerge,
                "cannot merge terminals '" + g.label(u) + "' and '" + g.label(v) + "'");
  }
  const VertexId survivor = g.is_terminal(v) ? v : u;
  const VertexId gone = survivor == u ? v : u;

  std::vector<std::size_t> class_of(n);
  std::vector<VertexId> reps;
  reps.reserve(n - 1);
  for (VertexId x = 0; x < n; ++x) {
    if (x == gone) continue;
    class_of[x] = reps.size();
    reps.push_back(x);
  }
  class_of[gone] = class_of[survivor];
  return contract_with(g, class_of, std::move(reps), nullptr);
}

TerminalGraph contract_classes(const TerminalGraph& g, std::span<const std::size_t> class_of,
                               std::vector<VertexId>* representatives) {
  const std::size_t n = g.vertex_count();
  if (class_of.size() != n) {
    throw Error(ErrorCode::Precondition, "class map does not cover every vertex");
  }
  std::size_t classes = 0;
  for (std::size_t c : class_of) classes = std::max(classes, c + 1);
  constexpr VertexId kNone = static_cast<VertexId>(-1);
  std::vector<VertexId> rep(classes, kNone);
  std::vector<bool> has_terminal(classes, false);
  for (VertexId v = 0; v < n; ++v) {
    const std::size_t c = class_of[v];
    if (g.is_terminal(v)) {
      if (has_terminal[c]) {
        throw Error(ErrorCode::IllegalMerge, "class holds two terminals, including '" +
                                                 g.label(v) + "'");
      }
      has_terminal[c] = true;
      rep[c] = v;
    } else if (!has_terminal[c] && (rep[c] == kNone || v < rep[c])) {
      rep[c] = v;
    }
  }
  for (std::size_t c = 0; c < classes; ++c) {
    if (rep[c] == kNone) throw Error(ErrorCode::Precondition, "empty contraction class");
  }
  return contract_with(g, class_of, std::move(rep), representatives);
}

Weight cut_value(const TerminalGraph& g, const VertexSet& side) {
  if (side.size() != g.vertex_count()) {
    throw Error(ErrorCode::InvalidSide, "side mask has the wrong length");
  }
  const auto inside = static_cast<std::size_t>(std::count(side.begin(), side.end(), true));
  if (inside == 0 || inside == side.size()) {
    throw Error(ErrorCode::InvalidSide, "side and its complement must both be nonempty");
  }
  Weight total;
  for (const Edge& e : g.edges()) {
    if (side[e.u] != side[e.v]) total += e.weight;
  }
  return total;
}

VertexSet terminal_side(const TerminalGraph& g, const Bipartition& b) {
  if (b.terminal_count != g.terminal_count()) {
    throw Error(ErrorCode::TerminalMismatch, "bipartition does not match the terminal list");
  }
  VertexSet side(g.vertex_count(), false);
  for (std::size_t i = 0; i < g.terminal_count(); ++i) {
    if (b.contains(i)) side[g.terminal(i)] = true;
  }
  return side;
}

}  // namespace mimicnet
