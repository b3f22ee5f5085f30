#include "mimicnet/cut_engine.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <variant>

#include "mimicnet/errors.hpp"

namespace mimicnet {

namespace {

template <class Cap>
struct FlowNetwork {
  std::size_t n = 0;
  // Arc 2e is u -> v of edge e, arc 2e+1 is v -> u.
  std::vector<VertexId> head;
  std::vector<Cap> capacity;
  std::vector<std::vector<std::size_t>> out;
  Cap total{};
};

template <class Cap>
class Dinic {
 public:
  Dinic(const FlowNetwork<Cap>& net, const VertexSet& is_source, const VertexSet& is_sink)
      : net_(net), source_(is_source), sink_(is_sink), residual_(net.capacity),
        level_(net.n), cursor_(net.n) {}

  Cap run() {
    Cap flow{};
    const Cap unbounded = net_.total + Cap(1);
    while (build_levels()) {
      std::fill(cursor_.begin(), cursor_.end(), 0);
      for (VertexId s = 0; s < net_.n; ++s) {
        if (!source_[s]) continue;
        while (true) {
          Cap pushed = augment(s, unbounded);
          if (pushed == Cap(0)) break;
          flow += pushed;
        }
      }
    }
    return flow;
  }

  const std::vector<Cap>& residual() const { return residual_; }

  VertexSet reachable_from_sources() const {
    VertexSet seen(net_.n, false);
    std::vector<VertexId> queue;
    for (VertexId v = 0; v < net_.n; ++v) {
      if (source_[v]) {
        seen[v] = true;
        queue.push_back(v);
      }
    }
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const VertexId x = queue[i];
      for (std::size_t a : net_.out[x]) {
        const VertexId y = net_.head[a];
        if (!seen[y] && residual_[a] > Cap(0)) {
          seen[y] = true;
          queue.push_back(y);
        }
      }
    }
    return seen;
  }

  VertexSet reaching_sinks() const {
    VertexSet seen(net_.n, false);
    std::vector<VertexId> queue;
    for (VertexId v = 0; v < net_.n; ++v) {
      if (sink_[v]) {
        seen[v] = true;
        queue.push_back(v);
      }
    }
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const VertexId y = queue[i];
      for (std::size_t b : net_.out[y]) {
        const VertexId x = net_.head[b];
        if (!seen[x] && residual_[b ^ 1U] > Cap(0)) {
          seen[x] = true;
          queue.push_back(x);
        }
      }
    }
    return seen;
  }

 private:
  bool build_levels() {
    std::fill(level_.begin(), level_.end(), -1);
    std::vector<VertexId> queue;
    for (VertexId v = 0; v < net_.n; ++v) {
      if (source_[v]) {
        level_[v] = 0;
        queue.push_back(v);
      }
    }
    bool reached = false;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const VertexId x = queue[i];
      if (sink_[x]) {
        reached = true;
        continue;
      }
      for (std::size_t a : net_.out[x]) {
        const VertexId y = net_.head[a];
        if (level_[y] < 0 && residual_[a] > Cap(0)) {
          level_[y] = level_[x] + 1;
          queue.push_back(y);
        }
      }
    }
    return reached;
  }

  Cap augment(VertexId x, const Cap& limit) {
    if (sink_[x]) return limit;
    auto& arcs = net_.out[x];
    for (std::size_t& i = cursor_[x]; i < arcs.size(); ++i) {
      const std::size_t a = arcs[i];
      const VertexId y = net_.head[a];
      if (level_[y] != level_[x] + 1 || !(residual_[a] > Cap(0))) continue;
      const Cap want = residual_[a] < limit ? residual_[a] : limit;
      Cap got = augment(y, want);
      if (got > Cap(0)) {
        residual_[a] -= got;
        residual_[a ^ 1U] += got;
        return got;
      }
    }
    return Cap(0);
  }

  const FlowNetwork<Cap>& net_;
  const VertexSet& source_;
  const VertexSet& sink_;
  std::vector<Cap> residual_;
  std::vector<int> level_;
  std::vector<std::size_t> cursor_;
};

template <class Cap>
Cap from_big(const BigInt& x) {
  if constexpr (std::is_same_v<Cap, std::int64_t>) {
    return static_cast<std::int64_t>(x.get_si());
  } else {
    return x;
  }
}

template <class Cap>
BigInt to_big(const Cap& x) {
  if constexpr (std::is_same_v<Cap, std::int64_t>) {
    return BigInt(static_cast<long>(x));
  } else {
    return x;
  }
}

template <class Cap>
FlowNetwork<Cap> build_network(const TerminalGraph& g, const std::vector<BigInt>& scaled) {
  FlowNetwork<Cap> net;
  net.n = g.vertex_count();
  net.out.resize(net.n);
  const auto edges = g.edges();
  net.head.resize(2 * edges.size());
  net.capacity.resize(2 * edges.size());
  BigInt total = 0;
  for (EdgeId e = 0; e < edges.size(); ++e) {
    net.head[2 * e] = edges[e].v;
    net.head[2 * e + 1] = edges[e].u;
    net.capacity[2 * e] = from_big<Cap>(scaled[e]);
    net.capacity[2 * e + 1] = from_big<Cap>(scaled[e]);
    net.out[edges[e].u].push_back(2 * e);
    net.out[edges[e].v].push_back(2 * e + 1);
    total += scaled[e];
  }
  net.total = from_big<Cap>(total);
  return net;
}

}  // namespace

struct CutEngine::Impl {
  BigInt scale = 1;
  std::variant<FlowNetwork<std::int64_t>, FlowNetwork<BigInt>> network;
};

CutEngine::CutEngine(const TerminalGraph& g) : graph_(&g), impl_(std::make_unique<Impl>()) {
  BigInt scale = 1;
  for (const Edge& e : g.edges()) {
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), e.weight.value().get_den_mpz_t());
  }
  std::vector<BigInt> scaled;
  scaled.reserve(g.edge_count());
  BigInt total = 0;
  for (const Edge& e : g.edges()) {
    scaled.push_back(e.weight.value().get_num() * (scale / e.weight.value().get_den()));
    total += scaled.back();
  }
  impl_->scale = scale;
  const BigInt limit = BigInt(1) << 62;
  if (total < limit) {
    impl_->network = build_network<std::int64_t>(g, scaled);
  } else {
    impl_->network = build_network<BigInt>(g, scaled);
  }
}

CutEngine::~CutEngine() = default;
CutEngine::CutEngine(CutEngine&&) noexcept = default;
CutEngine& CutEngine::operator=(CutEngine&&) noexcept = default;

bool CutEngine::uses_machine_integers() const noexcept {
  return std::holds_alternative<FlowNetwork<std::int64_t>>(impl_->network);
}

CanonicalCut CutEngine::min_cut(const Bipartition& b, FlowWitness* witness) const {
  const TerminalGraph& g = *graph_;
  if (!g.connected()) {
    throw Error(ErrorCode::Disconnected, "minimum cuts require a connected graph");
  }
  const VertexSet source = terminal_side(g, b);
  VertexSet sink(g.vertex_count(), false);
  for (std::size_t i = 0; i < g.terminal_count(); ++i) {
    if (!b.contains(i)) sink[g.terminal(i)] = true;
  }

  return std::visit(
      [&](const auto& net) {
        using Cap = typename std::decay_t<decltype(net.capacity)>::value_type;
        Dinic<Cap> dinic(net, source, sink);
        const Cap flow = dinic.run();

        CanonicalCut cut;
        cut.value = Weight(Rational(to_big<Cap>(flow), impl_->scale));
        cut.source_side = dinic.reachable_from_sources();
        const VertexSet reaches_sink = dinic.reaching_sinks();
        cut.sink_complement.resize(g.vertex_count());
        for (VertexId v = 0; v < g.vertex_count(); ++v) cut.sink_complement[v] = !reaches_sink[v];
        cut.unique = cut.source_side == cut.sink_complement;
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
          const Edge& edge = g.edge(e);
          if (cut.source_side[edge.u] != cut.source_side[edge.v]) cut.crossing_edges.push_back(e);
        }

        if (witness != nullptr) {
          const auto& residual = dinic.residual();
          witness->edge_flow.assign(g.edge_count(), Rational(0));
          for (EdgeId e = 0; e < g.edge_count(); ++e) {
            const BigInt net_flow = to_big<Cap>(net.capacity[2 * e]) - to_big<Cap>(residual[2 * e]);
            witness->edge_flow[e] = Rational(net_flow, impl_->scale);
            witness->edge_flow[e].canonicalize();
          }
          witness->value = cut.value;
        }
        return cut;
      },
      impl_->network);
}

CanonicalCut min_cut(const TerminalGraph& g, const Bipartition& b, FlowWitness* witness) {
  return CutEngine(g).min_cut(b, witness);
}

bool is_unique(const TerminalGraph& g, const Bipartition& b) { return min_cut(g, b).unique; }

BruteForceCut brute_force_min_cut(const TerminalGraph& g, const Bipartition& b) {
  std::vector<VertexId> free_vertices;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!g.is_terminal(v)) free_vertices.push_back(v);
  }
  if (free_vertices.size() > kBruteForceMaxFreeVertices) {
    throw Error(ErrorCode::OracleTooLarge,
                "brute force oracle limited to " + std::to_string(kBruteForceMaxFreeVertices) +
                    " non-terminals, graph has " + std::to_string(free_vertices.size()));
  }
  VertexSet side = terminal_side(g, b);
  BruteForceCut best;
  bool have = false;
  const std::uint64_t combos = std::uint64_t{1} << free_vertices.size();
  for (std::uint64_t mask = 0; mask < combos; ++mask) {
    for (std::size_t i = 0; i < free_vertices.size(); ++i) {
      side[free_vertices[i]] = ((mask >> i) & 1U) != 0;
    }
    Weight value = cut_value(g, side);
    if (!have || value < best.value) {
      best.value = value;
      best.optimal_sides.assign(1, side);
      have = true;
    } else if (value == best.value) {
      best.optimal_sides.push_back(side);
    }
  }
  return best;
}

}  // namespace mimicnet
