#include "mimicnet/dblexp_instance.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <mutex>
#include <random>
#include <set>

#include "mimicnet/cut_engine.hpp"
#include "mimicnet/errors.hpp"
#include "mimicnet/profile.hpp"

namespace mimicnet {

namespace {

BigInt binomial(unsigned long n, unsigned long m) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, m);
  return out;
}

// All m-subsets of {0..n-1}, lexicographic.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t m) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur(m);
  for (std::size_t i = 0; i < m; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = m;
    while (i > 0 && cur[i - 1] == n - m + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < m; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

std::string subset_label(char prefix, const std::vector<std::size_t>& s) {
  std::string out(1, prefix);
  out += '{';
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i] + 1);
  return out + '}';
}

std::string q_set(const std::vector<std::size_t>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ",q" : "q") + std::to_string(s[i] + 1);
  return out + "}";
}

bool member(const std::vector<std::size_t>& sorted, std::size_t x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

}  // namespace

EllParity check_ell_even(std::size_t r) {
  if (r < 2) throw Error(ErrorCode::Parameter, "r must be at least 2");
  EllParity out;
  out.ell = binomial(2 * r + 1, r);
  out.even = mpz_even_p(out.ell.get_mpz_t()) != 0;
  return out;
}

Weight DblExpInstance::heavy_cost() const {
  const long rr = static_cast<long>(r);
  Rational factor(rr * rr + rr + 1, rr * rr);
  factor.canonicalize();
  return Weight(Rational(alpha.value() * factor));
}

Weight DblExpInstance::outer_cost() const { return Weight(static_cast<long>(ell / 2 - 1)); }

DblExpInstance generate_dblexp(std::size_t r, std::optional<Weight> alpha, const BigInt& max_outer) {
  if (r < 2 || r % 4 != 2) {
    throw Error(ErrorCode::Parameter,
                "r must satisfy r = 2 (mod 4), got " + std::to_string(r));
  }
  const EllParity parity = check_ell_even(r);
  if (!parity.even) {
    throw Error(ErrorCode::Parameter, "l = " + parity.ell.get_str() + " is odd for r = " + std::to_string(r));
  }
  if (!parity.ell.fits_ulong_p() || parity.ell > 4096) {
    throw Error(ErrorCode::SizeGuard, "middle layer of " + parity.ell.get_str() + " vertices is too large");
  }
  DblExpInstance inst;
  inst.r = r;
  inst.ell = parity.ell.get_ui();
  const BigInt outer = binomial(inst.ell, inst.ell / 2);
  if (outer > max_outer) {
    throw Error(ErrorCode::SizeGuard, "|W| = binom(" + std::to_string(inst.ell) + ", " +
                                          std::to_string(inst.ell / 2) + ") = " +
                                          (outer.get_str().size() > 40 ? std::to_string(outer.get_str().size()) + "-digit number"
                                                                       : outer.get_str()) +
                                          " exceeds max_outer = " + max_outer.get_str() +
                                          "; raise --max-outer to at least that value");
  }
  const BigInt bound = BigInt(static_cast<unsigned long>(r * r * inst.ell)) * outer;
  if (alpha) {
    if (!(*alpha > Weight(bound, 1))) {
      throw Error(ErrorCode::Parameter, "alpha must exceed r^2 l |W| = " + bound.get_str());
    }
    inst.alpha = *alpha;
  } else {
    inst.alpha = Weight(BigInt(bound + 1), 1);
  }

  const std::size_t nq = 2 * r + 1;
  inst.middle_subsets = combinations(nq, r);
  inst.outer_subsets = combinations(inst.ell, inst.ell / 2);

  std::vector<std::string> labels{"x"};
  for (std::size_t i = 0; i < nq; ++i) labels.push_back("q" + std::to_string(i + 1));
  for (const auto& s : inst.middle_subsets) labels.push_back(subset_label('u', s));
  for (const auto& z : inst.outer_subsets) labels.push_back(subset_label('w', z));

  inst.x = 0;
  for (std::size_t i = 0; i < nq; ++i) inst.q.push_back(1 + i);
  for (std::size_t i = 0; i < inst.middle_subsets.size(); ++i) inst.u.push_back(1 + nq + i);
  for (std::size_t i = 0; i < inst.outer_subsets.size(); ++i) {
    inst.w.push_back(1 + nq + inst.middle_subsets.size() + i);
  }

  std::vector<Edge> edges;
  const Weight heavy = inst.heavy_cost();
  for (std::size_t i = 0; i < inst.u.size(); ++i) {
    for (std::size_t j = 0; j < nq; ++j) {
      edges.push_back(Edge{inst.u[i], inst.q[j], member(inst.middle_subsets[i], j) ? heavy : inst.alpha});
    }
  }
  for (std::size_t z = 0; z < inst.w.size(); ++z) {
    for (std::size_t i = 0; i < inst.u.size(); ++i) {
      edges.push_back(Edge{inst.u[i], inst.w[z], Weight(member(inst.outer_subsets[z], i) ? 1 : 0)});
    }
  }
  const Weight xw = inst.outer_cost();
  for (VertexId wz : inst.w) edges.push_back(Edge{inst.x, wz, xw});

  std::vector<VertexId> terminals{inst.x};
  terminals.insert(terminals.end(), inst.q.begin(), inst.q.end());
  inst.graph = TerminalGraph(std::move(labels), std::move(terminals), std::move(edges));

  // Total weight at W stays below alpha / r^2.
  Weight at_w;
  for (const Edge& e : inst.graph.edges()) {
    if (e.u >= inst.w.front() || e.v >= inst.w.front()) at_w += e.weight;
  }
  const long rr = static_cast<long>(r);
  if (!(at_w.value() * rr * rr < inst.alpha.value())) {
    throw Error(ErrorCode::Construction, "weight at W is not below alpha / r^2");
  }
  return inst;
}

DblExpInstance adopt_dblexp(TerminalGraph graph, std::size_t r, const Weight& alpha) {
  const EllParity parity = check_ell_even(r);
  if (!parity.ell.fits_ulong_p() || parity.ell > 4096) {
    throw Error(ErrorCode::SizeGuard, "middle layer too large");
  }
  const std::size_t ell = parity.ell.get_ui();
  DblExpInstance inst = generate_dblexp(r, alpha, binomial(ell, ell / 2));
  const TerminalGraph& ref = inst.graph;
  bool same = ref.vertex_count() == graph.vertex_count() && ref.edge_count() == graph.edge_count() &&
              std::equal(ref.terminals().begin(), ref.terminals().end(), graph.terminals().begin(),
                         graph.terminals().end());
  for (VertexId v = 0; same && v < ref.vertex_count(); ++v) same = ref.label(v) == graph.label(v);
  for (EdgeId e = 0; same && e < ref.edge_count(); ++e) {
    const Edge& a = ref.edge(e);
    const Edge& b = graph.edge(e);
    same = a.weight == b.weight &&
           ((a.u == b.u && a.v == b.v) || (a.u == b.v && a.v == b.u));
  }
  if (!same) {
    throw Error(ErrorCode::Construction,
                "graph does not match the construction for r = " + std::to_string(r));
  }
  inst.graph = std::move(graph);
  return inst;
}

Rational balance(const DblExpInstance& inst, const std::vector<std::size_t>& s0,
                 const std::vector<std::size_t>& s_prime) {
  const std::size_t nq = 2 * inst.r + 1;
  auto valid = [&](const std::vector<std::size_t>& s) {
    if (s.size() != inst.r || !std::is_sorted(s.begin(), s.end())) return false;
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
    return std::all_of(s.begin(), s.end(), [&](std::size_t i) { return i < nq; });
  };
  if (!valid(s0) || !valid(s_prime)) {
    throw Error(ErrorCode::Parameter, "subsets must be sorted r-subsets of Q_0");
  }
  const Rational heavy = inst.heavy_cost().value();
  Rational out = 0;
  for (std::size_t j = 0; j < nq; ++j) {
    const Rational cost = member(s_prime, j) ? heavy : inst.alpha.value();
    if (member(s0, j)) {
      out += cost;
    } else {
      out -= cost;
    }
  }
  return out;
}

bool is_important(const DblExpInstance& inst, const Bipartition& b) {
  return b.terminal_count == inst.k() &&
         static_cast<std::size_t>(std::popcount(b.members)) == inst.r;
}

std::size_t important_middle_index(const DblExpInstance& inst, const Bipartition& b) {
  if (!is_important(inst, b)) throw Error(ErrorCode::Parameter, "bipartition is not important");
  std::vector<std::size_t> s0;
  for (std::size_t j = 0; j + 1 < inst.k(); ++j) {
    if (b.contains(j + 1)) s0.push_back(j);
  }
  const auto it = std::lower_bound(inst.middle_subsets.begin(), inst.middle_subsets.end(), s0);
  return static_cast<std::size_t>(it - inst.middle_subsets.begin());
}

VerificationReport verify_dblexp_structure(const DblExpInstance& inst) {
  VerificationReport report;
  report.check = "size, cost table and weight totals of the doubly exponential instance";
  report.parameters = "dblexp r=" + std::to_string(inst.r) + " alpha=" + inst.alpha.to_string();
  const TerminalGraph& g = inst.graph;
  const std::size_t nq = 2 * inst.r + 1;
  const BigInt ell = check_ell_even(inst.r).ell;
  const BigInt outer = binomial(inst.ell, inst.ell / 2);

  report.expect(BigInt(static_cast<unsigned long>(inst.ell)) == ell && inst.ell % 2 == 0,
                "l = " + std::to_string(inst.ell) + " is not binom(2r+1, r) or is odd");
  report.expect(inst.u.size() == inst.ell, "|U| differs from l");
  report.expect(BigInt(static_cast<unsigned long>(inst.w.size())) == outer, "|W| differs from binom(l, l/2)");
  report.expect(g.vertex_count() == 1 + nq + inst.u.size() + inst.w.size(), "vertex count");
  report.expect(g.edge_count() == inst.u.size() * nq + inst.w.size() * inst.u.size() + inst.w.size(),
                "edge count");
  report.note(std::to_string(g.vertex_count()) + " vertices (" + std::to_string(nq) + " + 1 + " +
              std::to_string(inst.u.size()) + " + " + std::to_string(inst.w.size()) + "), " +
              std::to_string(g.edge_count()) + " edges");

  // |W| >= 2^l / l
  report.expect(outer * static_cast<unsigned long>(inst.ell) >= BigInt(1) << static_cast<mp_bitcnt_t>(inst.ell),
                "|W| < 2^l / l");

  const Weight heavy = inst.heavy_cost();
  const Weight unit(1);
  const Weight zero(0);
  const Weight xw = inst.outer_cost();
  std::size_t bad = 0;
  std::vector<std::size_t> unit_edges(g.vertex_count(), 0);
  Weight at_w;
  for (const Edge& e : g.edges()) {
    const VertexId a = std::min(e.u, e.v);
    const VertexId b = std::max(e.u, e.v);
    if (a == inst.x) {
      if (e.weight != xw) ++bad;
      at_w += e.weight;
    } else if (a <= nq) {
      const std::size_t qi = a - 1;
      const std::size_t ui = b - inst.u.front();
      if (e.weight != (member(inst.middle_subsets[ui], qi) ? heavy : inst.alpha)) ++bad;
    } else {
      const std::size_t ui = a - inst.u.front();
      const std::size_t zi = b - inst.w.front();
      if (e.weight != (member(inst.outer_subsets[zi], ui) ? unit : zero)) ++bad;
      if (e.weight == unit) ++unit_edges[b];
      at_w += e.weight;
    }
  }
  report.expect(bad == 0, std::to_string(bad) + " edges with the wrong cost");
  const std::size_t half = inst.ell / 2;
  report.expect(std::all_of(inst.w.begin(), inst.w.end(), [&](VertexId wz) { return unit_edges[wz] == half; }),
                "some w_Z does not have exactly l/2 unit edges");
  const long rr = static_cast<long>(inst.r);
  report.expect(at_w.value() * rr * rr < inst.alpha.value(), "weight at W is not below alpha / r^2");
  report.expect(inst.alpha > Weight(BigInt(static_cast<unsigned long>(inst.r * inst.r * inst.ell)) * outer, 1),
                "alpha does not exceed r^2 l |W|");
  report.note("total weight at W: " + at_w.to_string() + " < alpha / r^2");
  std::size_t important = 0;
  for (const auto& b : enumerate_bipartitions(inst.k())) {
    if (is_important(inst, b)) ++important;
  }
  report.expect(important == inst.ell, "number of important sets differs from l");
  report.note(std::to_string(important) + " important sets");
  return report;
}

VerificationReport verify_side_assignment(const DblExpInstance& inst, Parallelism p) {
  VerificationReport report;
  report.check = "w_Z sides with S iff u_{S0} lies in Z, for every important S";
  report.parameters = "dblexp r=" + std::to_string(inst.r) + " alpha=" + inst.alpha.to_string();
  const TerminalGraph& g = inst.graph;
  const std::size_t nq = 2 * inst.r + 1;
  const Rational alpha = inst.alpha.value();
  const long rr = static_cast<long>(inst.r);

  std::vector<Bipartition> important;
  for (const auto& b : enumerate_bipartitions(inst.k())) {
    if (is_important(inst, b)) important.push_back(b);
  }

  struct Outcome {
    std::size_t s0 = 0;
    Weight value;
    Rational oracle;
    std::vector<VertexId> u_on_s;
    std::size_t w_on_s = 0;
    std::vector<std::string> mismatches;
    bool unique = false;
  };
  std::vector<Outcome> outcomes(important.size());
  const CutEngine engine(g);
  const Rational xw = inst.outer_cost().value();
  parallel_for(important.size(), p, [&](std::size_t i) {
    Outcome& out = outcomes[i];
    const Bipartition& b = important[i];
    out.s0 = important_middle_index(inst, b);
    const CanonicalCut cut = engine.min_cut(b);
    out.value = cut.value;
    out.unique = cut.unique;
    for (std::size_t ui = 0; ui < inst.u.size(); ++ui) {
      if (cut.source_side[inst.u[ui]]) out.u_on_s.push_back(ui);
    }
    // Forced assignment: u_{S0} with S, every other u_{S'} against it, each
    // w_Z on its cheaper side.
    const auto& s0 = inst.middle_subsets[out.s0];
    Rational value = 0;
    for (std::size_t ui = 0; ui < inst.u.size(); ++ui) {
      for (std::size_t j = 0; j < nq; ++j) {
        const bool q_in_s = member(s0, j);
        if ((ui == out.s0) != q_in_s) {
          value += member(inst.middle_subsets[ui], j) ? inst.heavy_cost().value() : alpha;
        }
      }
    }
    for (std::size_t zi = 0; zi < inst.w.size(); ++zi) {
      const bool holds = member(inst.outer_subsets[zi], out.s0);
      const Rational half(static_cast<long>(inst.ell / 2));
      const Rational with_s = holds ? half - 1 : half;
      const Rational against = xw + (holds ? 1 : 0);
      value += std::min(with_s, against);
      const bool side = cut.source_side[inst.w[zi]];
      if (side) ++out.w_on_s;
      if (side != holds) {
        out.mismatches.push_back(g.label(inst.w[zi]) + (side ? " on S side" : " off S side"));
      }
    }
    out.oracle = value;
  });

  std::size_t decisions = 0;
  std::size_t wrong = 0;
  std::size_t lone_u = 0;
  for (const Outcome& out : outcomes) {
    const std::string name = q_set(inst.middle_subsets[out.s0]);
    decisions += inst.w.size();
    wrong += out.mismatches.size();
    const bool lone = out.u_on_s.size() == 1 && out.u_on_s.front() == out.s0;
    if (lone) ++lone_u;
    report.note("S0=" + name + ": value " + out.value.to_string() + ", forced-assignment value " +
                Weight(out.oracle).to_string() + ", U on S side " + std::to_string(out.u_on_s.size()) +
                ", W on S side " + std::to_string(out.w_on_s) + "/" + std::to_string(inst.w.size()) +
                ", unique " + (out.unique ? "yes" : "no"));
    report.expect(lone, "S0=" + name + ": U vertices on the S side differ from {u_S0}");
    report.expect(out.value == Weight(out.oracle),
                  "S0=" + name + ": cut value differs from the forced-assignment value");
    for (std::size_t i = 0; i < out.mismatches.size() && i < 5; ++i) {
      report.fail("S0=" + name + ": " + out.mismatches[i]);
    }

    const auto& s0 = inst.middle_subsets[out.s0];
    for (std::size_t ui = 0; ui < inst.middle_subsets.size(); ++ui) {
      const Rational beta = balance(inst, s0, inst.middle_subsets[ui]);
      if (ui == out.s0) {
        report.expect(beta == alpha / rr, "S0=" + name + ": balance of u_S0 is not alpha/r");
      } else {
        report.expect(beta < -alpha / (rr * rr),
                      "S0=" + name + ": balance of " + g.label(inst.u[ui]) + " is not below -alpha/r^2");
      }
    }
  }
  const std::size_t half = inst.ell / 2;
  report.note("w_Z with u_S0 in Z: S side costs " + std::to_string(half - 1) + ", other side " +
              std::to_string(half));
  report.note("w_Z with u_S0 not in Z: S side costs " + std::to_string(half) + ", other side " +
              std::to_string(half - 1));
  report.note(std::to_string(important.size()) + " important sets, " + std::to_string(decisions) +
              " w_Z decisions, " + std::to_string(wrong) + " mismatches");
  report.note("u_S0 is the only U vertex on the S side in " + std::to_string(lone_u) + "/" +
              std::to_string(important.size()) + " cuts");
  return report;
}

std::vector<std::pair<VertexId, VertexId>> sample_pairs(const DblExpInstance& inst,
                                                        std::uint64_t seed, std::size_t pairs,
                                                        std::size_t outer_pairs) {
  const TerminalGraph& g = inst.graph;
  const std::size_t n = g.vertex_count();
  std::mt19937_64 rng(seed);
  std::set<std::pair<VertexId, VertexId>> seen;
  std::vector<std::pair<VertexId, VertexId>> out;
  auto take = [&](VertexId a, VertexId b) {
    if (a == b || (g.is_terminal(a) && g.is_terminal(b))) return false;
    const auto key = std::minmax(a, b);
    if (!seen.insert(key).second) return false;
    out.emplace_back(key.first, key.second);
    return true;
  };
  const std::size_t eligible = n * (n - 1) / 2 - g.terminal_count() * (g.terminal_count() - 1) / 2;
  pairs = std::min(pairs, eligible);
  while (out.size() < pairs) take(rng() % n, rng() % n);
  const std::size_t nw = inst.w.size();
  const std::size_t wanted = std::min(outer_pairs, nw * (nw - 1) / 2);
  std::size_t added = 0;
  while (added < wanted) {
    if (take(inst.w[rng() % nw], inst.w[rng() % nw])) ++added;
  }
  return out;
}

VerificationReport verify_incompressibility(const DblExpInstance& inst,
                                            const IncompressibilityOptions& options) {
  VerificationReport report;
  report.check = "no two vertices can be identified without raising some minimum cut";
  report.parameters = "dblexp r=" + std::to_string(inst.r) + " mode=" +
                      (options.mode == PairMode::Full ? "full" : "sampled") +
                      " seed=" + std::to_string(options.seed);
  const TerminalGraph& g = inst.graph;
  const CutProfile profile = cut_profile(g, options.parallelism);
  const auto sides = side_vectors(g, profile);

  std::map<SideVector, VertexId> first;
  std::size_t collisions = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto [it, fresh] = first.emplace(sides[v], v);
    if (!fresh) {
      ++collisions;
      if (collisions <= 5) report.fail(g.label(it->second) + " and " + g.label(v) + " share a side vector");
    }
  }
  report.note(std::to_string(first.size()) + " distinct side vectors over " +
              std::to_string(profile.size()) + " bipartitions for " + std::to_string(g.vertex_count()) +
              " vertices");

  std::vector<std::pair<VertexId, VertexId>> pairs;
  if (options.mode == PairMode::Full) {
    for (VertexId a = 0; a < g.vertex_count(); ++a) {
      for (VertexId b = a + 1; b < g.vertex_count(); ++b) {
        if (!(g.is_terminal(a) && g.is_terminal(b))) pairs.emplace_back(a, b);
      }
    }
  } else {
    pairs = sample_pairs(inst, options.seed, options.sample_pairs, options.sample_outer_pairs);
  }

  std::vector<std::uint8_t> mergeable(pairs.size(), 0);
  std::atomic<std::size_t> done{0};
  std::mutex progress_lock;
  parallel_for(pairs.size(), options.parallelism, [&](std::size_t i) {
    mergeable[i] = mergeability_test(g, profile, pairs[i].first, pairs[i].second) ? 1 : 0;
    const std::size_t d = ++done;
    if (options.progress && (d % 100 == 0 || d == pairs.size())) {
      std::lock_guard lock(progress_lock);
      options.progress(d, pairs.size());
    }
  });

  const auto in_w = [&](VertexId v) { return v >= inst.w.front(); };
  std::size_t ww = 0;
  std::size_t uu = 0;
  std::size_t bad = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [a, b] = pairs[i];
    if (in_w(a) && in_w(b)) ++ww;
    if (!g.is_terminal(a) && !in_w(a) && !g.is_terminal(b) && !in_w(b)) ++uu;
    if (mergeable[i]) {
      ++bad;
      if (bad <= 10) report.fail(g.label(a) + " and " + g.label(b) + " can be merged");
    }
  }
  report.note("pairs tested: " + std::to_string(pairs.size()) + " (W x W: " + std::to_string(ww) +
              ", U x U: " + std::to_string(uu) + ")");
  report.note("mergeable pairs: " + std::to_string(bad));
  return report;
}

}  // namespace mimicnet
