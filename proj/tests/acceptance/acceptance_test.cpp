// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mimicnet/cut_engine.hpp"
#include "mimicnet/dblexp_instance.hpp"
#include "mimicnet/incidence.hpp"
#include "mimicnet/planar_instance.hpp"
#include "mimicnet/profile.hpp"
#include "support/random_graphs.hpp"

namespace {

using namespace mimicnet;

struct Outcome {
  bool passed = true;
  std::string detail;

  void fail(const std::string& what) {
    if (passed) detail = what;
    passed = false;
  }
  void require(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
};

std::size_t pow2(std::size_t e) { return std::size_t{1} << e; }

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

void require_report(Outcome& out, const VerificationReport& r, const std::string& where) {
  if (!r.passed()) out.fail(where + ": " + r.failures.front());
}

// Weight of an important cycle from the crossing pattern alone.
BigInt cycle_weight_formula(const PlanarInstance& inst, const std::string& s) {
  const std::string leaf(s.rbegin(), s.rend());
  BigInt total = inst.weights.big.numerator() * static_cast<unsigned long>(inst.k);
  for (std::size_t j = 1; j + 2 <= inst.k; ++j) {
    const std::string index = leaf.substr(leaf.size() - j);
    std::size_t a = 0;
    for (char c : index.substr(1)) a = 2 * a + (c == '1');
    const std::size_t crossings = index[0] == '0' ? a : pow2(j - 1) - 1 - a;
    total += inst.weights.c[j].numerator() * static_cast<unsigned long>(crossings);
  }
  return total;
}

Outcome ac1_unique_cycles() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t k = 3; k <= 6; ++k) {
    const PlanarInstance inst = generate_planar_dual(k);
    require_report(out, verify_unique_cycles(inst), "k=" + std::to_string(k));
    const CutProfile p = cut_profile(inst.primal);
    std::size_t important = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (!is_important(p.bipartitions[i])) continue;
      ++important;
      const Signature s = signature_of(p.bipartitions[i]);
      auto cycle = important_cycle(inst, s);
      std::sort(cycle.begin(), cycle.end());
      const std::string where = "k=" + std::to_string(k) + " s=" + s.str();
      out.require(p.cuts[i].unique, where + " cut not unique");
      out.require(p.cuts[i].crossing_edges == cycle, where + " cut differs from cycle");
      out.require(p.cuts[i].value == Weight(cycle_weight_formula(inst, s.str()), 1),
                  where + " value differs from crossing formula");
    }
    out.require(important == pow2(k - 2), "k=" + std::to_string(k) + " important count");
  }
  const double t = seconds_since(start);
  out.require(t < 60.0, "took " + fmt_seconds(t));
  if (out.passed) out.detail = "k=3..6, all 2^(k-2) important cuts unique and equal to their cycles (" + fmt_seconds(t) + ")";
  return out;
}

Outcome ac2_rank_certificate() {
  Outcome out;
  std::ostringstream ranks;
  for (std::size_t k = 3; k <= 6; ++k) {
    const PlanarInstance inst = generate_planar_dual(k);
    require_report(out, verify_rank_certificate(inst), "k=" + std::to_string(k));
    const CutProfile p = cut_profile(inst.primal);
    const std::size_t important = exact_rank(build_incidence_matrix(inst.primal, p, RowMode::ImportantOnly, true));
    const std::size_t unique = exact_rank(build_incidence_matrix(inst.primal, p, RowMode::UniqueOnly));
    out.require(important == pow2(k - 2), "k=" + std::to_string(k) + " important rank " + std::to_string(important));
    out.require(unique >= pow2(k - 2), "k=" + std::to_string(k) + " unique rank " + std::to_string(unique));
    ranks << " k=" << k << ":" << important << "/" << unique;
  }
  if (out.passed) out.detail = "identity submatrix and exact ranks (important/unique)" + ranks.str();
  return out;
}

Outcome ac3_claim_paths() {
  Outcome out;
  for (std::size_t k = 3; k <= 6; ++k) {
    require_report(out, verify_claim_paths(generate_planar_dual(k)), "k=" + std::to_string(k));
  }
  if (out.passed) out.detail = "k=3..6, k edge-disjoint heavy paths with lengths 1,2,..,2^(k-2),2^(k-2), halves split at f_i";
  return out;
}

// Every weight class below C outweighs all strictly lighter edges together,
// and C outweighs every non-C edge together.
void check_hierarchy(Outcome& out, const PlanarInstance& inst) {
  std::vector<Weight> sorted = inst.dual_weights;
  std::sort(sorted.begin(), sorted.end());
  Rational lighter = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i == 0 || sorted[i] != sorted[i - 1]) {
      out.require(sorted[i].value() > lighter,
                  "k=" + std::to_string(inst.k) + " weight " + sorted[i].to_string() + " not above lighter total");
    }
    lighter += sorted[i].value();
  }
  out.require(sorted.back() == inst.weights.big, "k=" + std::to_string(inst.k) + " heaviest edge is not C");
}

Outcome ac4_hierarchy() {
  Outcome out;
  for (std::size_t k = 3; k <= 8; ++k) {
    const PlanarInstance inst = generate_planar_dual(k);
    require_report(out, verify_structure(inst), "k=" + std::to_string(k));
    check_hierarchy(out, inst);
    std::size_t total = 0;
    for (std::size_t i = 1; i + 3 <= k; ++i) total += pow2(i) * (pow2(i) - 1) / 2;
    out.require(inst.crossings.size() == total, "k=" + std::to_string(k) + " crossing total");
  }
  if (out.passed) out.detail = "k=3..8, weight hierarchy and per-strip crossing counts hold";
  return out;
}

Outcome ac5_side_assignment(const DblExpInstance& inst) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  require_report(out, verify_side_assignment(inst), "r=2");
  const CutProfile p = cut_profile(inst.graph);
  std::size_t checks = 0;
  std::size_t important = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!is_important(inst, p.bipartitions[i])) continue;
    ++important;
    const std::size_t s0 = important_middle_index(inst, p.bipartitions[i]);
    const VertexSet& side = p.cuts[i].source_side;
    for (std::size_t j = 0; j < inst.u.size(); ++j) {
      out.require(side[inst.u[j]] == (j == s0), "u side wrong for S0 #" + std::to_string(s0));
    }
    for (std::size_t z = 0; z < inst.w.size(); ++z) {
      const auto& members = inst.outer_subsets[z];
      const bool in_z = std::find(members.begin(), members.end(), s0) != members.end();
      out.require(side[inst.w[z]] == in_z, "w side wrong for S0 #" + std::to_string(s0));
      ++checks;
    }
    out.require(p.cuts[i].unique, "important cut not unique");
  }
  out.require(important == 10, "important sets: " + std::to_string(important));
  out.require(checks == 2520, "w checks: " + std::to_string(checks));
  const double t = seconds_since(start);
  out.require(t < 60.0, "took " + fmt_seconds(t));
  if (out.passed) out.detail = "r=2, 10 important sets x 252 w_Z sides exact, u_S0 alone on the S side (" + fmt_seconds(t) + ")";
  return out;
}

Outcome ac6_incompressibility(const DblExpInstance& inst) {
  Outcome out;
  const CutProfile p = cut_profile(inst.graph);
  const auto vectors = side_vectors(inst.graph, p);
  const std::set<SideVector> distinct(vectors.begin(), vectors.end());
  out.require(p.size() == 31, "bipartitions: " + std::to_string(p.size()));
  out.require(vectors.size() == 268 && distinct.size() == 268,
              "distinct side vectors: " + std::to_string(distinct.size()));

  const auto pairs = sample_pairs(inst, 0, 500, 20);
  const std::set<VertexId> outer(inst.w.begin(), inst.w.end());
  std::size_t outer_pairs = 0;
  for (const auto& [a, b] : pairs) outer_pairs += outer.count(a) && outer.count(b) ? 1 : 0;
  out.require(pairs.size() >= 500, "sampled pairs: " + std::to_string(pairs.size()));
  out.require(outer_pairs >= 20, "W x W pairs: " + std::to_string(outer_pairs));

  IncompressibilityOptions options;
  options.seed = 0;
  require_report(out, verify_incompressibility(inst, options), "sampled");
  if (out.passed) {
    out.detail = "268 distinct side vectors over 31 bipartitions; " + std::to_string(pairs.size()) +
                 " sampled pairs (" + std::to_string(outer_pairs) + " W x W), none mergeable";
  }
  return out;
}

Outcome ac7_compression_soundness() {
  Outcome out;
  std::size_t cuts = 0;
  std::size_t merges = 0;
  for (std::uint64_t seed = 0; seed < 1000 && out.passed; ++seed) {
    const TerminalGraph g = mimicnet::testing::random_graph(seed, {});
    const std::string where = "seed " + std::to_string(seed);
    const CutProfile p = cut_profile(g);
    for (std::size_t i = 0; i < p.size(); ++i) {
      out.require(p.cuts[i].value == brute_force_min_cut(g, p.bipartitions[i]).value, where + " min cut vs brute force");
      ++cuts;
    }
    const CompressionResult c = hagerup_compress(g);
    out.require(validate_mimicking(g, c.graph).passed(), where + " compressed graph fails validation");
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
      for (VertexId v = u + 1; v < g.vertex_count(); ++v) {
        if (g.is_terminal(u) && g.is_terminal(v)) continue;
        const CutProfile merged = cut_profile(merge_vertices(g, u, v));
        for (std::size_t i = 0; i < p.size(); ++i) {
          out.require(merged.cuts[i].value >= p.cuts[i].value, where + " merge lowered a cut");
        }
        ++merges;
      }
    }
  }
  if (out.passed) {
    out.detail = "1000 random graphs: compression validated, " + std::to_string(cuts) +
                 " cuts match brute force, " + std::to_string(merges) + " merges never lower a cut";
  }
  return out;
}

Outcome ac8_counts() {
  Outcome out;
  for (std::size_t k = 3; k <= 8; ++k) {
    const PlanarInstance inst = generate_planar_dual(k);
    for (std::size_t j = 1; j + 2 <= k; ++j) {
      const std::size_t expected = pow2(j - 1) * (pow2(j - 1) + 1);
      out.require(inst.layers[j].size() == expected,
                  "k=" + std::to_string(k) + " |E_" + std::to_string(j) + "| = " + std::to_string(inst.layers[j].size()));
    }
    const long euler = static_cast<long>(inst.dual.vertex_count()) - static_cast<long>(inst.dual.edge_count()) +
                       static_cast<long>(inst.dual.face_count());
    out.require(euler == 2, "k=" + std::to_string(k) + " V - E + F = " + std::to_string(euler));
    out.require(inst.primal.vertex_count() == inst.dual.face_count() &&
                    inst.primal.edge_count() == inst.dual.edge_count(),
                "k=" + std::to_string(k) + " primal size differs from faces/edges");
  }
  const WeightTable t = generate_planar_dual(4).weights;
  out.require(t.c[2] == Weight(1) && t.c[1] == Weight(6) && t.big == Weight(18),
              "k=4 table (c2, c1, C) = (" + t.c[2].to_string() + ", " + t.c[1].to_string() + ", " + t.big.to_string() + ")");
  if (out.passed) out.detail = "k=3..8 layer sizes 2^(j-1)(2^(j-1)+1), Euler holds, k=4 (c2, c1, C) = (1, 6, 18)";
  return out;
}

}  // namespace

int main() {
  const DblExpInstance dblexp = generate_dblexp(2);
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1 important minimum cuts are unique and equal the important cycles", ac1_unique_cycles},
      {"AC2 incidence rank certificate", ac2_rank_certificate},
      {"AC3 edge-disjoint heavy paths", ac3_claim_paths},
      {"AC4 weight hierarchy and crossing pattern", ac4_hierarchy},
      {"AC5 doubly exponential side assignment", [&] { return ac5_side_assignment(dblexp); }},
      {"AC6 doubly exponential incompressibility", [&] { return ac6_incompressibility(dblexp); }},
      {"AC7 compression soundness", ac7_compression_soundness},
      {"AC8 structural counts", ac8_counts},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::cout << (o.passed ? "[PASS] " : "[FAIL] ") << name << ": " << o.detail << std::endl;
    failed += o.passed ? 0 : 1;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
