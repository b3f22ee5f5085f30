#include "mimicnet/profile.hpp"

#include <algorithm>
#include <map>

#include "mimicnet/errors.hpp"

namespace mimicnet {

std::size_t CutProfile::unique_count() const {
  return static_cast<std::size_t>(
      std::count_if(cuts.begin(), cuts.end(), [](const CanonicalCut& c) { return c.unique; }));
}

CutProfile cut_profile(const TerminalGraph& g, Parallelism p) {
  if (!g.connected()) {
    throw Error(ErrorCode::Disconnected, "cut profile requires a connected graph");
  }
  CutProfile profile;
  profile.vertex_count = g.vertex_count();
  profile.edge_count = g.edge_count();
  profile.bipartitions = enumerate_bipartitions(g.terminal_count());
  profile.cuts.resize(profile.bipartitions.size());
  const CutEngine engine(g);
  parallel_for(profile.bipartitions.size(), p, [&](std::size_t i) {
    profile.cuts[i] = engine.min_cut(profile.bipartitions[i]);
  });
  return profile;
}

std::vector<SideVector> side_vectors(const TerminalGraph& g, const CutProfile& profile) {
  if (profile.vertex_count != g.vertex_count() || profile.edge_count != g.edge_count() ||
      profile.bipartitions.size() != bipartition_count(g.terminal_count())) {
    throw Error(ErrorCode::ProfileMismatch, "profile was not computed for this graph");
  }
  std::vector<SideVector> vectors(g.vertex_count(), SideVector(profile.size(), false));
  for (std::size_t i = 0; i < profile.size(); ++i) {
    const VertexSet& side = profile.cuts[i].source_side;
    for (VertexId v = 0; v < g.vertex_count(); ++v) vectors[v][i] = side[v];
  }
  return vectors;
}

CompressionResult hagerup_compress(const TerminalGraph& g, Parallelism p) {
  const CutProfile profile = cut_profile(g, p);
  const std::vector<SideVector> vectors = side_vectors(g, profile);

  std::map<SideVector, std::size_t> class_id;
  std::vector<std::size_t> class_of(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto [it, inserted] = class_id.try_emplace(vectors[v], class_id.size());
    class_of[v] = it->second;
  }

  std::vector<VertexId> reps;
  TerminalGraph out = contract_classes(g, class_of, &reps);
  std::vector<std::vector<VertexId>> classes(reps.size());
  std::vector<std::size_t> position(class_id.size());
  for (std::size_t i = 0; i < reps.size(); ++i) position[class_of[reps[i]]] = i;
  for (VertexId v = 0; v < g.vertex_count(); ++v) classes[position[class_of[v]]].push_back(v);
  return CompressionResult{std::move(out), std::move(classes)};
}

namespace {

void check_same_terminals(const TerminalGraph& g, const TerminalGraph& g2) {
  if (g.terminal_count() != g2.terminal_count()) {
    throw Error(ErrorCode::TerminalMismatch, "graphs have different terminal counts");
  }
  for (std::size_t i = 0; i < g.terminal_count(); ++i) {
    if (g.label(g.terminal(i)) != g2.label(g2.terminal(i))) {
      throw Error(ErrorCode::TerminalMismatch,
                  "terminal " + std::to_string(i) + " is '" + g.label(g.terminal(i)) +
                      "' in one graph and '" + g2.label(g2.terminal(i)) + "' in the other");
    }
  }
}

}  // namespace

MimickingReport validate_mimicking(const TerminalGraph& g, const TerminalGraph& g2,
                                   Parallelism p) {
  check_same_terminals(g, g2);
  const CutProfile a = cut_profile(g, p);
  const CutProfile b = cut_profile(g2, p);
  MimickingReport report;
  report.checked = a.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.cuts[i].value != b.cuts[i].value) {
      report.mismatches.push_back(CutMismatch{a.bipartitions[i], a.cuts[i].value, b.cuts[i].value});
    }
  }
  return report;
}

bool mergeability_test(const TerminalGraph& g, VertexId u, VertexId v) {
  return mergeability_test(g, cut_profile(g), u, v);
}

bool mergeability_test(const TerminalGraph& g, const CutProfile& profile, VertexId u,
                       VertexId v) {
  if (profile.vertex_count != g.vertex_count() || profile.edge_count != g.edge_count()) {
    throw Error(ErrorCode::ProfileMismatch, "profile was not computed for this graph");
  }
  const TerminalGraph merged = merge_vertices(g, u, v);
  const CutEngine engine(merged);
  for (std::size_t i = 0; i < profile.size(); ++i) {
    const VertexSet& side = profile.cuts[i].source_side;
    if (side[u] == side[v]) continue;
    if (engine.min_cut(profile.bipartitions[i]).value != profile.cuts[i].value) return false;
  }
  return true;
}

}  // namespace mimicnet
