#include "mimicnet/planar_instance.hpp"

#include <algorithm>
#include <set>

#include "mimicnet/errors.hpp"
#include "mimicnet/profile.hpp"

namespace mimicnet {

namespace {

// Hard ceiling on k regardless of the caller's bound; the drawing has
// Theta(4^k) crossings.
constexpr std::size_t kAbsoluteMaxK = 16;
// Shear denominator for the general-position fallback.
constexpr long kShearDenominator = 1L << 20;

BigInt pow2(std::size_t e) { return BigInt(1) << static_cast<mp_bitcnt_t>(e); }

std::string bit_string(std::size_t value, std::size_t width) {
  std::string s(width, '0');
  for (std::size_t i = 0; i < width; ++i) {
    if ((value >> (width - 1 - i)) & 1U) s[i] = '1';
  }
  return s;
}

std::size_t bit_value(const std::string& s) {
  std::size_t v = 0;
  for (char c : s) v = (v << 1) | (c == '1' ? 1U : 0U);
  return v;
}

// Position of rank r on meridian i: the first half of the layer sits north
// of the equator, the second half south, in index order.
long meridian_y(std::size_t layer, std::size_t rank) {
  if (layer == 0) return 0;
  const long half = 1L << (layer - 1);
  const long r = static_cast<long>(rank);
  return r < half ? half - r : half - 1 - r;
}

struct ConcurrentCrossings {};

struct Segment {
  std::size_t tree_edge = 0;  // position in tree_edges
  Point left;
  Point right;
};

struct Crossing {
  Point at;
  std::size_t strip = 0;
  std::size_t seg_a = 0;
  std::size_t seg_b = 0;
  Rational t_a;
  Rational t_b;
};

PlanarInstance build(std::size_t k, bool shear) {
  PlanarInstance inst;
  inst.k = k;
  inst.sheared = shear;
  inst.weights = planar_weight_table(k);

  auto place = [&](std::size_t x, long y) {
    Rational py(y);
    if (shear) py *= Rational(kShearDenominator + static_cast<long>(x), kShearDenominator);
    py.canonicalize();
    return Point{Rational(static_cast<long>(x)), py};
  };

  std::vector<Point> points;
  inst.root = 0;
  inst.branching[""] = 0;
  points.push_back(place(0, 0));
  for (std::size_t layer = 1; layer + 2 <= k; ++layer) {
    for (std::size_t r = 0; r < (std::size_t{1} << layer); ++r) {
      inst.branching[bit_string(r, layer)] = points.size();
      points.push_back(place(layer, meridian_y(layer, r)));
    }
  }
  inst.apex = points.size();
  points.push_back(place(k - 1, 0));

  // Tree edges by layer then child rank; segments per strip.
  std::vector<std::vector<Segment>> strips(k - 2);
  for (std::size_t layer = 1; layer + 2 <= k; ++layer) {
    const std::size_t strip = layer - 1;
    for (std::size_t cr = 0; cr < (std::size_t{1} << layer); ++cr) {
      TreeEdgeRecord rec;
      rec.index = bit_string(cr, layer);
      rec.layer = layer;
      rec.parent = inst.branching.at(rec.index.substr(1));
      rec.child = inst.branching.at(rec.index);
      strips[strip].push_back(Segment{inst.tree_edges.size(), points[rec.parent], points[rec.child]});
      inst.tree_edges.push_back(std::move(rec));
    }
  }

  std::vector<Crossing> crossings;
  for (std::size_t strip = 0; strip < strips.size(); ++strip) {
    const auto& segs = strips[strip];
    for (std::size_t a = 0; a < segs.size(); ++a) {
      for (std::size_t b = a + 1; b < segs.size(); ++b) {
        const Rational d0 = segs[a].left.y - segs[b].left.y;
        const Rational d1 = segs[a].right.y - segs[b].right.y;
        if (sgn(d0) * sgn(d1) >= 0) continue;
        Rational t = d0 / (d0 - d1);
        Rational x = segs[a].left.x + t * (segs[a].right.x - segs[a].left.x);
        Rational y = segs[a].left.y + t * (segs[a].right.y - segs[a].left.y);
        // Parameter along b is the same since both span the same x-range.
        crossings.push_back(Crossing{Point{x, y}, strip, segs[a].tree_edge, segs[b].tree_edge, t, t});
      }
    }
  }
  std::sort(crossings.begin(), crossings.end(),
            [](const Crossing& a, const Crossing& b) { return a.at < b.at; });
  for (std::size_t i = 0; i + 1 < crossings.size(); ++i) {
    if (crossings[i].at == crossings[i + 1].at) throw ConcurrentCrossings{};
  }

  // Crossing vertices follow the branching vertices.
  std::vector<std::vector<std::pair<Rational, VertexId>>> on_edge(inst.tree_edges.size());
  for (const Crossing& c : crossings) {
    const VertexId id = points.size();
    points.push_back(c.at);
    on_edge[c.seg_a].emplace_back(c.t_a, id);
    on_edge[c.seg_b].emplace_back(c.t_b, id);
    CrossingRecord rec{id, c.strip, inst.tree_edges[c.seg_a].index, inst.tree_edges[c.seg_b].index};
    if (rec.zero_child.front() == '1' && rec.one_child.front() == '0') {
      std::swap(rec.zero_child, rec.one_child);
    }
    inst.crossings.push_back(std::move(rec));
  }

  std::vector<PlaneEdge> edges;
  inst.layers.assign(k, {});
  const Rational y_top = Rational(pow2(k - 2) + static_cast<long>(k));
  inst.apex_edge = 0;
  edges.push_back(PlaneEdge{inst.root, inst.apex,
                            {Point{points[inst.root].x, y_top}, Point{points[inst.apex].x, y_top}}});
  inst.dual_weights.push_back(inst.weights.big);
  inst.layers[0].push_back(0);

  for (std::size_t t = 0; t < inst.tree_edges.size(); ++t) {
    TreeEdgeRecord& rec = inst.tree_edges[t];
    auto& stops = on_edge[t];
    std::sort(stops.begin(), stops.end());
    VertexId prev = rec.parent;
    for (std::size_t s = 0; s <= stops.size(); ++s) {
      const VertexId next = s < stops.size() ? stops[s].second : rec.child;
      rec.pieces.push_back(edges.size());
      inst.layers[rec.layer].push_back(edges.size());
      edges.push_back(PlaneEdge{prev, next, {}});
      inst.dual_weights.push_back(s == stops.size() ? inst.weights.big : inst.weights.c[rec.layer]);
      prev = next;
    }
  }

  const std::size_t leaves = std::size_t{1} << (k - 2);
  for (std::size_t r = 0; r < leaves; ++r) {
    const VertexId leaf = inst.branching.at(bit_string(r, k - 2));
    inst.fan_edges.push_back(edges.size());
    inst.layers[k - 1].push_back(edges.size());
    edges.push_back(PlaneEdge{leaf, inst.apex, {}});
    inst.dual_weights.push_back(inst.weights.big);
  }

  inst.dual = PlaneGraph(std::move(points), std::move(edges));
  inst.dual.trace_faces();

  inst.south_face = inst.dual.outer_face();
  inst.north_face = inst.dual.face_containing(Point{Rational(1, 2), y_top - Rational(1, 2)});
  for (std::size_t i = 1; i + 2 <= k; ++i) {
    inst.equator_faces.push_back(inst.dual.face_containing(Point{Rational(static_cast<long>(i)), 0}));
  }

  std::vector<std::size_t> terminal_faces{inst.north_face, inst.south_face};
  terminal_faces.insert(terminal_faces.end(), inst.equator_faces.begin(), inst.equator_faces.end());
  if (std::set<std::size_t>(terminal_faces.begin(), terminal_faces.end()).size() != k) {
    throw Error(ErrorCode::Construction, "terminal faces are not pairwise distinct");
  }
  std::vector<std::string> labels{"fn", "fs"};
  for (std::size_t i = 1; i + 2 <= k; ++i) labels.push_back("f" + std::to_string(i));

  DualGraph dual = compute_dual(inst.dual, inst.dual_weights, terminal_faces, labels);
  inst.primal = std::move(dual.graph);
  inst.face_of_primal = std::move(dual.face_of_vertex);
  inst.primal_of_face = std::move(dual.vertex_of_face);
  return inst;
}

// Vertices strictly inside a subdivided tree edge, parent to child.
std::vector<VertexId> interior_vertices(const PlanarInstance& inst, const TreeEdgeRecord& rec) {
  std::vector<VertexId> out;
  VertexId at = rec.parent;
  for (std::size_t i = 0; i + 1 < rec.pieces.size(); ++i) {
    const PlaneEdge& e = inst.dual.edge(rec.pieces[i]);
    at = e.u == at ? e.v : e.u;
    out.push_back(at);
  }
  return out;
}

}  // namespace

BigInt expected_layer_size(std::size_t j, std::size_t k) {
  if (k < 3 || j >= k) throw Error(ErrorCode::Parameter, "layer index out of range");
  if (j == 0) return 1;
  if (j == k - 1) return pow2(k - 2);
  return pow2(j - 1) * (pow2(j - 1) + 1);
}

WeightTable planar_weight_table(std::size_t k) {
  if (k < 3) throw Error(ErrorCode::Parameter, "planar instance needs k >= 3");
  WeightTable table;
  table.c.assign(k - 1, Weight{});
  table.c[k - 2] = Weight(1);
  for (std::size_t i = k - 2; i-- > 1;) {
    BigInt sum = 0;
    for (std::size_t j = i + 1; j <= k - 2; ++j) {
      sum += expected_layer_size(j, k) * table.c[j].numerator();
    }
    table.c[i] = Weight(sum, 1);
  }
  BigInt big = 0;
  for (std::size_t j = 1; j <= k - 2; ++j) big += expected_layer_size(j, k) * table.c[j].numerator();
  table.big = Weight(big, 1);
  return table;
}

BigInt Signature::dec() const {
  BigInt v = 0;
  for (bool b : bits) v = v * 2 + (b ? 1 : 0);
  return v;
}

Signature Signature::reversed() const { return Signature{{bits.rbegin(), bits.rend()}}; }

std::string Signature::str() const {
  std::string s;
  for (bool b : bits) s.push_back(b ? '1' : '0');
  return s;
}

Signature Signature::parse(const std::string& text) {
  Signature s;
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw Error(ErrorCode::Parameter, "malformed signature '" + text + "'");
    }
    s.bits.push_back(c == '1');
  }
  return s;
}

const TreeEdgeRecord& PlanarInstance::tree_edge(const std::string& index) const {
  if (index.empty() || index.size() + 2 > k) {
    throw Error(ErrorCode::NotFound, "no tree edge with index '" + index + "'");
  }
  const std::size_t layer = index.size();
  const std::size_t pos = (std::size_t{1} << layer) - 2 + bit_value(index);
  return tree_edges.at(pos);
}

PlanarInstance generate_planar_dual(std::size_t k, std::size_t max_k) {
  if (k < 3 || k > std::min(max_k, kAbsoluteMaxK)) {
    throw Error(ErrorCode::Parameter, "k must lie in [3, " +
                                          std::to_string(std::min(max_k, kAbsoluteMaxK)) +
                                          "], got " + std::to_string(k));
  }
  try {
    return build(k, false);
  } catch (const ConcurrentCrossings&) {
  }
  try {
    return build(k, true);
  } catch (const ConcurrentCrossings&) {
    throw Error(ErrorCode::Construction,
                "three or more edges cross at one point even after shearing (k=" +
                    std::to_string(k) + ")");
  }
}

bool is_important(const Bipartition& b) { return b.terminal_count >= 3 && !b.contains(1); }

Signature signature_of(const Bipartition& b) {
  Signature s;
  for (std::size_t i = 1; i + 2 <= b.terminal_count; ++i) s.bits.push_back(b.contains(i + 1));
  return s;
}

Bipartition important_bipartition(const Signature& s) {
  Bipartition b{0, s.bits.size() + 2};
  for (std::size_t i = 1; i <= s.bits.size(); ++i) {
    if (s.bits[i - 1]) b.members |= std::uint64_t{1} << i;
  }
  return b;
}

std::vector<EdgeId> important_cycle(const PlanarInstance& inst, const Signature& s) {
  if (s.bits.size() + 2 != inst.k) {
    throw Error(ErrorCode::Parameter, "signature must have k-2 = " + std::to_string(inst.k - 2) +
                                          " bits, got '" + s.str() + "'");
  }
  const std::string leaf = s.reversed().str();
  std::vector<EdgeId> cycle{inst.apex_edge};
  for (std::size_t layer = 1; layer <= leaf.size(); ++layer) {
    const auto& rec = inst.tree_edge(leaf.substr(leaf.size() - layer));
    cycle.insert(cycle.end(), rec.pieces.begin(), rec.pieces.end());
  }
  cycle.push_back(inst.fan_edges.at(bit_value(leaf)));

  std::map<VertexId, std::vector<EdgeId>> touching;
  std::size_t heavy = 0;
  for (EdgeId e : cycle) {
    touching[inst.dual.edge(e).u].push_back(e);
    touching[inst.dual.edge(e).v].push_back(e);
    if (inst.dual_weights[e] == inst.weights.big) ++heavy;
  }
  for (const auto& [v, es] : touching) {
    if (es.size() != 2) {
      throw Error(ErrorCode::Construction, "important cycle " + s.str() + " has a vertex of degree " +
                                               std::to_string(es.size()));
    }
  }
  // Degree 2 everywhere plus one connected walk covering all edges means a
  // single simple cycle.
  std::set<EdgeId> walked;
  VertexId at = inst.dual.edge(cycle.front()).u;
  EdgeId via = cycle.front();
  while (walked.insert(via).second) {
    const PlaneEdge& e = inst.dual.edge(via);
    at = e.u == at ? e.v : e.u;
    const auto& es = touching[at];
    via = es[0] == via ? es[1] : es[0];
  }
  if (walked.size() != cycle.size()) {
    throw Error(ErrorCode::Construction, "important cycle " + s.str() + " is not a single cycle");
  }
  if (heavy != inst.k) {
    throw Error(ErrorCode::Construction, "important cycle " + s.str() + " has " +
                                             std::to_string(heavy) + " weight-C edges, expected " +
                                             std::to_string(inst.k));
  }
  return cycle;
}

Weight edge_set_weight(const PlanarInstance& inst, const std::vector<EdgeId>& edges) {
  Weight total;
  for (EdgeId e : edges) total += inst.dual_weights.at(e);
  return total;
}

VerificationReport verify_claim_paths(const PlanarInstance& inst) {
  VerificationReport report;
  report.check = "k edge-disjoint north-to-south paths made of weight-C primal edges";
  report.parameters = "planar k=" + std::to_string(inst.k);
  const std::size_t k = inst.k;
  const TerminalGraph& g = inst.primal;
  const VertexId north = g.terminal(0);
  const VertexId south = g.terminal(1);

  std::vector<std::vector<EdgeId>> paths(k);
  paths[0] = {inst.apex_edge};
  for (std::size_t i = 1; i + 2 <= k; ++i) {
    for (std::size_t r = 0; r < (std::size_t{1} << i); ++r) {
      paths[i].push_back(inst.tree_edge(bit_string(r, i)).pieces.back());
    }
  }
  paths[k - 1] = inst.fan_edges;

  std::set<EdgeId> used;
  std::size_t total = 0;
  std::string lengths;
  for (std::size_t i = 0; i < k; ++i) {
    const auto& path = paths[i];
    const std::string name = "pi_" + std::to_string(i);
    const std::size_t expected = i + 1 == k ? (std::size_t{1} << (k - 2)) : (std::size_t{1} << i);
    report.expect(path.size() == expected, name + " has " + std::to_string(path.size()) +
                                               " edges, expected " + std::to_string(expected));
    lengths += (i ? "," : "") + std::to_string(path.size());

    std::vector<VertexId> visited{north};
    VertexId at = north;
    bool walk_ok = true;
    for (EdgeId e : path) {
      report.expect(g.edge(e).weight == inst.weights.big,
                    name + " uses edge " + std::to_string(e) + " of weight " +
                        g.edge(e).weight.to_string());
      if (g.edge(e).u == at) {
        at = g.edge(e).v;
      } else if (g.edge(e).v == at) {
        at = g.edge(e).u;
      } else {
        walk_ok = false;
        report.fail(name + " breaks at edge " + std::to_string(e));
        break;
      }
      visited.push_back(at);
    }
    if (!walk_ok) continue;
    report.expect(at == south, name + " does not end at the south terminal");
    report.expect(std::set<VertexId>(visited.begin(), visited.end()).size() == visited.size(),
                  name + " repeats a vertex");
    if (i >= 1 && i + 2 <= k) {
      const std::size_t halfway = std::size_t{1} << (i - 1);
      report.expect(visited.size() > halfway && visited[halfway] == g.terminal(i + 1),
                    name + " does not reach f" + std::to_string(i) + " after " +
                        std::to_string(halfway) + " edges");
    }
    used.insert(path.begin(), path.end());
    total += path.size();
  }
  report.expect(used.size() == total, "paths share an edge");
  report.note("path lengths: " + lengths);
  report.note("the apex-fan path has 2^(k-2) = " + std::to_string(std::size_t{1} << (k - 2)) +
              " edges, one per leaf");
  report.note(std::to_string(k) + " paths, pairwise edge-disjoint: " +
              (used.size() == total ? "yes" : "no"));
  return report;
}

VerificationReport verify_unique_cycles(const PlanarInstance& inst, Parallelism p) {
  if (inst.k > kMaxUniqueCycleK) {
    throw Error(ErrorCode::Parameter, "unique-cycle verification is limited to k <= " +
                                          std::to_string(kMaxUniqueCycleK));
  }
  VerificationReport report;
  report.check = "every important minimum cut is unique and equals its important cycle";
  report.parameters = "planar k=" + std::to_string(inst.k);

  const CutProfile profile = cut_profile(inst.primal, p);
  std::size_t important = 0;
  std::size_t good = 0;
  std::size_t other = 0;
  std::size_t other_unique = 0;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    const Bipartition& b = profile.bipartitions[i];
    const CanonicalCut& cut = profile.cuts[i];
    if (!is_important(b)) {
      ++other;
      if (cut.unique) ++other_unique;
      continue;
    }
    ++important;
    const Signature s = signature_of(b);
    std::vector<EdgeId> cycle;
    try {
      cycle = important_cycle(inst, s);
    } catch (const Error& e) {
      report.fail("signature " + s.str() + ": " + e.what());
      continue;
    }
    const Weight cycle_weight = edge_set_weight(inst, cycle);
    std::sort(cycle.begin(), cycle.end());
    const bool same_edges = cycle == cut.crossing_edges;
    const bool same_value = cycle_weight == cut.value;
    report.note("signature " + s.str() + ": value " + cut.value.to_string() + ", cycle weight " +
                cycle_weight.to_string() + ", unique " + (cut.unique ? "yes" : "no") +
                ", edges " + (same_edges ? "match" : "differ"));
    if (cut.unique && same_edges && same_value) {
      ++good;
    } else {
      report.fail("signature " + s.str() + ": minimum cut is " +
                  (cut.unique ? std::string("unique") : std::string("not unique")) +
                  (same_edges ? "" : ", edge set differs from the important cycle") +
                  (same_value ? "" : ", value differs from the cycle weight"));
    }
  }
  report.note(std::to_string(good) + "/" + std::to_string(important) + " important cuts unique");
  report.note("non-important bipartitions with a unique minimum cut: " +
              std::to_string(other_unique) + "/" + std::to_string(other));
  return report;
}

VerificationReport verify_structure(const PlanarInstance& inst) {
  VerificationReport report;
  report.check = "layer sizes, Euler's formula, weight hierarchy and crossing pattern";
  report.parameters = "planar k=" + std::to_string(inst.k);
  const std::size_t k = inst.k;
  const PlaneGraph& g = inst.dual;

  std::string sizes;
  for (std::size_t j = 0; j < k; ++j) {
    const BigInt expected = expected_layer_size(j, k);
    report.expect(BigInt(static_cast<unsigned long>(inst.layers[j].size())) == expected,
                  "|E_" + std::to_string(j) + "| = " + std::to_string(inst.layers[j].size()) +
                      ", expected " + expected.get_str());
    sizes += (j ? "," : "") + std::to_string(inst.layers[j].size());
  }
  report.note("layer sizes |E_0..E_" + std::to_string(k - 1) + "| = " + sizes);

  const long euler = static_cast<long>(g.vertex_count()) - static_cast<long>(g.edge_count()) +
                     static_cast<long>(g.face_count());
  report.expect(euler == 2, "V - E + F = " + std::to_string(euler));
  report.note("drawn graph: " + std::to_string(g.vertex_count()) + " vertices, " +
              std::to_string(g.edge_count()) + " edges, " + std::to_string(g.face_count()) +
              " faces, " + std::to_string(inst.crossings.size()) + " crossings");
  if (k == 3) {
    report.expect(g.face_count() == k, "k=3 should have exactly 3 faces");
  } else {
    report.expect(g.face_count() > k, "face count should exceed k");
  }
  report.expect(inst.primal.terminal_count() == k, "primal terminal count differs from k");

  // Weight recurrence from the measured layer sizes.
  std::vector<BigInt> c(k - 1, 0);
  c[k - 2] = 1;
  for (std::size_t i = k - 2; i-- > 1;) {
    for (std::size_t j = i + 1; j <= k - 2; ++j) {
      c[i] += static_cast<unsigned long>(inst.layers[j].size()) * c[j];
    }
  }
  BigInt big = 0;
  for (std::size_t j = 1; j <= k - 2; ++j) big += static_cast<unsigned long>(inst.layers[j].size()) * c[j];
  std::string table;
  for (std::size_t i = k - 2; i >= 1; --i) {
    report.expect(inst.weights.c[i] == Weight(c[i], 1),
                  "c_" + std::to_string(i) + " = " + inst.weights.c[i].to_string() +
                      ", recurrence gives " + c[i].get_str());
    table += "c_" + std::to_string(i) + "=" + c[i].get_str() + " ";
  }
  report.expect(inst.weights.big == Weight(big, 1), "C differs from the recurrence");
  report.note("weights: " + table + "C=" + big.get_str());

  const Weight& heavy = inst.weights.big;
  report.expect(inst.dual_weights[inst.apex_edge] == heavy, "apex edge does not weigh C");
  for (EdgeId e : inst.fan_edges) {
    report.expect(inst.dual_weights[e] == heavy, "fan edge " + std::to_string(e) + " does not weigh C");
  }
  for (const auto& rec : inst.tree_edges) {
    for (std::size_t i = 0; i < rec.pieces.size(); ++i) {
      const bool last = i + 1 == rec.pieces.size();
      const Weight& w = inst.dual_weights[rec.pieces[i]];
      report.expect(last ? w == heavy : w == inst.weights.c[rec.layer],
                    "tree edge " + rec.index + " piece " + std::to_string(i) + " weighs " +
                        w.to_string());
    }
  }

  Weight light_total;
  for (const Weight& w : inst.dual_weights) {
    if (w != heavy) light_total += w;
  }
  report.expect(heavy > light_total, "C does not exceed the total of all lighter weights");
  for (std::size_t i = 1; i + 2 <= k; ++i) {
    Weight below;
    for (const Weight& w : inst.dual_weights) {
      if (w < inst.weights.c[i]) below += w;
    }
    report.expect(inst.weights.c[i] > below,
                  "c_" + std::to_string(i) + " does not exceed the total weight below it");
  }
  report.note("weight hierarchy: C=" + heavy.to_string() + " > " + light_total.to_string() +
              " (all lighter edges)");

  // Crossing counts per tree edge and partner order along each 1-child edge.
  std::map<VertexId, const CrossingRecord*> crossing_at;
  for (const auto& rec : inst.crossings) {
    crossing_at[rec.vertex] = &rec;
    report.expect(rec.zero_child.front() == '0' && rec.one_child.front() == '1',
                  "crossing " + std::to_string(rec.vertex) + " pairs " + rec.zero_child + " with " +
                      rec.one_child);
    report.expect(rec.zero_child.size() == rec.strip + 1 && rec.one_child.size() == rec.strip + 1,
                  "crossing " + std::to_string(rec.vertex) + " mixes strips");
  }
  std::size_t checked_edges = 0;
  for (const auto& rec : inst.tree_edges) {
    const std::size_t strip = rec.layer - 1;
    const std::string parent_index = rec.index.substr(1);
    const std::size_t r = bit_value(parent_index);
    const std::size_t crossings = rec.pieces.size() - 1;
    const bool zero_child = rec.index.front() == '0';
    const std::size_t expected = zero_child ? r : (std::size_t{1} << strip) - 1 - r;
    report.expect(crossings == expected, "tree edge " + rec.index + " has " +
                                             std::to_string(crossings) + " crossings, expected " +
                                             std::to_string(expected));
    if (!zero_child) {
      const auto inner = interior_vertices(inst, rec);
      std::vector<std::string> partners;
      for (VertexId x : inner) {
        const auto it = crossing_at.find(x);
        if (it == crossing_at.end()) {
          report.fail("vertex " + std::to_string(x) + " inside " + rec.index + " is not a crossing");
          continue;
        }
        partners.push_back(it->second->zero_child);
      }
      std::vector<std::string> wanted;
      for (std::size_t r2 = r + 1; r2 < (std::size_t{1} << strip); ++r2) {
        wanted.push_back("0" + bit_string(r2, strip));
      }
      report.expect(partners == wanted,
                    "crossing partners along " + rec.index + " are out of order");
    }
    ++checked_edges;
  }
  report.note("crossing counts checked on " + std::to_string(checked_edges) + " tree edges");

  std::map<EdgeId, std::size_t> layer_of;
  for (std::size_t j = 0; j < k; ++j) {
    for (EdgeId e : inst.layers[j]) layer_of[e] = j;
  }
  for (std::size_t m = 0; m < inst.important_count(); ++m) {
    Signature s;
    for (std::size_t i = 0; i + 2 < k; ++i) s.bits.push_back(((m >> (k - 3 - i)) & 1U) != 0);
    std::vector<std::size_t> per_layer(k, 0);
    try {
      for (EdgeId e : important_cycle(inst, s)) {
        if (inst.dual_weights[e] == heavy) ++per_layer[layer_of.at(e)];
      }
    } catch (const Error& e) {
      report.fail(e.what());
      continue;
    }
    report.expect(std::all_of(per_layer.begin(), per_layer.end(), [](std::size_t n) { return n == 1; }),
                  "important cycle " + s.str() + " lacks one weight-C edge per layer");
  }
  report.note(std::to_string(inst.important_count()) +
              " important cycles, each with one weight-C edge per layer");
  return report;
}

}  // namespace mimicnet
