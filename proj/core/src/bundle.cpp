#include "mimicnet/bundle.hpp"

#include <json.hpp>

#include "mimicnet/errors.hpp"

namespace mimicnet {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

json read_meta(const fs::path& dir) {
  const std::string text = read_text_file(dir / kMetaFile);
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, (dir / kMetaFile).string() + ": " + e.what());
  }
}

template <typename T>
T field(const json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("meta field '") + key + "': " + e.what());
  }
}

Weight weight_field(const json& j, const char* key) {
  try {
    return Weight::parse(field<std::string>(j, key));
  } catch (const Error& e) {
    throw Error(ErrorCode::Parse, std::string("meta field '") + key + "': " + e.what());
  }
}

json point_json(const Point& p) { return json::array({format_rational(p.x), format_rational(p.y)}); }

Point json_point(const json& j) {
  if (!j.is_array() || j.size() != 2) throw Error(ErrorCode::Parse, "meta point must be [x, y]");
  return Point{parse_coordinate(j[0].get<std::string>()), parse_coordinate(j[1].get<std::string>())};
}

bool same_graph(const GraphDocument& doc, const TerminalGraph& g) {
  if (!std::equal(doc.labels.begin(), doc.labels.end(), g.labels().begin(), g.labels().end()) ||
      doc.edges.size() != g.edge_count()) {
    return false;
  }
  if (!std::equal(doc.terminals.begin(), doc.terminals.end(), g.terminals().begin(), g.terminals().end())) {
    return false;
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto& a = doc.edges[e];
    const Edge& b = g.edge(e);
    if (!(a.weight == b.weight) || !((a.u == b.u && a.v == b.v) || (a.u == b.v && a.v == b.u))) return false;
  }
  return true;
}

Point centroid(const std::vector<Point>& poly) {
  Rational x = 0;
  Rational y = 0;
  for (const Point& p : poly) {
    x += p.x;
    y += p.y;
  }
  const Rational n(static_cast<long>(poly.size()));
  x /= n;
  y /= n;
  x.canonicalize();
  y.canonicalize();
  return Point{x, y};
}

std::vector<std::vector<std::size_t>> one_based(const std::vector<std::vector<std::size_t>>& sets) {
  auto out = sets;
  for (auto& s : out) {
    for (auto& i : s) ++i;
  }
  return out;
}

}  // namespace

BundleKind bundle_kind(const fs::path& dir) {
  const json meta = read_meta(dir);
  const auto kind = field<std::string>(meta, "kind");
  if (kind == "planar") return BundleKind::Planar;
  if (kind == "dblexp") return BundleKind::DblExp;
  throw Error(ErrorCode::Parse, "unknown bundle kind '" + kind + "'");
}

std::string to_string(BundleKind kind) { return kind == BundleKind::Planar ? "planar" : "dblexp"; }

std::vector<std::string> planar_dual_labels(const PlanarInstance& inst) {
  std::vector<std::string> labels(inst.dual.vertex_count());
  for (const auto& [index, v] : inst.branching) labels[v] = "v" + index;
  labels[inst.apex] = "w";
  for (std::size_t i = 0; i < inst.crossings.size(); ++i) {
    labels[inst.crossings[i].vertex] = "x" + std::to_string(i);
  }
  return labels;
}

GraphDocument planar_dual_document(const PlanarInstance& inst) {
  GraphDocument doc = GraphDocument::from_plane_graph(inst.dual, inst.dual_weights, planar_dual_labels(inst));
  doc.meta = {{"kind", "planar-dual"}, {"k", std::to_string(inst.k)}, {"heavy", inst.weights.big.to_string()}};
  return doc;
}

GraphDocument planar_primal_document(const PlanarInstance& inst) {
  GraphDocument doc = GraphDocument::from_graph(inst.primal);
  doc.meta = {{"kind", "planar-primal"}, {"k", std::to_string(inst.k)}, {"heavy", inst.weights.big.to_string()}};
  const Rational y_top = inst.dual.point(inst.root).y + Rational(BigInt(1) << static_cast<mp_bitcnt_t>(inst.k - 2)) +
                         Rational(static_cast<long>(inst.k));
  for (VertexId v = 0; v < inst.primal.vertex_count(); ++v) {
    const std::size_t f = inst.face_of_primal[v];
    if (f == inst.dual.outer_face()) {
      doc.coordinates[v] = Point{Rational(static_cast<long>(inst.k - 1), 2), -y_top};
    } else {
      doc.coordinates[v] = centroid(inst.dual.face_polygon(f));
    }
  }
  return doc;
}

GraphDocument dblexp_document(const DblExpInstance& inst) {
  GraphDocument doc = GraphDocument::from_graph(inst.graph);
  doc.meta = {{"kind", "dblexp"}, {"r", std::to_string(inst.r)}, {"alpha", inst.alpha.to_string()}};
  return doc;
}

void write_planar_bundle(const PlanarInstance& inst, const fs::path& dir) {
  fs::create_directories(dir);
  json meta;
  meta["format"] = "mimicnet-bundle";
  meta["version"] = 1;
  meta["kind"] = "planar";
  meta["k"] = inst.k;
  meta["sheared"] = inst.sheared;
  json c = json::array();
  for (std::size_t i = 1; i < inst.weights.c.size(); ++i) c.push_back(inst.weights.c[i].to_string());
  meta["weights"] = {{"c", c}, {"C", inst.weights.big.to_string()}};
  meta["root"] = inst.root;
  meta["apex"] = inst.apex;
  meta["apex_edge"] = inst.apex_edge;
  meta["branching"] = inst.branching;
  meta["layers"] = inst.layers;
  json tree = json::array();
  for (const auto& t : inst.tree_edges) {
    tree.push_back({{"index", t.index}, {"layer", t.layer}, {"parent", t.parent}, {"child", t.child}, {"pieces", t.pieces}});
  }
  meta["tree_edges"] = tree;
  meta["fan_edges"] = inst.fan_edges;
  json crossings = json::array();
  for (const auto& x : inst.crossings) {
    crossings.push_back({{"vertex", x.vertex}, {"strip", x.strip}, {"zero_child", x.zero_child}, {"one_child", x.one_child}});
  }
  meta["crossings"] = crossings;
  json bends = json::array();
  for (EdgeId e = 0; e < inst.dual.edge_count(); ++e) {
    if (inst.dual.edge(e).bends.empty()) continue;
    json pts = json::array();
    for (const Point& p : inst.dual.edge(e).bends) pts.push_back(point_json(p));
    bends.push_back({{"edge", e}, {"points", pts}});
  }
  meta["bends"] = bends;
  meta["faces"] = {{"north", inst.north_face}, {"south", inst.south_face}, {"equator", inst.equator_faces}};
  meta["face_of_primal"] = inst.face_of_primal;

  write_text_file(dir / kDualFile, serialize(planar_dual_document(inst)));
  write_text_file(dir / kPrimalFile, serialize(planar_primal_document(inst)));
  write_text_file(dir / kMetaFile, meta.dump(1) + "\n");
}

void write_dblexp_bundle(const DblExpInstance& inst, const fs::path& dir) {
  fs::create_directories(dir);
  json meta;
  meta["format"] = "mimicnet-bundle";
  meta["version"] = 1;
  meta["kind"] = "dblexp";
  meta["r"] = inst.r;
  meta["k"] = inst.k();
  meta["ell"] = inst.ell;
  meta["alpha"] = inst.alpha.to_string();
  meta["x"] = inst.x;
  meta["q"] = inst.q;
  meta["u"] = inst.u;
  meta["w"] = inst.w;
  meta["middle_subsets"] = one_based(inst.middle_subsets);
  meta["outer_subsets"] = one_based(inst.outer_subsets);
  write_text_file(dir / kPrimalFile, serialize(dblexp_document(inst)));
  write_text_file(dir / kMetaFile, meta.dump(1) + "\n");
}

PlanarInstance read_planar_bundle(const fs::path& dir) {
  const json meta = read_meta(dir);
  if (field<std::string>(meta, "kind") != "planar") {
    throw Error(ErrorCode::Parse, dir.string() + " is not a planar bundle");
  }
  const GraphDocument dual_doc = parse_document(read_text_file(dir / kDualFile));
  const GraphDocument primal_doc = parse_document(read_text_file(dir / kPrimalFile));
  if (!dual_doc.has_coordinates()) throw Error(ErrorCode::Parse, "dual.graph lacks coordinates");

  PlanarInstance inst;
  try {
    inst.k = field<std::size_t>(meta, "k");
    inst.sheared = field<bool>(meta, "sheared");
    const json& w = meta.at("weights");
    inst.weights.c.assign(1, Weight{});
    for (const auto& c : w.at("c")) inst.weights.c.push_back(Weight::parse(c.get<std::string>()));
    inst.weights.big = weight_field(w, "C");
    inst.root = field<VertexId>(meta, "root");
    inst.apex = field<VertexId>(meta, "apex");
    inst.apex_edge = field<EdgeId>(meta, "apex_edge");
    inst.branching = field<std::map<std::string, VertexId>>(meta, "branching");
    inst.layers = field<std::vector<std::vector<EdgeId>>>(meta, "layers");
    for (const auto& t : meta.at("tree_edges")) {
      inst.tree_edges.push_back(TreeEdgeRecord{t.at("index").get<std::string>(), t.at("layer").get<std::size_t>(),
                                               t.at("parent").get<VertexId>(), t.at("child").get<VertexId>(),
                                               t.at("pieces").get<std::vector<EdgeId>>()});
    }
    inst.fan_edges = field<std::vector<EdgeId>>(meta, "fan_edges");
    for (const auto& x : meta.at("crossings")) {
      inst.crossings.push_back(CrossingRecord{x.at("vertex").get<VertexId>(), x.at("strip").get<std::size_t>(),
                                              x.at("zero_child").get<std::string>(),
                                              x.at("one_child").get<std::string>()});
    }
    const json& faces = meta.at("faces");
    inst.north_face = faces.at("north").get<std::size_t>();
    inst.south_face = faces.at("south").get<std::size_t>();
    inst.equator_faces = faces.at("equator").get<std::vector<std::size_t>>();

    std::vector<Point> points;
    for (const auto& c : dual_doc.coordinates) points.push_back(*c);
    std::vector<PlaneEdge> edges;
    for (const auto& e : dual_doc.edges) {
      edges.push_back(PlaneEdge{e.u, e.v, {}});
      inst.dual_weights.push_back(e.weight);
    }
    for (const auto& b : meta.at("bends")) {
      const EdgeId e = b.at("edge").get<EdgeId>();
      if (e >= edges.size()) throw Error(ErrorCode::Parse, "bend on unknown edge " + std::to_string(e));
      for (const auto& p : b.at("points")) edges[e].bends.push_back(json_point(p));
    }
    inst.dual = PlaneGraph(std::move(points), std::move(edges));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("meta: ") + e.what());
  }
  if (inst.k < 3 || inst.weights.c.size() != inst.k - 1 || inst.layers.size() != inst.k ||
      inst.equator_faces.size() != inst.k - 2) {
    throw Error(ErrorCode::Parse, "meta sizes are inconsistent with k");
  }
  inst.dual.trace_faces();
  if (inst.south_face != inst.dual.outer_face()) {
    throw Error(ErrorCode::Construction, "south face in meta is not the outer face of the drawing");
  }

  std::vector<std::size_t> terminal_faces{inst.north_face, inst.south_face};
  terminal_faces.insert(terminal_faces.end(), inst.equator_faces.begin(), inst.equator_faces.end());
  std::vector<std::string> labels;
  for (VertexId t : primal_doc.terminals) labels.push_back(primal_doc.labels.at(t));
  DualGraph dual = compute_dual(inst.dual, inst.dual_weights, terminal_faces, labels);
  if (!same_graph(primal_doc, dual.graph)) {
    throw Error(ErrorCode::Construction, "primal.graph is not the dual of dual.graph");
  }
  inst.primal = std::move(dual.graph);
  inst.face_of_primal = std::move(dual.face_of_vertex);
  inst.primal_of_face = std::move(dual.vertex_of_face);
  return inst;
}

DblExpInstance read_dblexp_bundle(const fs::path& dir) {
  const json meta = read_meta(dir);
  if (field<std::string>(meta, "kind") != "dblexp") {
    throw Error(ErrorCode::Parse, dir.string() + " is not a dblexp bundle");
  }
  const auto r = field<std::size_t>(meta, "r");
  const Weight alpha = weight_field(meta, "alpha");
  TerminalGraph g = parse_document(read_text_file(dir / kPrimalFile)).to_graph();
  return adopt_dblexp(std::move(g), r, alpha);
}

}  // namespace mimicnet
