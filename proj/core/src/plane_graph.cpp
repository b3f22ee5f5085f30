#include "mimicnet/plane_graph.hpp"

#include <algorithm>

#include "mimicnet/errors.hpp"

namespace mimicnet {

namespace {

// 0 for directions in the upper half plane (angle in [0, pi)), 1 otherwise.
int half(const Point& d) {
  if (sgn(d.y) > 0 || (sgn(d.y) == 0 && sgn(d.x) > 0)) return 0;
  return 1;
}

Rational cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }

bool ccw_less(const Point& a, const Point& b) {
  const int ha = half(a);
  const int hb = half(b);
  if (ha != hb) return ha < hb;
  return sgn(cross(a, b)) > 0;
}

}  // namespace

PlaneGraph::PlaneGraph(std::vector<Point> vertices, std::vector<PlaneEdge> edges)
    : points_(std::move(vertices)), edges_(std::move(edges)) {
  for (const PlaneEdge& e : edges_) {
    if (e.u >= points_.size() || e.v >= points_.size()) {
      throw Error(ErrorCode::NotFound, "plane edge endpoint out of range");
    }
    if (e.u == e.v) throw Error(ErrorCode::Precondition, "plane graph has a self-loop");
  }
}

VertexId PlaneGraph::origin(HalfEdge h) const {
  const PlaneEdge& e = edges_.at(edge_of(h));
  return (h & 1U) == 0 ? e.u : e.v;
}

void PlaneGraph::trace_faces() {
  const std::size_t n = points_.size();
  const std::size_t halves = 2 * edges_.size();

  // Direction of the first drawn segment of each half-edge.
  std::vector<Point> direction(halves);
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    const PlaneEdge& edge = edges_[e];
    const Point& pu = points_[edge.u];
    const Point& pv = points_[edge.v];
    const Point& first = edge.bends.empty() ? pv : edge.bends.front();
    const Point& last = edge.bends.empty() ? pu : edge.bends.back();
    direction[2 * e] = Point{first.x - pu.x, first.y - pu.y};
    direction[2 * e + 1] = Point{last.x - pv.x, last.y - pv.y};
  }

  rotation_.assign(n, {});
  for (HalfEdge h = 0; h < halves; ++h) rotation_[origin(h)].push_back(h);
  rotation_pos_.assign(halves, 0);
  for (VertexId v = 0; v < n; ++v) {
    auto& rot = rotation_[v];
    std::sort(rot.begin(), rot.end(),
              [&](HalfEdge a, HalfEdge b) { return ccw_less(direction[a], direction[b]); });
    for (std::size_t i = 0; i + 1 < rot.size(); ++i) {
      const Point& a = direction[rot[i]];
      const Point& b = direction[rot[i + 1]];
      if (half(a) == half(b) && sgn(cross(a, b)) == 0) {
        throw Error(ErrorCode::Construction,
                    "two edges leave vertex " + std::to_string(v) + " in the same direction");
      }
    }
    for (std::size_t i = 0; i < rot.size(); ++i) rotation_pos_[rot[i]] = i;
  }

  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  faces_.clear();
  face_of_.assign(halves, kUnassigned);
  for (HalfEdge start = 0; start < halves; ++start) {
    if (face_of_[start] != kUnassigned) continue;
    const std::size_t f = faces_.size();
    faces_.emplace_back();
    HalfEdge h = start;
    do {
      face_of_[h] = f;
      faces_[f].push_back(h);
      // At the target, turn to the next edge clockwise from the way back.
      const HalfEdge back = twin(h);
      const auto& rot = rotation_[origin(back)];
      const std::size_t pos = rotation_pos_[back];
      h = rot[(pos + rot.size() - 1) % rot.size()];
    } while (h != start);
  }

  std::size_t negatives = 0;
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    if (sgn(face_area2(f)) < 0) {
      outer_ = f;
      ++negatives;
    }
  }
  if (negatives != 1) {
    throw Error(ErrorCode::Construction, "expected exactly one clockwise (outer) face, found " +
                                             std::to_string(negatives));
  }
}

void PlaneGraph::require_traced() const {
  if (!traced()) throw Error(ErrorCode::State, "faces have not been traced");
}

const std::vector<HalfEdge>& PlaneGraph::rotation(VertexId v) const {
  require_traced();
  return rotation_.at(v);
}

std::size_t PlaneGraph::face_count() const {
  require_traced();
  return faces_.size();
}

const std::vector<HalfEdge>& PlaneGraph::face(std::size_t f) const {
  require_traced();
  return faces_.at(f);
}

std::size_t PlaneGraph::face_of(HalfEdge h) const {
  require_traced();
  return face_of_.at(h);
}

std::size_t PlaneGraph::outer_face() const {
  require_traced();
  return outer_;
}

std::vector<Point> PlaneGraph::face_polygon(std::size_t f) const {
  std::vector<Point> poly;
  for (HalfEdge h : face(f)) {
    const PlaneEdge& e = edges_[edge_of(h)];
    poly.push_back(points_[origin(h)]);
    if ((h & 1U) == 0) {
      poly.insert(poly.end(), e.bends.begin(), e.bends.end());
    } else {
      poly.insert(poly.end(), e.bends.rbegin(), e.bends.rend());
    }
  }
  return poly;
}

Rational PlaneGraph::face_area2(std::size_t f) const {
  const auto poly = face_polygon(f);
  Rational area = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point& a = poly[i];
    const Point& b = poly[(i + 1) % poly.size()];
    area += a.x * b.y - a.y * b.x;
  }
  return area;
}

std::size_t PlaneGraph::face_containing(const Point& p) const {
  require_traced();
  std::optional<std::size_t> found;
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    if (f == outer_) continue;
    const auto poly = face_polygon(f);
    bool inside = false;
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const Point& a = poly[i];
      const Point& b = poly[(i + 1) % poly.size()];
      if ((a.y > p.y) == (b.y > p.y)) {
        if (a.y == p.y && b.y == p.y && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x)) {
          throw Error(ErrorCode::Precondition, "probe point lies on the drawing");
        }
        continue;
      }
      const Rational x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (x == p.x) throw Error(ErrorCode::Precondition, "probe point lies on the drawing");
      if (x > p.x) inside = !inside;
    }
    if (inside) {
      if (found) throw Error(ErrorCode::Construction, "probe point lies in two bounded faces");
      found = f;
    }
  }
  return found.value_or(outer_);
}

DualGraph compute_dual(const PlaneGraph& p, std::span<const Weight> weights,
                       std::span<const std::size_t> terminal_faces,
                       std::span<const std::string> terminal_labels) {
  if (!p.traced()) throw Error(ErrorCode::State, "dual requested before faces were traced");
  if (weights.size() != p.edge_count()) {
    throw Error(ErrorCode::Precondition, "one weight per plane edge is required");
  }
  if (terminal_faces.size() != terminal_labels.size()) {
    throw Error(ErrorCode::Precondition, "terminal faces and labels differ in length");
  }
  const std::size_t faces = p.face_count();
  constexpr VertexId kNone = static_cast<VertexId>(-1);
  DualGraph out{TerminalGraph({"a", "b"}, {0, 1}, {}), {}, std::vector<VertexId>(faces, kNone)};

  std::vector<std::string> labels;
  std::vector<VertexId> terminals;
  for (std::size_t i = 0; i < terminal_faces.size(); ++i) {
    const std::size_t f = terminal_faces[i];
    if (f >= faces || out.vertex_of_face[f] != kNone) {
      throw Error(ErrorCode::InvalidTerminalSet, "terminal faces must be distinct faces");
    }
    out.vertex_of_face[f] = labels.size();
    out.face_of_vertex.push_back(f);
    terminals.push_back(labels.size());
    labels.push_back(terminal_labels[i]);
  }
  for (std::size_t f = 0; f < faces; ++f) {
    if (out.vertex_of_face[f] != kNone) continue;
    out.vertex_of_face[f] = labels.size();
    out.face_of_vertex.push_back(f);
    labels.push_back("face" + std::to_string(f));
  }

  std::vector<Edge> edges;
  edges.reserve(p.edge_count());
  for (EdgeId e = 0; e < p.edge_count(); ++e) {
    const std::size_t left = p.face_of(2 * e);
    const std::size_t right = p.face_of(2 * e + 1);
    if (left == right) {
      throw Error(ErrorCode::Construction,
                  "edge " + std::to_string(e) + " borders the same face on both sides");
    }
    edges.push_back(Edge{out.vertex_of_face[left], out.vertex_of_face[right], weights[e]});
  }
  out.graph = TerminalGraph(std::move(labels), std::move(terminals), std::move(edges));
  return out;
}

}  // namespace mimicnet
