#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mimicnet/terminal_graph.hpp"
#include "mimicnet/weight.hpp"

namespace mimicnet {

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator<(const Point& a, const Point& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  }
};

/// Edge drawn as the polyline u -> bends... -> v. Bend points are drawing
/// artifacts, not vertices.
struct PlaneEdge {
  VertexId u = 0;
  VertexId v = 0;
  std::vector<Point> bends;
};

/// Half-edge 2e runs u -> v along edge e, half-edge 2e+1 runs v -> u.
using HalfEdge = std::size_t;

/// Straight-line (plus polyline) drawing of a connected plane graph.
///
/// trace_faces() derives the rotation system from exact angular order and
/// walks every face keeping it on the left, so bounded faces come out
/// counter-clockwise and the outer face clockwise.
class PlaneGraph {
 public:
  PlaneGraph() = default;
  PlaneGraph(std::vector<Point> vertices, std::vector<PlaneEdge> edges);

  std::size_t vertex_count() const noexcept { return points_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const Point& point(VertexId v) const { return points_.at(v); }
  std::span<const Point> points() const noexcept { return points_; }
  const PlaneEdge& edge(EdgeId e) const { return edges_.at(e); }
  std::span<const PlaneEdge> edges() const noexcept { return edges_; }

  static EdgeId edge_of(HalfEdge h) { return h / 2; }
  static HalfEdge twin(HalfEdge h) { return h ^ 1U; }
  VertexId origin(HalfEdge h) const;
  VertexId target(HalfEdge h) const { return origin(twin(h)); }

  void trace_faces();
  bool traced() const noexcept { return !faces_.empty(); }

  /// Outgoing half-edges of v in counter-clockwise order.
  const std::vector<HalfEdge>& rotation(VertexId v) const;
  std::size_t face_count() const;
  const std::vector<HalfEdge>& face(std::size_t f) const;
  std::size_t face_of(HalfEdge h) const;
  std::size_t outer_face() const;

  /// Boundary of face f as a closed point sequence, bends included.
  std::vector<Point> face_polygon(std::size_t f) const;
  /// Twice the signed area of face f's boundary walk.
  Rational face_area2(std::size_t f) const;
  /// Face whose region contains p; p must not lie on the drawing.
  std::size_t face_containing(const Point& p) const;

 private:
  void require_traced() const;

  std::vector<Point> points_;
  std::vector<PlaneEdge> edges_;
  std::vector<std::vector<HalfEdge>> rotation_;
  std::vector<std::size_t> rotation_pos_;
  std::vector<std::vector<HalfEdge>> faces_;
  std::vector<std::size_t> face_of_;
  std::size_t outer_ = 0;
};

struct DualGraph {
  TerminalGraph graph;
  /// face_of_vertex[v] is the face dual to vertex v, and vice versa.
  std::vector<std::size_t> face_of_vertex;
  std::vector<VertexId> vertex_of_face;
};

/// Dual of a traced plane graph: one vertex per face, one edge per drawn edge
/// (same id, same weight) joining the faces on its two sides. The listed
/// faces become the terminals, labelled by `terminal_labels`; other faces are
/// labelled "face<id>". Terminal vertices come first, then the remaining
/// faces by ascending id.
DualGraph compute_dual(const PlaneGraph& p, std::span<const Weight> weights,
                       std::span<const std::size_t> terminal_faces,
                       std::span<const std::string> terminal_labels);

}  // namespace mimicnet
