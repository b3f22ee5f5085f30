#include <gtest/gtest.h>

#include "mimicnet/plane_graph.hpp"
#include "support/error_matchers.hpp"

namespace mimicnet {
namespace {

Point pt(long x, long y) { return Point{Rational(x), Rational(y)}; }

PlaneGraph square_with_diagonal() {
  PlaneGraph p({pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)},
               {{0, 1, {}}, {1, 2, {}}, {2, 3, {}}, {3, 0, {}}, {0, 2, {}}});
  p.trace_faces();
  return p;
}

TEST(PlaneGraph, TracesFacesWithEulerCount) {
  const PlaneGraph p = square_with_diagonal();
  ASSERT_EQ(p.face_count(), 3U);
  EXPECT_EQ(static_cast<long>(p.vertex_count()) - static_cast<long>(p.edge_count()) +
                static_cast<long>(p.face_count()),
            2);
  for (std::size_t f = 0; f < p.face_count(); ++f) {
    if (f == p.outer_face()) {
      EXPECT_LT(p.face_area2(f), 0);
    } else {
      EXPECT_EQ(p.face_area2(f), 1);  // each triangle has area 1/2
    }
  }
  EXPECT_EQ(p.face_area2(p.outer_face()), -2);
}

TEST(PlaneGraph, EveryHalfEdgeLiesOnExactlyOneFace) {
  const PlaneGraph p = square_with_diagonal();
  std::vector<int> seen(2 * p.edge_count(), 0);
  for (std::size_t f = 0; f < p.face_count(); ++f) {
    for (HalfEdge h : p.face(f)) {
      ++seen[h];
      EXPECT_EQ(p.face_of(h), f);
    }
  }
  for (int n : seen) EXPECT_EQ(n, 1);
}

TEST(PlaneGraph, RotationIsCounterClockwise) {
  const PlaneGraph p = square_with_diagonal();
  // Around vertex 0: towards (1,0), then (1,1), then (0,1).
  std::vector<VertexId> order;
  for (HalfEdge h : p.rotation(0)) order.push_back(p.target(h));
  ASSERT_EQ(order.size(), 3U);
  const auto start = std::find(order.begin(), order.end(), 1U) - order.begin();
  EXPECT_EQ(order[(start + 1) % 3], 2U);
  EXPECT_EQ(order[(start + 2) % 3], 3U);
}

TEST(PlaneGraph, LocatesPoints) {
  const PlaneGraph p = square_with_diagonal();
  const std::size_t lower = p.face_containing(Point{Rational(3, 4), Rational(1, 4)});
  const std::size_t upper = p.face_containing(Point{Rational(1, 4), Rational(3, 4)});
  EXPECT_NE(lower, upper);
  EXPECT_NE(lower, p.outer_face());
  EXPECT_EQ(p.face_containing(pt(5, 5)), p.outer_face());
  EXPECT_EQ(p.face_containing(Point{Rational(-1, 2), Rational(1, 2)}), p.outer_face());
  EXPECT_MIMICNET_ERROR(p.face_containing(Point{Rational(1, 2), Rational(0)}), ErrorCode::Precondition);
}

TEST(PlaneGraph, BendsShapeTheFaces) {
  // Two edges between the same endpoints, one bent above.
  PlaneGraph p({pt(0, 0), pt(2, 0)}, {{0, 1, {}}, {0, 1, {pt(0, 2), pt(2, 2)}}});
  p.trace_faces();
  ASSERT_EQ(p.face_count(), 2U);
  const std::size_t inner = p.face_containing(pt(1, 1));
  EXPECT_NE(inner, p.outer_face());
  EXPECT_EQ(p.face_area2(inner), 8);
  EXPECT_EQ(p.face_polygon(inner).size(), 4U);
}

TEST(PlaneGraph, RejectsOverlappingEdges) {
  PlaneGraph p({pt(0, 0), pt(1, 0), pt(2, 0)}, {{0, 1, {}}, {0, 2, {}}, {1, 2, {}}});
  EXPECT_MIMICNET_ERROR(p.trace_faces(), ErrorCode::Construction);
}

TEST(PlaneGraph, QueriesBeforeTracingFail) {
  const PlaneGraph p({pt(0, 0), pt(1, 0)}, {{0, 1, {}}});
  EXPECT_FALSE(p.traced());
  EXPECT_MIMICNET_ERROR(p.face_count(), ErrorCode::State);
}

TEST(Dual, SquareWithDiagonal) {
  const PlaneGraph p = square_with_diagonal();
  const std::vector<Weight> w{1, 2, 3, 4, 5};
  const std::size_t a = p.face_containing(Point{Rational(3, 4), Rational(1, 4)});
  const std::size_t b = p.face_containing(Point{Rational(1, 4), Rational(3, 4)});
  const std::vector<std::size_t> faces{a, b};
  const std::vector<std::string> labels{"lower", "upper"};
  const DualGraph d = compute_dual(p, w, faces, labels);
  EXPECT_EQ(d.graph.vertex_count(), 3U);
  EXPECT_EQ(d.graph.edge_count(), 5U);
  EXPECT_EQ(d.graph.label(d.graph.terminal(0)), "lower");
  // The diagonal joins the two triangles.
  const Edge& diag = d.graph.edge(4);
  EXPECT_EQ(std::min(diag.u, diag.v), 0U);
  EXPECT_EQ(std::max(diag.u, diag.v), 1U);
  EXPECT_EQ(diag.weight, Weight(5));
  for (VertexId v = 0; v < 3; ++v) EXPECT_EQ(d.vertex_of_face[d.face_of_vertex[v]], v);
}

TEST(Dual, BridgesAreRejected) {
  PlaneGraph p({pt(0, 0), pt(1, 0), pt(0, 1), pt(2, 0)}, {{0, 1, {}}, {1, 2, {}}, {2, 0, {}}, {1, 3, {}}});
  p.trace_faces();
  EXPECT_EQ(p.face_count(), 2U);
  const std::vector<Weight> w{1, 1, 1, 1};
  const std::vector<std::size_t> faces;
  const std::vector<std::string> labels;
  EXPECT_MIMICNET_ERROR(compute_dual(p, w, faces, labels), ErrorCode::Construction);
}

}  // namespace
}  // namespace mimicnet
