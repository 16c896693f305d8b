#include <gtest/gtest.h>

#include <cmath>

#include "beloch/error.hpp"
#include "beloch/geom.hpp"
#include "gen.hpp"

using namespace beloch;

namespace {

void expect_line(const Line& l, double a, double b, double c) {
  const double n = std::hypot(a, b);
  EXPECT_NEAR(l.a(), a / n, 1e-12);
  EXPECT_NEAR(l.b(), b / n, 1e-12);
  EXPECT_NEAR(l.c(), c / n, 1e-12);
}

}  // namespace

TEST(Line, NormalizesScaleAndSign) {
  expect_line(Line::from_coefficients(-2.0, -2.0, 2.0), 1.0, 1.0, -1.0);
  expect_line(Line::from_coefficients(0.0, -3.0, 6.0), 0.0, 1.0, -2.0);
  EXPECT_EQ(Line::from_coefficients(2, 4, 6), Line::from_coefficients(-1, -2, -3));
}

TEST(Line, RejectsDegenerateCoefficients) {
  EXPECT_THROW(Line::from_coefficients(0, 0, 1), Error);
  EXPECT_THROW(Line::from_coefficients(NAN, 1, 1), Error);
  try {
    Line::from_coefficients(0, 0, 0);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateInput);
  }
}

TEST(Reflect, AnchorOntoDirectrix) {
  const Point img = reflect_point({-1, 0}, Line::from_coefficients(1, 1, -1));
  EXPECT_NEAR(img.x, 1.0, 1e-15);
  EXPECT_NEAR(img.y, 2.0, 1e-15);
}

TEST(Reflect, AcrossYAxis) {
  const Point img = reflect_point({1, 0}, Line::from_coefficients(1, 0, 0));
  EXPECT_DOUBLE_EQ(img.x, -1.0);
  EXPECT_DOUBLE_EQ(img.y, 0.0);
}

TEST(Reflect, MarkedPointLandsOnGuideForCubeRootOfSix) {
  const double r = std::cbrt(6.0);
  const Point img = reflect_point({0, -6}, Line::from_coefficients(1, r, -r * r));
  EXPECT_NEAR(img.y, 6.0, 1e-12);
}

TEST(PerpBisector, Examples) {
  expect_line(perp_bisector({-1, 0}, {1, 2}), 1, 1, -1);
  expect_line(perp_bisector({0, 0}, {2, 0}), 1, 0, -1);
  expect_line(perp_bisector({1, 1}, {0, 0}), 2, 2, -2);
}

TEST(PerpBisector, CoincidentPointsThrow) {
  try {
    perp_bisector({1, 2}, {1, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateInput);
  }
}

TEST(SideOf, Examples) {
  EXPECT_EQ(side_of(Line::from_coefficients(1, 0, 0), {-1, 0}), -1);
  EXPECT_EQ(side_of(Line::from_coefficients(1, 1, -1), {1, 1}), 1);
  EXPECT_EQ(side_of(Line::from_coefficients(1, 1, -1), {-1, 0}), -1);
  EXPECT_EQ(side_of(Line::from_coefficients(1, 1, -1), {0.5, 0.5 + 1e-12}), 0);
}

TEST(Segments, Examples) {
  EXPECT_TRUE(segments_intersect({{0, 0}, {2, 2}}, {{0, 2}, {2, 0}}));
  EXPECT_TRUE(segments_intersect({{-1, 0}, {1, 1}}, {{1, 2}, {0, 0}}));
  EXPECT_FALSE(segments_intersect({{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}));
  const auto x = crossing_point({{-1, 0}, {1, 1}}, {{1, 2}, {0, 0}});
  ASSERT_TRUE(x.has_value());
  EXPECT_NEAR(x->x, 1.0 / 3.0, 1e-14);
  EXPECT_NEAR(x->y, 2.0 / 3.0, 1e-14);
}

TEST(Segments, TouchingCollinearAndDegenerate) {
  EXPECT_TRUE(segments_intersect({{0, 0}, {1, 0}}, {{1, 0}, {2, 5}}));
  EXPECT_TRUE(segments_intersect({{0, 0}, {2, 0}}, {{1, 0}, {3, 0}}));
  EXPECT_FALSE(segments_intersect({{0, 0}, {1, 0}}, {{2, 0}, {3, 0}}));
  EXPECT_TRUE(segments_intersect({{1, 1}, {1, 1}}, {{0, 0}, {2, 2}}));
  EXPECT_FALSE(segments_intersect({{1, 1.5}, {1, 1.5}}, {{0, 0}, {2, 2}}));
  EXPECT_TRUE(segments_intersect({{1, 1}, {1, 1}}, {{1, 1}, {1, 1}}));
}

TEST(Circle, Examples) {
  const Circle c{{1, 1}, std::sqrt(5.0)};
  EXPECT_EQ(position_wrt_circle({1, 2}, c), CirclePosition::Inside);
  EXPECT_EQ(position_wrt_circle({1, 1}, c), CirclePosition::Inside);
  for (double th : {0.3, 1.7, 4.0}) {
    const Point on{1 + std::sqrt(5.0) * std::cos(th), 1 + std::sqrt(5.0) * std::sin(th)};
    EXPECT_EQ(position_wrt_circle(on, c), CirclePosition::On);
  }
  EXPECT_EQ(position_wrt_circle({4, 4}, c), CirclePosition::Outside);
}

TEST(GeomProperty, ReflectionIsAnInvolution) {
  Gen g(11);
  for (int i = 0; i < 1000; ++i) {
    const Point p = g.point(10);
    const Line l = Line::from_coefficients(g.real(-3, 3), g.real(-3, 3), g.real(-5, 5));
    const Point back = reflect_point(reflect_point(p, l), l);
    EXPECT_LE(distance(back, p), 1e-12 * (1 + p.norm()));
  }
}

TEST(GeomProperty, BisectorEquidistant) {
  Gen g(12);
  for (int i = 0; i < 1000; ++i) {
    const Point p = g.point(10);
    const Point q = g.point(10);
    const Line l = perp_bisector(p, q);
    const double dp = std::abs(l.eval(p));
    const double dq = std::abs(l.eval(q));
    EXPECT_LE(std::abs(dp - dq), 1e-12 * (1 + dp + p.norm() + q.norm()));
  }
}

TEST(GeomProperty, BisectorOfReflectionRecoversLine) {
  Gen g(13);
  for (int i = 0; i < 1000; ++i) {
    const Point p = g.point(10);
    const Line l = Line::from_coefficients(g.real(-3, 3), g.real(-3, 3), g.real(-5, 5));
    if (std::abs(l.eval(p)) < 1e-3) continue;
    EXPECT_LE(coefficient_distance(perp_bisector(p, reflect_point(p, l)), l), 1e-12 * (1 + p.norm()));
  }
}

TEST(GeomProperty, SegmentIntersectionIsSymmetric) {
  Gen g(14);
  for (int i = 0; i < 2000; ++i) {
    const Segment a{g.point(3), g.point(3)};
    const Segment b{g.point(3), g.point(3)};
    EXPECT_EQ(segments_intersect(a, b), segments_intersect(b, a));
    EXPECT_EQ(segments_intersect(a, b), segments_intersect({a.to, a.from}, b));
  }
}
