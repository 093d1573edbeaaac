#include <doctest.h>

#include <random>

#include "gxt/hull.hpp"

using namespace gxt;
using namespace gxt::support;

TEST_CASE("triangle hull membership") {
  PlanarSet s;
  s.points = {{0, 0}, {1, 0}, {0, 1}};
  auto hull = HullPolygon::of(s);
  CHECK(hull.vertices().size() == 3);
  CHECK(hull.contains({0.25, 0.25}));
  CHECK(hull.contains({0.0, 0.0}));
  CHECK(!hull.contains({0.6, 0.6}));
  CHECK(!hull.contains({-0.1, 0.0}));
}

TEST_CASE("degenerate hulls") {
  PlanarSet single;
  single.points = {{2, 3}};
  auto h1 = HullPolygon::of(single);
  CHECK(h1.contains({2, 3}));
  CHECK(!h1.contains({2.1, 3}));
  CHECK(h1.diameter() == doctest::Approx(0.0));

  PlanarSet seg;
  seg.points = {{0, 0}, {1, 1}, {0.5, 0.5}};
  auto h2 = HullPolygon::of(seg);
  CHECK(h2.vertices().size() == 2);
  CHECK(h2.contains({0.25, 0.25}, 1e-9));
  CHECK(!h2.contains({0.5, 0.6}));

  PlanarSet empty;
  CHECK(!HullPolygon::of(empty).contains({0, 0}));
}

TEST_CASE("hull is idempotent") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(-1, 1);
  PlanarSet s;
  for (int i = 0; i < 60; ++i) s.points.push_back({u(rng), u(rng)});
  auto hull = HullPolygon::of(s);
  PlanarSet again;
  again.points = hull.vertices();
  auto hull2 = HullPolygon::of(again);
  REQUIRE(hull.vertices().size() == hull2.vertices().size());
  // same vertex cycle up to starting point
  double worst = 1e9;
  for (size_t shift = 0; shift < hull.vertices().size(); ++shift) {
    double total = 0;
    for (size_t i = 0; i < hull.vertices().size(); ++i)
      total += (hull.vertices()[i] -
                hull2.vertices()[(i + shift) % hull2.vertices().size()])
                   .norm();
    worst = std::min(worst, total);
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("hull membership is closed under convex combinations") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(-2, 2);
  PlanarSet s;
  for (int i = 0; i < 40; ++i) s.points.push_back({u(rng), u(rng)});
  auto hull = HullPolygon::of(s);
  std::uniform_real_distribution<double> w(0, 1);
  for (int trial = 0; trial < 200; ++trial) {
    const auto& verts = hull.vertices();
    Vector2d p(0, 0);
    double total = 0;
    std::vector<double> weights(verts.size());
    for (auto& wi : weights) {
      wi = w(rng);
      total += wi;
    }
    for (size_t i = 0; i < verts.size(); ++i) p += weights[i] / total * verts[i];
    CHECK(hull.contains(p, 1e-10));
  }
}

TEST_CASE("hull diameter equals set diameter, flat case") {
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> u(-3, 3);
  PlanarSet s;
  for (int i = 0; i < 100; ++i) s.points.push_back({u(rng), u(rng)});
  auto hull = HullPolygon::of(s);
  CHECK(hull.diameter() == doctest::Approx(set_diameter(s)).epsilon(1e-12));
}

TEST_CASE("hull diameter equals set diameter, Klein model") {
  std::mt19937 rng(13);
  std::uniform_real_distribution<double> u(-0.7, 0.7);
  PlanarSet s;
  s.geometry = PlaneGeometry::HyperbolicKlein;
  for (int i = 0; i < 100; ++i) {
    Vector2d p(u(rng), u(rng));
    if (p.norm() < 0.95) s.points.push_back(p);
  }
  auto hull = HullPolygon::of(s);
  CHECK(std::abs(hull.diameter() - set_diameter(s)) <= 1e-6);
}

TEST_CASE("Klein distance basics") {
  // distance from the center is atanh(|k|)
  Vector2d origin(0, 0), p(0.5, 0);
  CHECK(hyperbolic_distance_klein(origin, p) ==
        doctest::Approx(std::atanh(0.5)).epsilon(1e-12));
  CHECK(hyperbolic_distance_klein(p, p) == doctest::Approx(0.0));
  CHECK_THROWS_AS(hyperbolic_distance_klein(origin, Vector2d(1.0, 0.0)), Error);
}
