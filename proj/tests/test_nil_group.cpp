#include <doctest.h>

#include <random>

#include "gxt/nil_group.hpp"

using namespace gxt;
using namespace gxt::nil;

namespace {

VectorXd vec3(double a, double b, double c) {
  VectorXd v(3);
  v << a, b, c;
  return v;
}

VectorXd random_vec(int n, std::mt19937& rng, double scale = 1.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  VectorXd v(n);
  for (int i = 0; i < n; ++i) v(i) = u(rng);
  return v;
}

}  // namespace

TEST_CASE("Heisenberg product formula") {
  auto h = lie::heisenberg();
  std::mt19937 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const VectorXd p = random_vec(3, rng, 3.0), q = random_vec(3, rng, 3.0);
    const VectorXd expect = vec3(p(0) + q(0), p(1) + q(1),
                                 p(2) + q(2) + (p(0) * q(1) - p(1) * q(0)) / 2);
    CHECK((bch_product(h, p, q) - expect).cwiseAbs().maxCoeff() <= 1e-14);
  }
  CHECK((bch_product(h, vec3(1, 0, 0), vec3(0, 1, 0)) - vec3(1, 1, 0.5))
            .cwiseAbs()
            .maxCoeff() <= 1e-15);
}

TEST_CASE("group law: identity, inverse, associativity") {
  auto h = lie::heisenberg();
  std::mt19937 rng(32);
  const VectorXd zero = VectorXd::Zero(3);
  for (int trial = 0; trial < 500; ++trial) {
    const VectorXd p = random_vec(3, rng, 2.0), q = random_vec(3, rng, 2.0),
                   r = random_vec(3, rng, 2.0);
    CHECK((bch_product(h, p, bch_inverse(p))).cwiseAbs().maxCoeff() <= 1e-14);
    CHECK((bch_product(h, p, zero) - p).cwiseAbs().maxCoeff() <= 1e-15);
    const VectorXd left = bch_product(h, bch_product(h, p, q), r);
    const VectorXd right = bch_product(h, p, bch_product(h, q, r));
    CHECK((left - right).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("truncated product rejects higher-step algebras") {
  auto l4 = lie::filiform(4);
  VectorXd p = VectorXd::Zero(4), q = VectorXd::Zero(4);
  CHECK_THROWS_AS(bch_product(l4, p, q), NotTwoStep);
}

TEST_CASE("closed-form Heisenberg geodesic") {
  auto g = heisenberg_geodesic(1.0, 0.0, 0.0);
  const auto st = g(1.0);
  CHECK((st.position - vec3(1, 1, 0.5)).norm() <= 1e-15);

  auto axis = heisenberg_geodesic(0.0, 0.0, 0.0);
  for (double t : {-2.0, 0.5, 3.0})
    CHECK((axis(t).position - vec3(0, t, 0)).norm() <= 1e-15);

  // vertical offset copies ride below
  auto lifted = heisenberg_geodesic(1.0, 0.0, -2.0);
  CHECK(lifted(0.0).position(2) == doctest::Approx(-2.0));
}

TEST_CASE("horizontal geodesics graze the paraboloid exactly once") {
  for (double x : {0.5, 1.0, 2.0}) {
    auto g = heisenberg_geodesic(x, 0.3, 0.0);
    double min_gap = 1e300;
    double argmin = 0;
    for (double t = -6; t <= 6; t += 1e-3) {
      const auto p = g(t).position;
      const double gap = (p(0) * p(0) + p(1) * p(1)) / 4.0 - p(2);
      CHECK(gap >= -1e-12);  // never inside the bowl
      if (gap < min_gap) {
        min_gap = gap;
        argmin = t;
      }
    }
    CHECK(min_gap <= 1e-6);
    CHECK(argmin == doctest::Approx(x).epsilon(1e-3));
  }
}

TEST_CASE("integrated geodesic matches the closed form") {
  auto h = lie::heisenberg();
  for (double x : {0.0, 1.0, -1.5}) {
    auto path = geodesic_flow(h, vec3(x, 0, 0), vec3(0, 1, 0), 10.0);
    auto oracle = heisenberg_geodesic(x, 0.0, 0.0);
    double worst = 0;
    for (double t = -10; t <= 10; t += 0.05)
      worst = std::max(worst, (path(t).position - oracle(t).position).norm());
    CHECK(worst <= 1e-6);
  }
}

TEST_CASE("central initial velocity climbs the axis") {
  auto h = lie::heisenberg();
  auto path = geodesic_flow(h, vec3(0, 0, 0), vec3(0, 0, 1), 5.0);
  for (double t = -5; t <= 5; t += 0.25)
    CHECK((path(t).position - vec3(0, 0, t)).norm() <= 1e-9);
}

TEST_CASE("abelian flow is a straight line") {
  auto ab = lie::abelian(3);
  const VectorXd p0 = vec3(0.3, -1, 2), v = vec3(1, 2, -2) / 3.0;
  auto path = geodesic_flow(ab, p0, v, 8.0);
  for (double t = -8; t <= 8; t += 0.5)
    CHECK((path(t).position - (p0 + t * v)).norm() <= 1e-9);
}

TEST_CASE("energy is conserved along the flow") {
  auto h = lie::heisenberg();
  std::mt19937 rng(41);
  for (int trial = 0; trial < 5; ++trial) {
    const VectorXd v0 = random_vec(3, rng);
    if (v0.norm() < 0.1) continue;
    auto path = geodesic_flow(h, vec3(0, 0, 0), v0, 20.0);
    CHECK(energy_drift(h, path) <= 1e-8);
  }
}

TEST_CASE("geodesics are left invariant") {
  auto h = lie::heisenberg();
  std::mt19937 rng(43);
  const VectorXd g = vec3(0.7, -0.4, 1.2);
  for (int trial = 0; trial < 3; ++trial) {
    const VectorXd p0 = random_vec(3, rng), v0 = random_vec(3, rng);
    if (v0.norm() < 0.1) continue;
    auto base = geodesic_flow(h, p0, v0, 5.0);
    auto moved = geodesic_flow(h, bch_product(h, g, p0), v0, 5.0);
    double worst = 0;
    for (double t = -5; t <= 5; t += 0.25)
      worst = std::max(
          worst,
          (moved(t).position - bch_product(h, g, base(t).position)).norm());
    CHECK(worst <= 1e-6);
  }
}

TEST_CASE("path velocity is the derivative of position") {
  auto h = lie::heisenberg();
  auto path = geodesic_flow(h, vec3(0.5, 0, 0), vec3(0.6, 0.64, 0.48), 4.0);
  const double dt = 1e-5;
  for (double t : {-3.0, -1.0, 0.2, 2.5}) {
    const VectorXd fd =
        (path(t + dt).position - path(t - dt).position) / (2 * dt);
    CHECK((fd - path(t).velocity).norm() <= 1e-6);
  }
}

TEST_CASE("flow argument validation") {
  auto h = lie::heisenberg();
  CHECK_THROWS_AS(geodesic_flow(h, vec3(0, 0, 0), vec3(0, 1, 0), -1.0), Error);
  FlowOptions bad;
  bad.step = 0.0;
  CHECK_THROWS_AS(geodesic_flow(h, vec3(0, 0, 0), vec3(0, 1, 0), 1.0, bad),
                  Error);
  CHECK_THROWS_AS(geodesic_flow(h, vec3(0, 0, 0), vec3(0, 0, 0), 1.0), Error);
}

TEST_CASE("escape times in the abelian group equal the radius") {
  auto ab = lie::abelian(3);
  auto profile = escape_profile(ab, 1.5, 32);
  for (double t : profile.exit_times)
    CHECK(t == doctest::Approx(1.5).epsilon(1e-6));
}

TEST_CASE("Heisenberg escape profile is finite and monotone in the radius") {
  auto h = lie::heisenberg();
  double prev = 0.0;
  for (double r : {0.5, 1.0, 2.0}) {
    auto profile = escape_profile(h, r, 64);
    CHECK(profile.exit_times.size() == 64);
    CHECK(profile.max_exit_time > 0.0);
    CHECK(profile.max_exit_time >= prev);
    prev = profile.max_exit_time;
  }
}

TEST_CASE("paraboloid membership and frames") {
  Paraboloid p;  // model bowl, no shift
  CHECK(p.contains({0, 0, 1}));
  CHECK(p.contains({2, 0, 1}));
  CHECK(!p.contains({2, 0, 0.5}));
  p.opens_up = false;
  p.shift = 1.0;
  CHECK(p.contains({0, 0, 0.5}));
  CHECK(!p.contains({0, 0, 2.0}));
}

TEST_CASE("paraboloid sandwich of a two-point compact") {
  std::vector<Vector3d> k = {{0, 0, 0}, {0, 0, 1}};
  ParaboloidSupportSet s(k, 1);
  REQUIRE(s.frames().size() == 1);
  CHECK(s.frames()[0].h_minus == doctest::Approx(0.0));
  CHECK(s.frames()[0].h_plus == doctest::Approx(1.0));
  CHECK(s.contains({0, 0, 0.5}));
  CHECK(!s.contains({0, 0, 1.5}));
}

TEST_CASE("paraboloid support set always contains the compact") {
  std::mt19937 rng(51);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Vector3d> k;
    const int m = 3 + trial % 5;
    for (int i = 0; i < m; ++i) k.push_back({u(rng), u(rng), u(rng)});
    ParaboloidSupportSet s(k, 6);
    for (const auto& p : k) CHECK(s.contains(p, 1e-9));
  }
}

TEST_CASE("adding paraboloid frames never enlarges the set") {
  std::mt19937 rng(52);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  std::vector<Vector3d> k;
  for (int i = 0; i < 12; ++i) k.push_back({u(rng), u(rng), u(rng)});
  ParaboloidSupportSet coarse(k, 3), fine(k, 12);
  for (int trial = 0; trial < 500; ++trial) {
    const Vector3d q(u(rng) * 2, u(rng) * 2, u(rng) * 2);
    if (fine.contains(q)) CHECK(coarse.contains(q));
  }
}

TEST_CASE("point compact shrinks toward the point as frames are added") {
  std::vector<Vector3d> k = {{0, 0, 0}};
  ParaboloidSupportSet s1(k, 1), s8(k, 8);
  for (const auto& f : s8.frames()) {
    CHECK(f.h_minus == doctest::Approx(0.0));
    CHECK(f.h_plus == doctest::Approx(0.0));
  }
  int kept1 = 0, kept8 = 0;
  std::mt19937 rng(53);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int trial = 0; trial < 2000; ++trial) {
    const Vector3d q(u(rng), u(rng), u(rng));
    kept1 += s1.contains(q, 1e-12);
    kept8 += s8.contains(q, 1e-12);
  }
  CHECK(kept8 <= kept1);
  CHECK(s8.contains({0, 0, 0}, 1e-12));
}

TEST_CASE("coset plane cover of the 4-dim group") {
  auto hr = lie::heisenberg_plus_line();
  auto [x, y] = lie::find_commuting_pair(hr, 1);

  // compact: sampled chart sphere of radius 1
  PointCloud k;
  for (const auto& d : seeded_directions(4, 600, 99)) k.push_back(d);

  support::SupportSetOptions opt;
  opt.slab_tol = 0.2;
  auto s = plane_cover_support_set(hr, k, x, y, {}, opt);

  VectorXd q = VectorXd::Zero(4);
  CHECK(s.contains(q));  // center
  q << 0.3, 0.1, -0.2, 0.2;
  CHECK(s.contains(q));
  q << 1.6, 0, 0, 0;
  CHECK(!s.contains(q));  // off every slice
  q << 0, 0, 1.8, 0;
  CHECK(!s.contains(q));  // on the central coset, outside the hull

  SUBCASE("empty compact gives the empty predicate") {
    auto empty = plane_cover_support_set(hr, {}, x, y, {}, opt);
    CHECK(!empty.contains(VectorXd::Zero(4)));
  }

  SUBCASE("uncertified pairs are rejected") {
    auto h3 = lie::heisenberg();
    VectorXd e1 = h3.basis_vector(0), e2 = h3.basis_vector(1);
    CHECK_THROWS_AS(plane_cover_support_set(h3, k, e1, e2, {}, opt),
                    ConditionFails);
  }
}

TEST_CASE("shrinking chart balls shrink the coset support set") {
  auto hr = lie::heisenberg_plus_line();
  auto [x, y] = lie::find_commuting_pair(hr, 1);
  support::SupportSetOptions opt;
  opt.slab_tol = 0.12;

  const auto dirs = seeded_directions(4, 500, 7);
  double prev = 1e300;
  for (int n = 1; n <= 3; ++n) {
    PointCloud k;
    for (const auto& d : dirs) k.push_back(d / n);
    auto s = plane_cover_support_set(hr, k, x, y, {}, opt);
    VectorXd lo = VectorXd::Constant(4, -1.2), hi = VectorXd::Constant(4, 1.2);
    auto grid = support::evaluate_occupancy(
        [&](const VectorXd& q) { return s.contains(q); }, lo, hi, 9);
    const double diam = grid.diameter();
    CHECK(diam <= prev + 1e-12);
    prev = diam;
  }
}
