#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gather3d/errors.hpp"
#include "gather3d/geometry.hpp"
#include "gather3d/rng.hpp"
#include "oracles.hpp"

using namespace gather3d;

namespace {
const double kSqrt3 = std::sqrt(3.0);
}

TEST_CASE("triangle peak of a unit segment") {
  const Point3 t = triangle_peak({0, 0, 0}, {1, 0, 0});
  CHECK(t.x == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(t.y == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(t.z == doctest::Approx(0.5 * kSqrt3).epsilon(1e-15));
}

TEST_CASE("triangle peak is symmetric and equilateral") {
  Rng rng(101);
  for (int it = 0; it < 200; ++it) {
    const double z = uniform(rng, -5.0, 5.0);
    const Point3 p{uniform(rng, -5.0, 5.0), uniform(rng, -5.0, 5.0), z};
    const Point3 q{uniform(rng, -5.0, 5.0), uniform(rng, -5.0, 5.0), z};
    if (dist(p, q) < 1e-3) continue;
    const Point3 t1 = triangle_peak(p, q);
    const Point3 t2 = triangle_peak(q, p);
    CHECK(t1 == t2);  // argument order cannot matter
    const double side = dist(p, q);
    CHECK(dist(t1, p) == doctest::Approx(side).epsilon(1e-12));
    CHECK(dist(t1, q) == doctest::Approx(side).epsilon(1e-12));
    CHECK(t1.z > z);  // the peak points upward
  }
}

TEST_CASE("triangle peak rejects bad input") {
  CHECK_THROWS_AS(triangle_peak({0, 0, 0}, {1, 0, 0.5}), NotCoplanar);
  CHECK_THROWS_AS(triangle_peak({0, 0, 0}, {0, 0, 0}), DegenerateSegment);
  CHECK_THROWS_AS(triangle_peak({1, 2, 3}, {1 + 1e-12, 2, 3}), DegenerateSegment);
}

TEST_CASE("cone vertex sits one radius above the center") {
  const CircleZ c{{1.0, 2.0, 3.0}, 2.0, {}};
  const Point3 v = cone_vertex(c);
  CHECK(v.x == 1.0);
  CHECK(v.y == 2.0);
  CHECK(v.z == 5.0);

  CHECK_THROWS_AS(cone_vertex(CircleZ{{0, 0, 0}, 1e-10, {}}), DegenerateCircle);
}

TEST_CASE("minimum enclosing circle of fixed shapes") {
  SUBCASE("single point") {
    const Circle2 c = minimum_enclosing_circle(std::vector<Point3>{{3, 4, 0}});
    CHECK(c.x == 3.0);
    CHECK(c.y == 4.0);
    CHECK(c.r == 0.0);
  }
  SUBCASE("two points: diameter") {
    const Circle2 c =
        minimum_enclosing_circle(std::vector<Point3>{{0, 0, 0}, {4, 0, 0}});
    CHECK(c.x == doctest::Approx(2.0));
    CHECK(c.y == doctest::Approx(0.0));
    CHECK(c.r == doctest::Approx(2.0));
  }
  SUBCASE("obtuse triangle: longest side is the diameter") {
    const Circle2 c = minimum_enclosing_circle(
        std::vector<Point3>{{0, 0, 0}, {4, 0, 0}, {2, 0.2, 0}});
    CHECK(c.x == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(c.y == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(c.r == doctest::Approx(2.0).epsilon(1e-12));
  }
  SUBCASE("equilateral triangle: circumcircle") {
    const Circle2 c = minimum_enclosing_circle(
        std::vector<Point3>{{0, 0, 0}, {1, 0, 0}, {0.5, 0.5 * kSqrt3, 0}});
    CHECK(c.x == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(c.y == doctest::Approx(0.5 / kSqrt3).epsilon(1e-12));
    CHECK(c.r == doctest::Approx(1.0 / kSqrt3).epsilon(1e-12));
  }
  SUBCASE("square plus interior points") {
    const Circle2 c = minimum_enclosing_circle(std::vector<Point3>{
        {1, 1, 0}, {-1, 1, 0}, {-1, -1, 0}, {1, -1, 0}, {0.2, 0.1, 0}, {0, 0, 0}});
    CHECK(c.x == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(c.y == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(c.r == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  }
  SUBCASE("empty input") {
    CHECK_THROWS_AS(minimum_enclosing_circle(std::vector<Point3>{}), EmptyInput);
  }
}

TEST_CASE("minimum enclosing circle does not depend on input order") {
  Rng rng(202);
  for (int it = 0; it < 50; ++it) {
    std::vector<Point3> pts;
    const int n = 3 + static_cast<int>(below(rng, 10));
    for (int i = 0; i < n; ++i)
      pts.push_back({uniform(rng, -5, 5), uniform(rng, -5, 5), 0.0});
    const Circle2 a = minimum_enclosing_circle(pts);
    for (int rep = 0; rep < 3; ++rep) {
      std::shuffle(pts.begin(), pts.end(), rng);
      const Circle2 b = minimum_enclosing_circle(pts);
      CHECK(a.x == b.x);
      CHECK(a.y == b.y);
      CHECK(a.r == b.r);
    }
  }
}

TEST_CASE("minimum enclosing circle agrees with the brute-force oracle") {
  Rng rng(303);
  for (int it = 0; it < 200; ++it) {
    std::vector<Point3> pts;
    const int n = 1 + static_cast<int>(below(rng, 12));
    for (int i = 0; i < n; ++i)
      pts.push_back({uniform(rng, -5, 5), uniform(rng, -5, 5), 0.0});
    const Circle2 got = minimum_enclosing_circle(pts);
    const oracles::Circle want = oracles::mec_bruteforce(pts);
    CHECK(std::abs(got.r - want.r) <= 1e-9);
    CHECK(std::abs(got.x - want.x) <= 1e-9);
    CHECK(std::abs(got.y - want.y) <= 1e-9);
  }
}

TEST_CASE("compute_circle on one and two points") {
  const Tolerances tol;
  const CircleZ one = compute_circle(std::vector<Point3>{{2, 3, 1}}, tol);
  CHECK(one.radius == 0.0);
  CHECK(one.center == Point3{2, 3, 1});
  CHECK(one.on_circle.size() == 1);

  const CircleZ two =
      compute_circle(std::vector<Point3>{{0, 0, 1}, {4, 0, 1}}, tol);
  CHECK(two.center.x == doctest::Approx(2.0));
  CHECK(two.center.z == doctest::Approx(1.0));
  CHECK(two.radius == doctest::Approx(2.0));
  CHECK(two.on_circle.size() == 2);
}

TEST_CASE("compute_circle prefers the circle through co-circular points") {
  /* An obtuse triple is still co-circular, so the circumcircle wins even
   * though the minimum enclosing circle would be smaller. */
  const std::vector<Point3> tri{{0, 0, 0}, {4, 0, 0}, {2, 0.2, 0}};
  const CircleZ c = compute_circle(tri);
  const double want_r = oracles::circumradius(tri[0], tri[1], tri[2]);
  CHECK(c.radius == doctest::Approx(want_r).epsilon(1e-12));
  CHECK(c.radius > 2.0);  // strictly larger than the enclosing circle
  CHECK(c.on_circle.size() == 3);

  const Circle2 mec = minimum_enclosing_circle(tri);
  CHECK(mec.r == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("compute_circle on points of a known circle") {
  std::vector<Point3> pts;
  for (double deg : {10.0, 80.0, 150.0, 260.0, 340.0}) {
    const double a = deg * std::numbers::pi / 180.0;
    pts.push_back({3.0 + 2.0 * std::cos(a), -1.0 + 2.0 * std::sin(a), 0.5});
  }
  const CircleZ c = compute_circle(pts);
  CHECK(c.center.x == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(c.center.y == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(c.center.z == doctest::Approx(0.5));
  CHECK(c.radius == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(c.on_circle.size() == pts.size());
}

TEST_CASE("compute_circle falls back to the enclosing circle") {
  /* Square corners plus a strictly interior point: not co-circular. */
  std::vector<Point3> pts{
      {1, 1, 0}, {-1, 1, 0}, {-1, -1, 0}, {1, -1, 0}, {0.3, 0.2, 0}};
  const CircleZ c = compute_circle(pts);
  CHECK(c.radius == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(c.center.x == doctest::Approx(0.0).epsilon(1e-12));
  REQUIRE(c.on_circle.size() == 4);  // the interior point is excluded
  for (const Point3& p : c.on_circle)
    CHECK(dist_xy(p, c.center) == doctest::Approx(c.radius).epsilon(1e-12));
}

TEST_CASE("compute_circle membership boundary") {
  const double r = std::sqrt(2.0);
  std::vector<Point3> base{{1, 1, 0}, {-1, 1, 0}, {-1, -1, 0}, {1, -1, 0}};

  SUBCASE("a point 2e-9 inside the circle is not on it") {
    std::vector<Point3> pts = base;
    pts.push_back({r - 2e-9, 0, 0});
    const CircleZ c = compute_circle(pts);
    CHECK(c.on_circle.size() == 4);
  }
  SUBCASE("a point 0.5e-9 off the circle counts as on it") {
    std::vector<Point3> pts = base;
    pts.push_back({r - 0.5e-9, 0, 0});
    const CircleZ c = compute_circle(pts);
    CHECK(c.on_circle.size() == 5);
  }
}

TEST_CASE("compute_circle validates the plane") {
  CHECK_THROWS_AS(
      compute_circle(std::vector<Point3>{{0, 0, 0}, {1, 0, 1e-6}}), NotCoplanar);
  CHECK_THROWS_AS(compute_circle(std::vector<Point3>{}), EmptyInput);
}

TEST_CASE("compute_circle of collinear points") {
  /* Collinear points are never co-circular; the enclosing circle spans the
   * extreme pair. */
  const CircleZ c = compute_circle(
      std::vector<Point3>{{0, 0, 0}, {1, 1, 0}, {3, 3, 0}, {2, 2, 0}});
  CHECK(c.radius == doctest::Approx(0.5 * std::hypot(3.0, 3.0)).epsilon(1e-12));
  CHECK(c.center.x == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(c.on_circle.size() == 2);
}

TEST_CASE("closest point picks the lexicographically smallest tie") {
  const std::vector<Point3> cands{{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}};
  const Point3 c = closest_point({0, 0, 0}, cands);
  CHECK(c == Point3{-1, 0, 0});

  const std::vector<Point3> one{{5, 5, 5}};
  CHECK(closest_point({0, 0, 0}, one) == Point3{5, 5, 5});

  CHECK_THROWS_AS(closest_point({0, 0, 0}, std::vector<Point3>{}), EmptyInput);
}

TEST_CASE("closest point returns a candidate verbatim") {
  Rng rng(404);
  for (int it = 0; it < 100; ++it) {
    std::vector<Point3> cands;
    const int n = 1 + static_cast<int>(below(rng, 8));
    for (int i = 0; i < n; ++i)
      cands.push_back({uniform(rng, -5, 5), uniform(rng, -5, 5), uniform(rng, -5, 5)});
    const Point3 from{uniform(rng, -5, 5), uniform(rng, -5, 5), uniform(rng, -5, 5)};
    const Point3 got = closest_point(from, cands);
    bool found = false;
    for (const Point3& c : cands) {
      CHECK(dist(from, got) <= dist(from, c) + 1e-15);
      if (got == c) found = true;
    }
    CHECK(found);
  }
}

TEST_CASE("geometry is equivariant under z-preserving similarities") {
  Rng rng(505);
  for (int it = 0; it < 200; ++it) {
    const oracles::WorldMap g = oracles::random_world_map(rng);

    /* triangle peak */
    const double z = uniform(rng, -3, 3);
    const Point3 p{uniform(rng, -5, 5), uniform(rng, -5, 5), z};
    const Point3 q{uniform(rng, -5, 5), uniform(rng, -5, 5), z};
    if (dist(p, q) > 1e-3) {
      const Point3 direct = g(triangle_peak(p, q));
      const Point3 mapped = triangle_peak(g(p), g(q));
      CHECK(dist(direct, mapped) <= 1e-9 * std::max(1.0, norm(direct)));
    }

    /* enclosing circle of a coplanar cloud */
    std::vector<Point3> pts;
    const int n = 3 + static_cast<int>(below(rng, 9));
    for (int i = 0; i < n; ++i)
      pts.push_back({uniform(rng, -5, 5), uniform(rng, -5, 5), z});
    std::vector<Point3> mapped_pts;
    for (const Point3& pt : pts) mapped_pts.push_back(g(pt));
    const CircleZ c1 = compute_circle(pts);
    const CircleZ c2 = compute_circle(mapped_pts);
    const Point3 mc = g(c1.center);
    CHECK(std::abs(c2.radius - g.scale * c1.radius) <=
          1e-9 * std::max(1.0, c2.radius));
    CHECK(dist_xy(c2.center, mc) <= 1e-9 * std::max(1.0, norm(mc)));
    CHECK(c1.on_circle.size() == c2.on_circle.size());

    /* cone vertex rides along */
    if (c1.radius > 1e-3) {
      const Point3 v1 = g(cone_vertex(c1));
      const Point3 v2 = cone_vertex(c2);
      CHECK(dist(v1, v2) <= 1e-9 * std::max(1.0, norm(v1)));
    }
  }
}

TEST_CASE("tolerance ordering is enforced") {
  Tolerances t;
  t.eps_geom = 1e-6;
  t.eps_z = 1e-9;  // looser geom than z: invalid
  CHECK_THROWS_AS(t.validate(), std::invalid_argument);

  Tolerances t2;
  t2.eps_gather = 1e-12;  // tighter than eps_z: invalid
  CHECK_THROWS_AS(t2.validate(), std::invalid_argument);

  Tolerances ok;
  CHECK_NOTHROW(ok.validate());
}
