#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gather3d/destination.hpp"
#include "gather3d/errors.hpp"
#include "gather3d/frame.hpp"
#include "gather3d/rng.hpp"
#include "oracles.hpp"

using namespace gather3d;

namespace {

LocalFrame random_frame(const Point3& origin, Rng& rng) {
  LocalFrame f;
  f.origin = origin;
  f.rotation = uniform(rng, 0.0, 2.0 * std::numbers::pi);
  f.reflect = (rng() & 1u) != 0;
  f.scale = uniform(rng, 0.5, 2.0);
  return f;
}

}  // namespace

TEST_CASE("frame transforms invert each other") {
  Rng rng(11);
  for (int it = 0; it < 200; ++it) {
    const LocalFrame f =
        random_frame({uniform(rng, -5, 5), uniform(rng, -5, 5), uniform(rng, -5, 5)}, rng);
    const Point3 p{uniform(rng, -5, 5), uniform(rng, -5, 5), uniform(rng, -5, 5)};
    const Point3 back = to_global(f, to_local(f, p));
    CHECK(dist(back, p) <= 1e-12 * std::max(1.0, norm(p)));
  }
}

TEST_CASE("the frame origin maps to the exact local origin") {
  Rng rng(12);
  for (int it = 0; it < 50; ++it) {
    const LocalFrame f =
        random_frame({uniform(rng, -5, 5), uniform(rng, -5, 5), uniform(rng, -5, 5)}, rng);
    const Point3 l = to_local(f, f.origin);
    CHECK(l.x == 0.0);
    CHECK(l.y == 0.0);
    CHECK(l.z == 0.0);
  }
}

TEST_CASE("frames preserve up") {
  Rng rng(13);
  for (int it = 0; it < 100; ++it) {
    const LocalFrame f =
        random_frame({uniform(rng, -5, 5), uniform(rng, -5, 5), uniform(rng, -5, 5)}, rng);
    const Point3 above = f.origin + Point3{uniform(rng, -1, 1), uniform(rng, -1, 1),
                                           uniform(rng, 0.1, 3.0)};
    CHECK(to_local(f, above).z > 0.0);
    /* z-differences scale but never flip or mix into xy */
    const Point3 l = to_local(f, above);
    CHECK(l.z == doctest::Approx((above.z - f.origin.z) / f.scale).epsilon(1e-12));
  }
}

TEST_CASE("reflection flips orientation in the xy plane") {
  LocalFrame f = identity_frame({0, 0, 0});
  f.reflect = true;
  const Point3 ex = to_local(f, {1, 0, 0});
  const Point3 ey = to_local(f, {0, 1, 0});
  const double cross = ex.x * ey.y - ex.y * ey.x;
  CHECK(cross < 0.0);

  f.reflect = false;
  const Point3 fx = to_local(f, {1, 0, 0});
  const Point3 fy = to_local(f, {0, 1, 0});
  CHECK(fx.x * fy.y - fx.y * fy.x > 0.0);
}

TEST_CASE("frame validation") {
  LocalFrame f = identity_frame({0, 0, 0});
  f.scale = 0.0;
  CHECK_THROWS_AS(f.validate(), std::invalid_argument);
  f.scale = -1.0;
  CHECK_THROWS_AS(f.validate(), std::invalid_argument);
  f.scale = 1.0;
  f.rotation = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(f.validate(), std::invalid_argument);
}

TEST_CASE("snapshots keep the observer at the exact origin") {
  Rng rng(14);
  for (int it = 0; it < 50; ++it) {
    const Point3 self{uniform(rng, -5, 5), uniform(rng, -5, 5), uniform(rng, -5, 5)};
    const LocalFrame f = random_frame(self, rng);
    std::vector<Point3> pos{self};
    for (int i = 0; i < 5; ++i)
      pos.push_back({uniform(rng, -5, 5), uniform(rng, -5, 5), uniform(rng, -5, 5)});
    const Snapshot s = make_snapshot(f, pos, {});
    REQUIRE(s.seen.size() == 6);
    bool has_origin = false;
    for (const Point3& p : s.seen)
      if (p.x == 0.0 && p.y == 0.0 && p.z == 0.0) has_origin = true;
    CHECK(has_origin);
  }
}

TEST_CASE("snapshots collapse co-located robots around the observer") {
  /* Another robot within eps_gather of the observer must fold into the
   * observer's own cluster, so the origin stays a configuration point. */
  const Point3 self{1, 2, 3};
  LocalFrame f = identity_frame(self);
  f.scale = 0.25;  // local distances are 4x larger: dedup must happen globally
  const std::vector<Point3> pos{self, {1 + 4e-7, 2, 3}, {5, 5, 5}};
  const Snapshot s = make_snapshot(f, pos, {});
  REQUIRE(s.seen.size() == 2);
  CHECK(s.seen[0] == Point3{0, 0, 0});
}

TEST_CASE("destination rules over local snapshots") {
  const Tolerances tol;

  SUBCASE("alone: stay") {
    const Destination d = compute_destination(Snapshot{{{0, 0, 0}}}, tol);
    CHECK(d.rule == MoveRule::Stay);
    CHECK(d.point == Point3{0, 0, 0});
  }
  SUBCASE("alone on top: stay") {
    const Destination d = compute_destination(
        Snapshot{{{0, 0, 0}, {1, 0, -2}, {0, 1, -2}}}, tol);
    CHECK(d.rule == MoveRule::Stay);
    CHECK(d.point == Point3{0, 0, 0});
  }
  SUBCASE("two on top: triangle peak") {
    const Destination d =
        compute_destination(Snapshot{{{0, 0, 0}, {2, 0, 0}, {1, 1, -3}}}, tol);
    CHECK(d.rule == MoveRule::TrianglePeak);
    CHECK(d.point.x == doctest::Approx(1.0));
    CHECK(d.point.y == doctest::Approx(0.0));
    CHECK(d.point.z == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
  }
  SUBCASE("on the top circle: cone vertex") {
    /* observer on a unit circle with three others */
    const Destination d = compute_destination(
        Snapshot{{{0, 0, 0}, {2, 0, 0}, {1, 1, 0}, {1, -1, 0}}}, tol);
    CHECK(d.rule == MoveRule::ConeVertex);
    CHECK(d.point.x == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(d.point.y == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(d.point.z == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("inside the top circle: walk to the nearest rim point") {
    const Destination d = compute_destination(
        Snapshot{{{0, 0, 0}, {0.2, 0, 0}, {-1.5, 1, 0}, {-1.5, -1, 0},
                  {2.5, 0.4, 0}}},
        tol);
    CHECK(d.rule == MoveRule::NearestOnCircle);
    /* (-1.5,1) and (-1.5,-1) are equally near; lex order breaks the tie */
    CHECK(d.point == Point3{-1.5, -1, 0});
  }
  SUBCASE("below the top plane: walk under its circle") {
    const Destination d = compute_destination(
        Snapshot{{{0, 0, 0}, {0, 2, 5}, {2, 0, 5}, {-2, 0, 5}}}, tol);
    CHECK(d.rule == MoveRule::NearestOnCircle);
    /* all three rim points are equally far; lex order picks (-2,0,5) */
    CHECK(d.point == Point3{-2, 0, 5});
  }
}

TEST_CASE("a robot computing stay returns its own position bitwise") {
  Rng rng(15);
  for (int it = 0; it < 50; ++it) {
    const Point3 self{uniform(rng, -5, 5), uniform(rng, -5, 5), uniform(rng, 2, 5)};
    const LocalFrame f = random_frame(self, rng);
    /* self is the unique top robot */
    std::vector<Point3> pos{self};
    for (int i = 0; i < 4; ++i)
      pos.push_back({uniform(rng, -5, 5), uniform(rng, -5, 5), uniform(rng, -5, 0)});
    const Destination d = gathering3d_step(f, pos, {});
    CHECK(d.rule == MoveRule::Stay);
    CHECK(d.point == self);
  }
}

TEST_CASE("destinations do not depend on the local frame") {
  Rng rng(16);
  const Tolerances tol;
  int accepted = 0;
  while (accepted < 200) {
    std::vector<Point3> pos;
    const int n = 2 + static_cast<int>(below(rng, 9));
    const bool coplanar = (rng() & 1u) != 0;
    const double z0 = uniform(rng, -3, 3);
    for (int i = 0; i < n; ++i)
      pos.push_back({uniform(rng, -4, 4), uniform(rng, -4, 4),
                     coplanar ? z0 : uniform(rng, -3, 3)});
    if (!oracles::decision_robust(pos, tol)) continue;
    ++accepted;

    for (const Point3& self : pos) {
      const Destination base = gathering3d_step(identity_frame(self), pos, tol);
      for (int rep = 0; rep < 3; ++rep) {
        const LocalFrame f = random_frame(self, rng);
        const Destination d = gathering3d_step(f, pos, tol);
        CHECK(d.rule == base.rule);
        CHECK(dist(d.point, base.point) <=
              1e-9 * std::max({1.0, norm(d.point), norm(base.point)}));
      }
    }
  }
}
