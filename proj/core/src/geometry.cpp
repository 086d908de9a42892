#include "gather3d/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "gather3d/errors.hpp"
#include "gather3d/rng.hpp"

namespace gather3d {

double norm(const Point3& p) { return std::sqrt(p.x * p.x + p.y * p.y + p.z * p.z); }

double dist(const Point3& a, const Point3& b) { return norm(a - b); }

double dist2(const Point3& a, const Point3& b) {
  const Point3 d = a - b;
  return d.x * d.x + d.y * d.y + d.z * d.z;
}

double dist_xy(const Point3& a, const Point3& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

bool lex_less(const Point3& a, const Point3& b) {
  if (a.x != b.x) return a.x < b.x;
  if (a.y != b.y) return a.y < b.y;
  return a.z < b.z;
}

bool all_finite(const Point3& p) {
  return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.z);
}

void Tolerances::validate() const {
  if (!(eps_geom > 0.0) || !(eps_z > 0.0) || !(eps_gather > 0.0))
    throw std::invalid_argument("tolerances must be positive");
  if (eps_geom > eps_z || eps_z > eps_gather)
    throw std::invalid_argument("tolerances must satisfy eps_geom <= eps_z <= eps_gather");
}

Point3 triangle_peak(const Point3& p, const Point3& q, const Tolerances& tol) {
  tol.validate();
  if (std::abs(p.z - q.z) > tol.eps_z)
    throw NotCoplanar("triangle_peak: endpoints differ in z");
  const double side = dist(p, q);
  if (side <= tol.eps_geom)
    throw DegenerateSegment("triangle_peak: endpoints coincide");
  /* Midpoint form keeps the result symmetric in p and q. */
  return {0.5 * (p.x + q.x), 0.5 * (p.y + q.y),
          0.5 * (p.z + q.z) + 0.5 * std::numbers::sqrt3 * side};
}

Point3 cone_vertex(const CircleZ& c, const Tolerances& tol) {
  tol.validate();
  if (c.radius <= tol.eps_geom)
    throw DegenerateCircle("cone_vertex: radius too small");
  return {c.center.x, c.center.y, c.center.z + c.radius};
}

namespace {

bool in_circle(const Point3& p, const Circle2& c) {
  const double dx = p.x - c.x;
  const double dy = p.y - c.y;
  const double r2 = c.r * c.r;
  return dx * dx + dy * dy <= r2 + 1e-14 * std::max(1.0, r2);
}

Circle2 circle_two(const Point3& a, const Point3& b) {
  return {0.5 * (a.x + b.x), 0.5 * (a.y + b.y), 0.5 * dist_xy(a, b)};
}

/* Circumcircle in xy.  Falls back to the widest two-point circle when the
 * triple is (nearly) collinear. */
Circle2 circle_three(const Point3& a, const Point3& b, const Point3& c) {
  const double bx = b.x - a.x, by = b.y - a.y;
  const double cx = c.x - a.x, cy = c.y - a.y;
  const double d = 2.0 * (bx * cy - by * cx);
  const double b2 = bx * bx + by * by;
  const double c2 = cx * cx + cy * cy;
  if (std::abs(d) < 1e-30 * std::max(1.0, std::max(b2, c2))) {
    Circle2 best = circle_two(a, b);
    for (const Circle2& cand : {circle_two(a, c), circle_two(b, c)})
      if (cand.r > best.r) best = cand;
    return best;
  }
  const double ux = (cy * b2 - by * c2) / d;
  const double uy = (bx * c2 - cx * b2) / d;
  return {a.x + ux, a.y + uy, std::hypot(ux, uy)};
}

std::vector<Point3> sorted_lex(std::span<const Point3> points) {
  std::vector<Point3> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), lex_less);
  return pts;
}

}  // namespace

Circle2 minimum_enclosing_circle(std::span<const Point3> points) {
  if (points.empty()) throw EmptyInput("minimum_enclosing_circle: no points");
  /* Canonical order, then a fixed-seed shuffle: the expected-linear
   * incremental construction sees the same sequence for any input order. */
  std::vector<Point3> pts = sorted_lex(points);
  Rng rng(0x9e3779b97f4a7c15ull);
  std::shuffle(pts.begin(), pts.end(), rng);

  Circle2 c{pts[0].x, pts[0].y, 0.0};
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (in_circle(pts[i], c)) continue;
    c = {pts[i].x, pts[i].y, 0.0};
    for (std::size_t j = 0; j < i; ++j) {
      if (in_circle(pts[j], c)) continue;
      c = circle_two(pts[i], pts[j]);
      for (std::size_t k = 0; k < j; ++k) {
        if (in_circle(pts[k], c)) continue;
        c = circle_three(pts[i], pts[j], pts[k]);
      }
    }
  }
  return c;
}

CircleZ compute_circle(std::span<const Point3> points, const Tolerances& tol) {
  tol.validate();
  if (points.empty()) throw EmptyInput("compute_circle: no points");
  for (const Point3& p : points)
    if (!all_finite(p)) throw std::invalid_argument("compute_circle: non-finite point");

  std::vector<Point3> pts = sorted_lex(points);
  double zmin = pts[0].z, zmax = pts[0].z;
  for (const Point3& p : pts) {
    zmin = std::min(zmin, p.z);
    zmax = std::max(zmax, p.z);
  }
  if (zmax - zmin > tol.eps_z)
    throw NotCoplanar("compute_circle: points span more than eps_z");
  double zc = 0.0;
  for (const Point3& p : pts) zc += p.z;
  zc /= static_cast<double>(pts.size());

  if (pts.size() == 1) return {pts[0], 0.0, pts};
  if (pts.size() == 2) {
    const Circle2 c = circle_two(pts[0], pts[1]);
    return {{c.x, c.y, zc}, c.r, pts};
  }

  /* Any non-collinear triple spans a circle; if every point sits on the
   * one through the first such triple, that circle wins even when it is
   * larger than the minimum enclosing circle. */
  const std::size_t m = pts.size();
  bool found = false;
  Circle2 through{};
  for (std::size_t i = 0; i < m && !found; ++i)
    for (std::size_t j = i + 1; j < m && !found; ++j)
      for (std::size_t k = j + 1; k < m && !found; ++k) {
        const double abx = pts[j].x - pts[i].x, aby = pts[j].y - pts[i].y;
        const double acx = pts[k].x - pts[i].x, acy = pts[k].y - pts[i].y;
        const double twice_area = std::abs(abx * acy - aby * acx);
        const double lab = std::hypot(abx, aby), lac = std::hypot(acx, acy);
        if (twice_area > 1e-12 * std::max(1.0, lab * lac)) {
          through = circle_three(pts[i], pts[j], pts[k]);
          found = true;
        }
      }
  if (found) {
    bool cocircular = true;
    for (const Point3& p : pts) {
      const double d = std::hypot(p.x - through.x, p.y - through.y);
      if (std::abs(d - through.r) > tol.eps_geom) {
        cocircular = false;
        break;
      }
    }
    if (cocircular) return {{through.x, through.y, zc}, through.r, pts};
  }

  const Circle2 mec = minimum_enclosing_circle(pts);
  CircleZ out{{mec.x, mec.y, zc}, mec.r, {}};
  for (const Point3& p : pts) {
    const double d = std::hypot(p.x - mec.x, p.y - mec.y);
    if (std::abs(d - mec.r) <= tol.eps_geom) out.on_circle.push_back(p);
  }
  return out;
}

Point3 closest_point(const Point3& from, std::span<const Point3> candidates) {
  if (candidates.empty()) throw EmptyInput("closest_point: no candidates");
  const Point3* best = &candidates[0];
  double best_d = dist2(from, candidates[0]);
  for (const Point3& c : candidates.subspan(1)) {
    const double d = dist2(from, c);
    if (d < best_d || (d == best_d && lex_less(c, *best))) {
      best = &c;
      best_d = d;
    }
  }
  return *best;
}

}  // namespace gather3d
