#ifndef GATHER3D_GEOMETRY_HPP
#define GATHER3D_GEOMETRY_HPP

#include <span>
#include <vector>

namespace gather3d {

struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

inline bool operator==(const Point3& a, const Point3& b) {
  return a.x == b.x && a.y == b.y && a.z == b.z;
}
inline Point3 operator+(const Point3& a, const Point3& b) {
  return {a.x + b.x, a.y + b.y, a.z + b.z};
}
inline Point3 operator-(const Point3& a, const Point3& b) {
  return {a.x - b.x, a.y - b.y, a.z - b.z};
}
inline Point3 operator*(double s, const Point3& p) {
  return {s * p.x, s * p.y, s * p.z};
}

double norm(const Point3& p);
double dist(const Point3& a, const Point3& b);
double dist2(const Point3& a, const Point3& b);
/* Distance of the xy-projections; z is ignored. */
double dist_xy(const Point3& a, const Point3& b);
/* Strict ordering by (x, y, z). */
bool lex_less(const Point3& a, const Point3& b);
bool all_finite(const Point3& p);

/* The three tolerance scales, from strictest to loosest:
 * eps_geom (circle membership) <= eps_z (plane clustering)
 * <= eps_gather (co-location). */
struct Tolerances {
  double eps_z = 1e-9;
  double eps_geom = 1e-9;
  double eps_gather = 1e-6;

  void validate() const;  // throws std::invalid_argument
};

/* Horizontal circle.  center.z is the plane height; on_circle holds the
 * input points that lie on the circumference, in input (sorted) order. */
struct CircleZ {
  Point3 center;
  double radius = 0.0;
  std::vector<Point3> on_circle;
};

/* Circle in the xy-plane. */
struct Circle2 {
  double x = 0.0;
  double y = 0.0;
  double r = 0.0;
};

/* Apex of the equilateral triangle erected over pq, in the vertical plane
 * through p and q, pointing upward.  Symmetric in its arguments.
 * Throws NotCoplanar if p, q differ in z by more than eps_z, and
 * DegenerateSegment if they are closer than eps_geom. */
Point3 triangle_peak(const Point3& p, const Point3& q, const Tolerances& tol = {});

/* Apex of the upward cone with 45-degree slope over c: directly above the
 * center at height center.z + radius.  Throws DegenerateCircle when the
 * radius is at most eps_geom. */
Point3 cone_vertex(const CircleZ& c, const Tolerances& tol = {});

/* Minimum enclosing circle of the xy-projections.  Deterministic: the
 * result depends only on the point set, not on input order. */
Circle2 minimum_enclosing_circle(std::span<const Point3> points);

/* Circle through the points if they are co-circular within eps_geom
 * (the circle through the first non-collinear triple, in lexicographic
 * order), otherwise their minimum enclosing circle.  One point gives a
 * zero-radius circle, two points the circle with pq as diameter.
 * All points must share a z-plane within eps_z. */
CircleZ compute_circle(std::span<const Point3> points, const Tolerances& tol = {});

/* Candidate with minimum Euclidean distance from `from`; ties go to the
 * lexicographically smallest candidate. */
Point3 closest_point(const Point3& from, std::span<const Point3> candidates);

}  // namespace gather3d

#endif
