#include "gather3d/destination.hpp"

#include <algorithm>

#include "gather3d/errors.hpp"

namespace gather3d {

const char* to_string(MoveRule r) {
  switch (r) {
    case MoveRule::Stay: return "stay";
    case MoveRule::TrianglePeak: return "triangle_peak";
    case MoveRule::ConeVertex: return "cone_vertex";
    case MoveRule::NearestOnCircle: return "nearest_on_circle";
  }
  return "?";
}

bool parse_move_rule(std::string_view s, MoveRule& out) {
  if (s == "stay") out = MoveRule::Stay;
  else if (s == "triangle_peak") out = MoveRule::TrianglePeak;
  else if (s == "cone_vertex") out = MoveRule::ConeVertex;
  else if (s == "nearest_on_circle") out = MoveRule::NearestOnCircle;
  else return false;
  return true;
}

Snapshot make_snapshot(const LocalFrame& frame,
                       std::span<const Point3> global_positions,
                       const Tolerances& tol) {
  tol.validate();
  frame.validate();
  if (global_positions.empty()) throw EmptyInput("make_snapshot: no positions");

  /* Deduplicate in global coordinates with the observer first, so its own
   * position represents its cluster and maps to the exact local origin. */
  std::vector<Point3> ordered;
  ordered.reserve(global_positions.size() + 1);
  ordered.push_back(frame.origin);
  ordered.insert(ordered.end(), global_positions.begin(), global_positions.end());
  std::sort(ordered.begin() + 1, ordered.end(), lex_less);

  std::vector<Point3> kept;
  for (const Point3& p : ordered) {
    bool taken = false;
    for (const Point3& k : kept)
      if (dist(p, k) <= tol.eps_gather) {
        taken = true;
        break;
      }
    if (!taken) kept.push_back(p);
  }

  Snapshot snap;
  snap.seen.reserve(kept.size());
  for (const Point3& p : kept) snap.seen.push_back(to_local(frame, p));
  snap.seen.front() = {0.0, 0.0, 0.0};  // the observer itself, exactly
  return snap;
}

Destination compute_destination(const Snapshot& snap, const Tolerances& tol) {
  const Point3 self{0.0, 0.0, 0.0};
  const Configuration cfg = Configuration::from_points(snap.seen, tol);
  const PlaneStack ps = decompose(cfg);
  const int k = check_level(ps, self);
  const std::vector<Point3>& top = ps.planes.front().members;

  if (k == 1) {
    if (top.size() == 1) return {self, MoveRule::Stay};
    if (top.size() == 2)
      return {triangle_peak(top[0], top[1], tol), MoveRule::TrianglePeak};
    const CircleZ circle = compute_circle(top, tol);
    for (const Point3& m : circle.on_circle)
      if (dist(self, m) <= tol.eps_gather)
        return {cone_vertex(circle, tol), MoveRule::ConeVertex};
    return {closest_point(self, circle.on_circle), MoveRule::NearestOnCircle};
  }

  /* Below the top plane: approach it by walking under its circle. */
  const CircleZ circle = compute_circle(top, tol);
  return {closest_point(self, circle.on_circle), MoveRule::NearestOnCircle};
}

Destination gathering3d_step(const LocalFrame& frame,
                             std::span<const Point3> global_positions,
                             const Tolerances& tol) {
  const Snapshot snap = make_snapshot(frame, global_positions, tol);
  const Destination local = compute_destination(snap, tol);
  if (local.rule == MoveRule::Stay) return {frame.origin, MoveRule::Stay};
  return {to_global(frame, local.point), local.rule};
}

}  // namespace gather3d
