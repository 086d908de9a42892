#ifndef GATHER3D_DESTINATION_HPP
#define GATHER3D_DESTINATION_HPP

#include <span>
#include <string_view>
#include <vector>

#include "gather3d/configuration.hpp"
#include "gather3d/frame.hpp"

namespace gather3d {

/* What a robot saw during its Look phase, in its own frame.  The observer
 * is always at the origin and the origin is always one of the entries. */
struct Snapshot {
  std::vector<Point3> seen;
};

enum class MoveRule { Stay, TrianglePeak, ConeVertex, NearestOnCircle };

const char* to_string(MoveRule r);
bool parse_move_rule(std::string_view s, MoveRule& out);

struct Destination {
  Point3 point;
  MoveRule rule = MoveRule::Stay;
};

/* Global positions as seen through `frame`.  Deduplication keeps the
 * observer's own position as the representative of its cluster, so the
 * local origin is a member of the result exactly. */
Snapshot make_snapshot(const LocalFrame& frame,
                       std::span<const Point3> global_positions,
                       const Tolerances& tol = {});

/* The destination decision over a local snapshot.  The observer (at the
 * origin) either stays, climbs to the triangle peak or cone vertex of the
 * topmost plane, or walks to the nearest point on its circle. */
Destination compute_destination(const Snapshot& snap, const Tolerances& tol = {});

/* One full Compute: snapshot through the frame, decide, map back.  The
 * Stay rule returns the frame origin bitwise. */
Destination gathering3d_step(const LocalFrame& frame,
                             std::span<const Point3> global_positions,
                             const Tolerances& tol = {});

}  // namespace gather3d

#endif
