#ifndef GATHER3D_FRAME_HPP
#define GATHER3D_FRAME_HPP

#include "gather3d/geometry.hpp"

namespace gather3d {

/* Private coordinate system of one robot.  Robots agree on the direction
 * of +z and on nothing else: each one sees the world translated to its own
 * position, rotated about z, possibly mirrored, and rescaled.
 *
 *   local = S^-1 * F * R(rotation) * (global - origin)
 *
 * where R is a rotation about z, F flips y when `reflect` is set, and S
 * scales by `scale` (the global length of one local unit). */
struct LocalFrame {
  Point3 origin;
  double rotation = 0.0;  // radians
  bool reflect = false;
  double scale = 1.0;     // > 0

  void validate() const;  // throws std::invalid_argument
};

Point3 to_local(const LocalFrame& f, const Point3& global);
Point3 to_global(const LocalFrame& f, const Point3& local);

inline LocalFrame identity_frame(const Point3& origin) {
  return {origin, 0.0, false, 1.0};
}

}  // namespace gather3d

#endif
