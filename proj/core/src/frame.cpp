#include "gather3d/frame.hpp"

#include <cmath>
#include <stdexcept>

namespace gather3d {

void LocalFrame::validate() const {
  if (!all_finite(origin)) throw std::invalid_argument("frame: non-finite origin");
  if (!std::isfinite(rotation)) throw std::invalid_argument("frame: non-finite rotation");
  if (!(scale > 0.0) || !std::isfinite(scale))
    throw std::invalid_argument("frame: scale must be positive and finite");
}

Point3 to_local(const LocalFrame& f, const Point3& p) {
  const double dx = p.x - f.origin.x;
  const double dy = p.y - f.origin.y;
  const double dz = p.z - f.origin.z;
  const double c = std::cos(f.rotation);
  const double s = std::sin(f.rotation);
  const double rx = c * dx + s * dy;
  double ry = -s * dx + c * dy;
  if (f.reflect) ry = -ry;
  return {rx / f.scale, ry / f.scale, dz / f.scale};
}

Point3 to_global(const LocalFrame& f, const Point3& q) {
  const double wx = q.x * f.scale;
  double wy = q.y * f.scale;
  const double wz = q.z * f.scale;
  if (f.reflect) wy = -wy;
  const double c = std::cos(f.rotation);
  const double s = std::sin(f.rotation);
  return {f.origin.x + c * wx - s * wy,
          f.origin.y + s * wx + c * wy,
          f.origin.z + wz};
}

}  // namespace gather3d
