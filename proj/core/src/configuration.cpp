#include "gather3d/configuration.hpp"

#include <algorithm>
#include <stdexcept>

#include "gather3d/errors.hpp"

namespace gather3d {

const char* to_string(ConfigClass c) {
  switch (c) {
    case ConfigClass::C1: return "C1";
    case ConfigClass::C2: return "C2";
    case ConfigClass::Cgt2: return "C>2";
  }
  return "?";
}

Configuration Configuration::from_points(std::span<const Point3> pts,
                                         const Tolerances& tol) {
  tol.validate();
  if (pts.empty()) throw EmptyInput("configuration: no positions");
  for (const Point3& p : pts)
    if (!all_finite(p)) throw std::invalid_argument("configuration: non-finite position");

  std::vector<Point3> sorted(pts.begin(), pts.end());
  std::sort(sorted.begin(), sorted.end(), lex_less);

  Configuration c;
  c.tol = tol;
  for (const Point3& p : sorted) {
    bool taken = false;
    for (const Point3& kept : c.positions)
      if (dist(p, kept) <= tol.eps_gather) {
        taken = true;
        break;
      }
    if (!taken) c.positions.push_back(p);
  }
  return c;
}

PlaneStack decompose(const Configuration& c) {
  if (c.positions.empty()) throw EmptyInput("decompose: empty configuration");
  std::vector<Point3> pts = c.positions;
  std::sort(pts.begin(), pts.end(), [](const Point3& a, const Point3& b) {
    if (a.z != b.z) return a.z > b.z;
    return lex_less(a, b);
  });

  PlaneStack ps;
  ps.tol = c.tol;
  std::size_t begin = 0;
  for (std::size_t i = 1; i <= pts.size(); ++i) {
    /* Single linkage: the gap to the previous member decides. */
    if (i == pts.size() || pts[i - 1].z - pts[i].z > c.tol.eps_z) {
      Plane plane;
      plane.z_level = 0.5 * (pts[begin].z + pts[i - 1].z);
      plane.members.assign(pts.begin() + begin, pts.begin() + i);
      std::sort(plane.members.begin(), plane.members.end(), lex_less);
      ps.planes.push_back(std::move(plane));
      begin = i;
    }
  }
  return ps;
}

ConfigClass classify(const PlaneStack& ps) {
  if (ps.planes.empty()) throw EmptyInput("classify: no planes");
  const std::size_t h = ps.planes.front().members.size();
  if (h == 1) return ConfigClass::C1;
  if (h == 2) return ConfigClass::C2;
  return ConfigClass::Cgt2;
}

int check_level(const PlaneStack& ps, const Point3& p) {
  if (ps.planes.empty()) throw EmptyInput("check_level: no planes");
  for (std::size_t i = 0; i < ps.planes.size(); ++i)
    for (const Point3& m : ps.planes[i].members)
      if (dist(p, m) <= ps.tol.eps_gather) return static_cast<int>(i) + 1;
  throw NotInConfiguration("check_level: position not in configuration");
}

}  // namespace gather3d
