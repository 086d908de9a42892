#ifndef GATHER3D_CONFIGURATION_HPP
#define GATHER3D_CONFIGURATION_HPP

#include <span>
#include <vector>

#include "gather3d/geometry.hpp"

namespace gather3d {

/* The set of occupied positions.  Robots cannot detect multiplicity, so
 * points within eps_gather of each other collapse to one position. */
struct Configuration {
  std::vector<Point3> positions;  // lex-sorted, pairwise > eps_gather apart
  Tolerances tol;

  static Configuration from_points(std::span<const Point3> pts,
                                   const Tolerances& tol = {});
};

struct Plane {
  double z_level = 0.0;           // midpoint of the cluster's z-extent
  std::vector<Point3> members;    // lex-sorted
};

/* Horizontal planes through the configuration, topmost first. */
struct PlaneStack {
  std::vector<Plane> planes;
  Tolerances tol;
};

/* Partition of configurations by the size of the topmost plane:
 * one position, exactly two, or more than two. */
enum class ConfigClass { C1, C2, Cgt2 };

const char* to_string(ConfigClass c);

/* Single-linkage clustering on z: consecutive (sorted) z values further
 * than eps_z apart start a new plane. */
PlaneStack decompose(const Configuration& c);

ConfigClass classify(const PlaneStack& ps);

/* 1-based index, counted from the top, of the plane containing a position
 * within eps_gather of p.  Throws NotInConfiguration otherwise. */
int check_level(const PlaneStack& ps, const Point3& p);

}  // namespace gather3d

#endif
