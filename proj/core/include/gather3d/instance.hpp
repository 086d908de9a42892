#ifndef GATHER3D_INSTANCE_HPP
#define GATHER3D_INSTANCE_HPP

#include <vector>

#include "gather3d/rng.hpp"
#include "gather3d/trace.hpp"

namespace gather3d {

struct InstanceOptions {
  int n = 4;
  int z_layers = 0;      // 0: continuous z; k > 0: positions share k exact levels
  double spread = 5.0;   // coordinates drawn from [-spread/2, spread/2]
  double min_separation = 0.0;  // <= 0: spread / 1000
};

/* Random robots with pairwise-distinct positions and random local frames
 * (rotation in [0, 2pi), reflection fair coin, scale in [0.5, 2]). */
std::vector<RobotSetup> random_setup(const InstanceOptions& opt, Rng& rng);

/* f distinct robots, each crashing at a uniform event index below
 * max_event. */
FaultPlan random_faults(int n, int f, int max_event, Rng& rng);

}  // namespace gather3d

#endif
