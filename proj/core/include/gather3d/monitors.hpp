#ifndef GATHER3D_MONITORS_HPP
#define GATHER3D_MONITORS_HPP

#include <array>
#include <string>
#include <vector>

#include "gather3d/trace.hpp"

namespace gather3d {

/* The five run-time checks, replayed over a trace:
 *
 *  M1  a triangle-peak move lands on the straight segment from its start
 *      to its peak (the non-horizontal triangle side it climbs);
 *  M2  a cone-vertex move lands on the lateral surface of the upward
 *      45-degree cone whose apex is the move's destination;
 *  M3  a cone-vertex move of travelled length >= delta, aimed from further
 *      than delta, reduces the distance to the vertical axis through the
 *      destination by at least delta / sqrt(2);
 *  M4  a triangle-peak move from distance s > delta ends within
 *      sqrt((s/2)^2 - (s^2 - (s-delta)^2) / 4) of the axis through the peak;
 *  M5  the minimum enclosing radius of the top positions never grows while
 *      the top height is unchanged.
 *
 * M1 and M2 bind each landing to the destination recorded with the move:
 * concurrent movers may be climbing cones computed from snapshots taken
 * at different times, so there is no single shared cone to check against.
 * Moves that record no destination (hand-built traces) are instead held
 * to the shape of the configuration they execute in: the triangle over
 * the current top pair, or the cone over the current top circle.
 */
struct MonitorViolation {
  int event_index = 0;
  std::string monitor;     // "M1" .. "M5"
  double magnitude = 0.0;  // excess beyond the allowed tolerance
};

struct MonitorReport {
  std::array<long, 5> checked{};  // instances examined per monitor
  std::vector<MonitorViolation> violations;
  /* Parallel to trace.events: monitors violated at each event. */
  std::vector<std::vector<std::string>> event_flags;

  bool clean() const { return violations.empty(); }
  double max_magnitude() const;
  long violations_for(int monitor_1based) const;
};

/* Pure replay: reconstructs every intermediate configuration from the
 * initial positions and the Move events.  Works on freshly simulated and
 * on re-parsed traces alike. */
MonitorReport evaluate_monitors(const Trace& trace);

/* evaluate_monitors + write the flags back into trace.events[].monitor_flags
 * and trace.summary.monitor_failures. */
MonitorReport annotate_monitors(Trace& trace);

}  // namespace gather3d

#endif
