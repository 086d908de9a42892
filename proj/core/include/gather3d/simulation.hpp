#ifndef GATHER3D_SIMULATION_HPP
#define GATHER3D_SIMULATION_HPP

#include <vector>

#include "gather3d/rng.hpp"
#include "gather3d/trace.hpp"

namespace gather3d {

/* Where a robot is in its Look-Compute-Move cycle. */
enum class Phase { Idle, Looked, Computed };

struct RobotState {
  int id = 0;
  Point3 pos;
  LocalFrame frame;
  bool alive = true;
  Phase phase = Phase::Idle;
  Snapshot snapshot;      // valid once phase >= Looked
  Point3 destination;     // global; valid once phase == Computed
  MoveRule rule = MoveRule::Stay;
};

struct ScheduledAction {
  int robot_id = 0;
  EventKind kind = EventKind::Look;
};

/* Deterministic action source.  Synchronous runs all alive robots through
 * each phase in id order before the next phase starts.  RoundRobinAsync
 * gives each alive robot a full Look-Compute-Move cycle in id order.
 * RandomAdversary picks uniformly among alive robots but is forced to
 * finish starved cycles near the end of each window of 8n consecutive
 * events, so every alive robot completes a cycle per window. */
class Scheduler {
 public:
  Scheduler(SchedulerPolicy policy, int n);

  /* `event_index` is the global index the chosen action will occupy.
   * Throws AllCrashed if no robot is alive. */
  ScheduledAction next(const std::vector<RobotState>& states, Rng& rng,
                       int event_index);

 private:
  SchedulerPolicy policy_;
  int n_;
  int window_;                 // 8n
  long current_window_ = -1;
  std::vector<char> moved_;    // robots that completed a Move this window
  int stage_robot_ = 0;        // Synchronous / RoundRobinAsync cursor
  EventKind stage_ = EventKind::Look;
};

/* Crash a robot in place: it keeps its position forever and is never
 * scheduled again.  Crashing a crashed robot is a no-op. */
void inject_crash(std::vector<RobotState>& states, int robot_id);

/* Adversarial Move resolution: the robot travels along the straight
 * segment toward its destination; the adversary may stop it anywhere
 * after distance delta.  Reaching the destination snaps to it bitwise. */
Point3 apply_move(const RobotState& r, const SimParams& params, Rng& rng);

/* All alive robots pairwise within eps_gather and none of them would move:
 * each alive robot's freshly computed destination equals its own position. */
bool gathered(const std::vector<RobotState>& states, const Tolerances& tol);

/* Run one simulation to gathering, event budget exhaustion, or all robots
 * crashed.  The returned trace carries no monitor annotations; see
 * monitors.hpp. */
Trace run(const std::vector<RobotSetup>& initial, const SimParams& params,
          const FaultPlan& faults = {});

}  // namespace gather3d

#endif
