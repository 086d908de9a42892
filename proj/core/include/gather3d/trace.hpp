#ifndef GATHER3D_TRACE_HPP
#define GATHER3D_TRACE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gather3d/configuration.hpp"
#include "gather3d/destination.hpp"
#include "gather3d/frame.hpp"

namespace gather3d {

enum class EventKind { Look, Compute, Move, Crash };

const char* to_string(EventKind k);
bool parse_event_kind(std::string_view s, EventKind& out);

enum class SchedulerPolicy { Synchronous, RoundRobinAsync, RandomAdversary };

const char* to_string(SchedulerPolicy p);
bool parse_scheduler(std::string_view s, SchedulerPolicy& out);

struct TraceEvent {
  int event_index = 0;
  int robot_id = 0;
  EventKind kind = EventKind::Look;
  Point3 pos_before;
  Point3 pos_after;                       // differs from pos_before only on Move
  std::optional<Point3> destination;      // Compute, Move
  std::optional<MoveRule> rule;           // Compute, Move
  std::vector<Point3> seen;               // Look: the local snapshot
  double top_plane_radius = 0.0;          // a(t) after this event
  ConfigClass config_class = ConfigClass::C1;  // after this event
  std::vector<std::string> monitor_flags;      // monitors violated here
};

struct RobotSetup {
  Point3 position;
  LocalFrame frame;  // origin tracks the robot's position
};

struct CrashAt {
  int robot_id = 0;
  int at_event = 0;  // fires at the first event index >= at_event
};

struct FaultPlan {
  std::vector<CrashAt> crashes;
};

struct SimParams {
  double delta = 0.5;  // minimum guaranteed move distance
  Tolerances tol;
  std::uint64_t seed = 0;
  int max_events = 50000;
  SchedulerPolicy scheduler = SchedulerPolicy::RandomAdversary;

  void validate() const;  // throws std::invalid_argument
};

struct RunSummary {
  bool gathered = false;
  std::optional<Point3> gather_point;  // lex-smallest alive position
  int events_used = 0;
  int monitor_failures = 0;
  double final_span = 0.0;             // max pairwise distance, alive robots
  bool gathered_at_crashed = false;    // gather point coincides with a crash site
  int colocation_events = 0;           // moves that landed within eps_gather of another robot
};

struct Trace {
  std::vector<RobotSetup> initial;
  SimParams params;
  FaultPlan faults;
  std::vector<TraceEvent> events;
  RunSummary summary;
};

}  // namespace gather3d

#endif
