#include "gather3d/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gather3d/errors.hpp"

namespace gather3d {

const char* to_string(EventKind k) {
  switch (k) {
    case EventKind::Look: return "look";
    case EventKind::Compute: return "compute";
    case EventKind::Move: return "move";
    case EventKind::Crash: return "crash";
  }
  return "?";
}

bool parse_event_kind(std::string_view s, EventKind& out) {
  if (s == "look") out = EventKind::Look;
  else if (s == "compute") out = EventKind::Compute;
  else if (s == "move") out = EventKind::Move;
  else if (s == "crash") out = EventKind::Crash;
  else return false;
  return true;
}

const char* to_string(SchedulerPolicy p) {
  switch (p) {
    case SchedulerPolicy::Synchronous: return "Synchronous";
    case SchedulerPolicy::RoundRobinAsync: return "RoundRobinAsync";
    case SchedulerPolicy::RandomAdversary: return "RandomAdversary";
  }
  return "?";
}

bool parse_scheduler(std::string_view s, SchedulerPolicy& out) {
  if (s == "Synchronous") out = SchedulerPolicy::Synchronous;
  else if (s == "RoundRobinAsync") out = SchedulerPolicy::RoundRobinAsync;
  else if (s == "RandomAdversary") out = SchedulerPolicy::RandomAdversary;
  else return false;
  return true;
}

void SimParams::validate() const {
  if (!(delta > 0.0) || !std::isfinite(delta))
    throw std::invalid_argument("delta must be positive and finite");
  if (max_events < 1) throw std::invalid_argument("max_events must be at least 1");
  tol.validate();
}

namespace {

EventKind phase_to_kind(Phase p) {
  switch (p) {
    case Phase::Idle: return EventKind::Look;
    case Phase::Looked: return EventKind::Compute;
    case Phase::Computed: return EventKind::Move;
  }
  return EventKind::Look;
}

/* Events still needed to finish the current cycle. */
int cycle_need(Phase p) {
  switch (p) {
    case Phase::Idle: return 3;
    case Phase::Looked: return 2;
    case Phase::Computed: return 1;
  }
  return 3;
}

bool any_alive(const std::vector<RobotState>& states) {
  for (const RobotState& s : states)
    if (s.alive) return true;
  return false;
}

std::vector<Point3> all_positions(const std::vector<RobotState>& states) {
  std::vector<Point3> out;
  out.reserve(states.size());
  for (const RobotState& s : states) out.push_back(s.pos);
  return out;
}

}  // namespace

Scheduler::Scheduler(SchedulerPolicy policy, int n)
    : policy_(policy), n_(n), window_(8 * n), moved_(n, 0) {}

ScheduledAction Scheduler::next(const std::vector<RobotState>& states, Rng& rng,
                                int event_index) {
  if (!any_alive(states)) throw AllCrashed("scheduler: no robot alive");

  switch (policy_) {
    case SchedulerPolicy::Synchronous: {
      /* All alive robots run each phase, in id order, before the next
       * phase starts.  Crashed robots drop out of the rotation. */
      while (true) {
        if (stage_robot_ == n_) {
          stage_robot_ = 0;
          stage_ = stage_ == EventKind::Look    ? EventKind::Compute
                   : stage_ == EventKind::Compute ? EventKind::Move
                                                  : EventKind::Look;
        }
        const int id = stage_robot_++;
        if (states[id].alive) return {id, stage_};
      }
    }

    case SchedulerPolicy::RoundRobinAsync: {
      /* One full Look-Compute-Move cycle per alive robot, in id order. */
      while (!states[stage_robot_].alive) stage_robot_ = (stage_robot_ + 1) % n_;
      const int id = stage_robot_;
      const EventKind kind = phase_to_kind(states[id].phase);
      if (kind == EventKind::Move) stage_robot_ = (stage_robot_ + 1) % n_;
      return {id, kind};
    }

    case SchedulerPolicy::RandomAdversary: {
      const long wid = event_index / window_;
      if (wid != current_window_) {
        current_window_ = wid;
        std::fill(moved_.begin(), moved_.end(), 0);
      }
      std::vector<int> alive;
      alive.reserve(states.size());
      long total_need = 0;
      int first_needy = -1;
      for (const RobotState& s : states) {
        if (!s.alive) continue;
        alive.push_back(s.id);
        if (!moved_[s.id]) {
          total_need += cycle_need(s.phase);
          if (first_needy < 0) first_needy = s.id;
        }
      }
      const int remaining = window_ - (event_index % window_);
      int id;
      if (first_needy >= 0 && total_need + n_ >= remaining) {
        /* Forced finish: starved cycles must complete before the window
         * closes; n_ pads for crash events that bypass the scheduler. */
        id = first_needy;
      } else {
        id = alive[below(rng, alive.size())];
      }
      const EventKind kind = phase_to_kind(states[id].phase);
      if (kind == EventKind::Move) moved_[id] = 1;
      return {id, kind};
    }
  }
  throw std::logic_error("scheduler: unknown policy");
}

void inject_crash(std::vector<RobotState>& states, int robot_id) {
  if (robot_id < 0 || robot_id >= static_cast<int>(states.size()))
    throw UnknownRobot("inject_crash: robot id out of range");
  states[robot_id].alive = false;
}

Point3 apply_move(const RobotState& r, const SimParams& params, Rng& rng) {
  const double d = dist(r.destination, r.pos);
  if (d <= params.delta) return r.destination;
  const double travelled = params.delta + u01(rng) * (d - params.delta);
  if (travelled >= d * (1.0 - 1e-12)) return r.destination;
  const double t = travelled / d;
  return r.pos + t * (r.destination - r.pos);
}

bool gathered(const std::vector<RobotState>& states, const Tolerances& tol) {
  std::vector<int> alive;
  for (const RobotState& s : states)
    if (s.alive) alive.push_back(s.id);
  if (alive.empty()) return false;

  for (std::size_t i = 0; i < alive.size(); ++i)
    for (std::size_t j = i + 1; j < alive.size(); ++j)
      if (dist(states[alive[i]].pos, states[alive[j]].pos) > tol.eps_gather)
        return false;

  /* Stability: no alive robot would leave.  Crashed robots stay visible. */
  const std::vector<Point3> pos = all_positions(states);
  for (int id : alive) {
    LocalFrame f = states[id].frame;
    f.origin = states[id].pos;
    const Destination d = gathering3d_step(f, pos, tol);
    if (!(d.point == states[id].pos)) return false;
  }
  return true;
}

Trace run(const std::vector<RobotSetup>& initial, const SimParams& params,
          const FaultPlan& faults) {
  params.validate();
  const int n = static_cast<int>(initial.size());
  if (n == 0) throw EmptyInput("run: no robots");
  for (const RobotSetup& r : initial) {
    r.frame.validate();
    if (!all_finite(r.position)) throw std::invalid_argument("run: non-finite position");
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (dist(initial[i].position, initial[j].position) <= params.tol.eps_gather)
        throw std::invalid_argument("positions must be distinct");

  std::vector<CrashAt> crashes = faults.crashes;
  if (static_cast<int>(crashes.size()) >= n)
    throw std::invalid_argument("f < n required");
  for (const CrashAt& c : crashes) {
    if (c.robot_id < 0 || c.robot_id >= n)
      throw UnknownRobot("fault plan: robot id out of range");
    if (c.at_event < 0) throw std::invalid_argument("fault plan: negative event index");
  }
  std::sort(crashes.begin(), crashes.end(), [](const CrashAt& a, const CrashAt& b) {
    if (a.at_event != b.at_event) return a.at_event < b.at_event;
    return a.robot_id < b.robot_id;
  });
  for (std::size_t i = 1; i < crashes.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (crashes[i].robot_id == crashes[j].robot_id)
        throw std::invalid_argument("fault plan: robot crashes twice");

  Trace trace;
  trace.initial = initial;
  for (RobotSetup& r : trace.initial) r.frame.origin = r.position;
  trace.params = params;
  trace.faults.crashes = crashes;

  std::vector<RobotState> states(n);
  for (int i = 0; i < n; ++i) {
    states[i].id = i;
    states[i].pos = trace.initial[i].position;
    states[i].frame = trace.initial[i].frame;
  }

  Rng rng(params.seed);
  Scheduler sched(params.scheduler, n);
  std::size_t next_crash = 0;

  while (true) {
    if (static_cast<int>(trace.events.size()) >= params.max_events) break;
    if (gathered(states, params.tol)) {
      trace.summary.gathered = true;
      break;
    }

    const int e = static_cast<int>(trace.events.size());
    TraceEvent ev;
    ev.event_index = e;

    if (next_crash < crashes.size() && crashes[next_crash].at_event <= e) {
      const CrashAt c = crashes[next_crash++];
      inject_crash(states, c.robot_id);
      ev.robot_id = c.robot_id;
      ev.kind = EventKind::Crash;
      ev.pos_before = ev.pos_after = states[c.robot_id].pos;
    } else {
      const ScheduledAction act = sched.next(states, rng, e);
      RobotState& st = states[act.robot_id];
      ev.robot_id = act.robot_id;
      ev.kind = act.kind;
      ev.pos_before = ev.pos_after = st.pos;
      switch (act.kind) {
        case EventKind::Look:
          st.frame.origin = st.pos;
          st.snapshot = make_snapshot(st.frame, all_positions(states), params.tol);
          st.phase = Phase::Looked;
          ev.seen = st.snapshot.seen;
          break;
        case EventKind::Compute: {
          const Destination local = compute_destination(st.snapshot, params.tol);
          st.destination = local.rule == MoveRule::Stay
                               ? st.frame.origin
                               : to_global(st.frame, local.point);
          st.rule = local.rule;
          st.phase = Phase::Computed;
          ev.destination = st.destination;
          ev.rule = st.rule;
          break;
        }
        case EventKind::Move: {
          const Point3 np = apply_move(st, params, rng);
          ev.pos_after = np;
          ev.destination = st.destination;
          ev.rule = st.rule;
          st.pos = np;
          st.phase = Phase::Idle;
          for (const RobotState& other : states)
            if (other.id != st.id && dist(np, other.pos) <= params.tol.eps_gather) {
              ++trace.summary.colocation_events;
              break;
            }
          break;
        }
        case EventKind::Crash:
          break;  // unreachable: the scheduler never issues crashes
      }
    }

    /* Ground-truth annotations reflect the state after the event. */
    const Configuration cfg =
        Configuration::from_points(all_positions(states), params.tol);
    const PlaneStack ps = decompose(cfg);
    ev.config_class = classify(ps);
    ev.top_plane_radius =
        compute_circle(ps.planes.front().members, params.tol).radius;
    trace.events.push_back(std::move(ev));
  }

  trace.summary.events_used = static_cast<int>(trace.events.size());

  double span = 0.0;
  Point3 gp;
  bool have_gp = false;
  for (const RobotState& s : states) {
    if (!s.alive) continue;
    if (!have_gp || lex_less(s.pos, gp)) {
      gp = s.pos;
      have_gp = true;
    }
    for (const RobotState& t : states)
      if (t.alive && t.id > s.id) span = std::max(span, dist(s.pos, t.pos));
  }
  trace.summary.final_span = span;
  if (trace.summary.gathered && have_gp) {
    trace.summary.gather_point = gp;
    for (const RobotState& s : states)
      if (!s.alive && dist(s.pos, gp) <= params.tol.eps_gather)
        trace.summary.gathered_at_crashed = true;
  }
  return trace;
}

}  // namespace gather3d
