#include "gather3d/monitors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "gather3d/errors.hpp"

namespace gather3d {

double MonitorReport::max_magnitude() const {
  double m = 0.0;
  for (const MonitorViolation& v : violations) m = std::max(m, v.magnitude);
  return m;
}

long MonitorReport::violations_for(int monitor_1based) const {
  const std::string name = "M" + std::to_string(monitor_1based);
  long count = 0;
  for (const MonitorViolation& v : violations)
    if (v.monitor == name) ++count;
  return count;
}

namespace {

double dist_point_segment(const Point3& p, const Point3& a, const Point3& b) {
  const Point3 ab = b - a;
  const double len2 = ab.x * ab.x + ab.y * ab.y + ab.z * ab.z;
  if (len2 == 0.0) return dist(p, a);
  const Point3 ap = p - a;
  double t = (ap.x * ab.x + ap.y * ab.y + ap.z * ab.z) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return dist(p, a + t * ab);
}

double axis_dist(const Point3& p, const Point3& on_axis) {
  return std::hypot(p.x - on_axis.x, p.y - on_axis.y);
}

/* Ground truth per event.  `top` holds the occupied top-plane points
 * (deduplicated at eps_gather) and `radius` their minimum enclosing
 * radius.  The enclosing radius is the quantity that shrinks
 * monotonically; the circle the robots themselves compute may jump
 * upward when a merge leaves three distinct positions whose common
 * circle exceeds the enclosing one. */
struct ConfigView {
  ConfigClass cls = ConfigClass::C1;
  std::vector<Point3> top;
  double top_z = 0.0;
  double radius = 0.0;
};

ConfigView view_of(const std::vector<Point3>& pos, const Tolerances& tol) {
  const Configuration cfg = Configuration::from_points(pos, tol);
  const PlaneStack ps = decompose(cfg);
  ConfigView v;
  v.cls = classify(ps);
  v.top = ps.planes.front().members;
  v.top_z = ps.planes.front().z_level;
  v.radius = minimum_enclosing_circle(v.top).r;
  return v;
}

}  // namespace

MonitorReport evaluate_monitors(const Trace& trace) {
  const Tolerances& tol = trace.params.tol;
  const double delta = trace.params.delta;

  MonitorReport rep;
  rep.event_flags.assign(trace.events.size(), {});
  if (trace.initial.empty()) return rep;

  std::vector<Point3> pos;
  pos.reserve(trace.initial.size());
  for (const RobotSetup& r : trace.initial) pos.push_back(r.position);

  ConfigView cur = view_of(pos, tol);

  for (std::size_t idx = 0; idx < trace.events.size(); ++idx) {
    const TraceEvent& ev = trace.events[idx];
    if (ev.kind != EventKind::Move) continue;  // only moves change positions
    if (ev.robot_id < 0 || ev.robot_id >= static_cast<int>(pos.size()))
      throw UnknownRobot("monitors: move event references unknown robot");

    auto flag = [&](const char* monitor, double magnitude) {
      rep.violations.push_back({static_cast<int>(idx), monitor, magnitude});
      std::vector<std::string>& fl = rep.event_flags[idx];
      if (std::find(fl.begin(), fl.end(), monitor) == fl.end())
        fl.emplace_back(monitor);
    };

    if (ev.rule && ev.destination) {
      /* Simulated moves carry the mover's computed intent.  The shape
       * claims bind each landing to that intent, so a move aimed from a
       * stale snapshot is held to the shape it was aimed at, not to
       * whatever the configuration has become since. */
      const Point3& dest = *ev.destination;
      const double travelled = dist(ev.pos_after, ev.pos_before);
      if (*ev.rule == MoveRule::ConeVertex) {
        /* A climber stays on the lateral surface of the upward
         * 45-degree cone whose apex is its destination: the distance to
         * the vertical axis through the apex mirrors the height still
         * to climb. */
        ++rep.checked[1];
        if (ev.pos_after.z > dest.z + tol.eps_z) {
          flag("M2", ev.pos_after.z - dest.z);
        } else {
          const double err = std::abs(axis_dist(ev.pos_after, dest) -
                                      (dest.z - ev.pos_after.z));
          if (err > tol.eps_geom) flag("M2", err - tol.eps_geom);
        }
        const double slant = dist(ev.pos_before, dest);
        if (slant > delta && travelled >= delta * (1.0 - 1e-12)) {
          ++rep.checked[2];
          const double drop =
              axis_dist(ev.pos_before, dest) - axis_dist(ev.pos_after, dest);
          const double need = delta / std::numbers::sqrt2 - tol.eps_geom;
          if (drop < need) flag("M3", need - drop);
        }
      } else if (*ev.rule == MoveRule::TrianglePeak) {
        /* A peak move stays on the straight side it climbs. */
        ++rep.checked[0];
        const double d = dist_point_segment(ev.pos_after, ev.pos_before, dest);
        if (d > tol.eps_geom) flag("M1", d - tol.eps_geom);
        const double s = dist(ev.pos_before, dest);
        if (s > delta && travelled >= delta * (1.0 - 1e-12)) {
          ++rep.checked[3];
          const double a = 0.5 * s;
          const double bound2 = a * a - (s * s - (s - delta) * (s - delta)) / 4.0;
          const double bound = std::sqrt(std::max(0.0, bound2)) + tol.eps_geom;
          const double d_axis = axis_dist(ev.pos_after, dest);
          if (d_axis > bound) flag("M4", d_axis - bound);
        }
      }
      /* Stay keeps the robot put; circle walks are straight segments
       * between points of the enclosing disk.  M5 below bounds both. */
    } else if (ev.pos_after.z >= cur.top_z - tol.eps_z) {
      /* Hand-built events record no intent: hold the landing to the
       * shape of the configuration it executes in. */
      if (cur.cls == ConfigClass::C2) {
        ++rep.checked[0];
        const Point3 peak = triangle_peak(cur.top[0], cur.top[1], tol);
        const double d =
            std::min(dist_point_segment(ev.pos_after, cur.top[0], peak),
                     dist_point_segment(ev.pos_after, cur.top[1], peak));
        if (d > tol.eps_geom) flag("M1", d - tol.eps_geom);
      } else if (cur.cls == ConfigClass::Cgt2) {
        const CircleZ c = compute_circle(cur.top, tol);
        if (c.radius > tol.eps_geom) {
          ++rep.checked[1];
          const Point3 vertex = cone_vertex(c, tol);
          const double ax = axis_dist(ev.pos_after, c.center);
          if (ev.pos_after.z > cur.top_z + tol.eps_z) {
            if (ev.pos_after.z > vertex.z + tol.eps_z) {
              flag("M2", ev.pos_after.z - vertex.z);
            } else {
              const double err = std::abs(ax - (vertex.z - ev.pos_after.z));
              if (err > tol.eps_geom) flag("M2", err - tol.eps_geom);
            }
          } else if (ax > c.radius + tol.eps_geom) {
            flag("M2", ax - c.radius - tol.eps_geom);
          }
        }
      }
    }

    pos[ev.robot_id] = ev.pos_after;
    const ConfigView nxt = view_of(pos, tol);

    /* M5: the enclosing radius never grows while the top height stays
     * put.  Slack eps_gather: the radius is measured over positions
     * deduplicated at that scale, so representative churn moves it by
     * up to eps_gather without any robot leaving the disk. */
    if (std::abs(nxt.top_z - cur.top_z) <= tol.eps_z) {
      ++rep.checked[4];
      if (nxt.radius > cur.radius + tol.eps_gather)
        flag("M5", nxt.radius - cur.radius - tol.eps_gather);
    }
    cur = nxt;
  }
  return rep;
}

MonitorReport annotate_monitors(Trace& trace) {
  MonitorReport rep = evaluate_monitors(trace);
  for (std::size_t i = 0; i < trace.events.size(); ++i)
    trace.events[i].monitor_flags = rep.event_flags[i];
  trace.summary.monitor_failures = static_cast<int>(rep.violations.size());
  return rep;
}

}  // namespace gather3d
