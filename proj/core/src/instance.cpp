#include "gather3d/instance.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gather3d/geometry.hpp"

namespace gather3d {

std::vector<RobotSetup> random_setup(const InstanceOptions& opt, Rng& rng) {
  if (opt.n < 1) throw std::invalid_argument("instance: n must be at least 1");
  if (opt.z_layers < 0) throw std::invalid_argument("instance: negative z_layers");
  if (!(opt.spread > 0.0)) throw std::invalid_argument("instance: spread must be positive");
  const double half = 0.5 * opt.spread;
  const double min_sep =
      opt.min_separation > 0.0 ? opt.min_separation : opt.spread / 1000.0;

  std::vector<double> levels;
  if (opt.z_layers > 0) {
    /* Well-separated levels keep plane membership unambiguous. */
    const double min_gap = opt.z_layers > 1 ? opt.spread / 10.0 : 0.0;
    for (int attempt = 0; attempt < 10000; ++attempt) {
      levels.clear();
      for (int i = 0; i < opt.z_layers; ++i) levels.push_back(uniform(rng, -half, half));
      std::sort(levels.begin(), levels.end());
      bool ok = true;
      for (std::size_t i = 1; i < levels.size(); ++i)
        if (levels[i] - levels[i - 1] < min_gap) ok = false;
      if (ok) break;
      levels.clear();
    }
    if (levels.empty()) throw std::invalid_argument("instance: cannot separate z layers");
  }

  std::vector<RobotSetup> robots;
  robots.reserve(opt.n);
  for (int i = 0; i < opt.n; ++i) {
    Point3 p;
    bool placed = false;
    for (int attempt = 0; attempt < 10000 && !placed; ++attempt) {
      p.x = uniform(rng, -half, half);
      p.y = uniform(rng, -half, half);
      p.z = levels.empty() ? uniform(rng, -half, half)
                           : levels[below(rng, levels.size())];
      placed = true;
      for (const RobotSetup& r : robots)
        if (dist(p, r.position) < min_sep) {
          placed = false;
          break;
        }
    }
    if (!placed) throw std::invalid_argument("instance: cannot separate positions");

    RobotSetup r;
    r.position = p;
    r.frame.origin = p;
    r.frame.rotation = uniform(rng, 0.0, 2.0 * std::numbers::pi);
    r.frame.reflect = (rng() & 1u) != 0;
    r.frame.scale = uniform(rng, 0.5, 2.0);
    robots.push_back(r);
  }
  return robots;
}

FaultPlan random_faults(int n, int f, int max_event, Rng& rng) {
  if (f < 0 || f >= n) throw std::invalid_argument("faults: need 0 <= f < n");
  if (max_event < 1) throw std::invalid_argument("faults: max_event must be positive");

  std::vector<int> ids(n);
  for (int i = 0; i < n; ++i) ids[i] = i;
  for (int i = n - 1; i > 0; --i)
    std::swap(ids[i], ids[below(rng, static_cast<std::size_t>(i) + 1)]);

  FaultPlan plan;
  for (int i = 0; i < f; ++i)
    plan.crashes.push_back({ids[i], static_cast<int>(below(rng, max_event))});
  std::sort(plan.crashes.begin(), plan.crashes.end(),
            [](const CrashAt& a, const CrashAt& b) {
              if (a.at_event != b.at_event) return a.at_event < b.at_event;
              return a.robot_id < b.robot_id;
            });
  return plan;
}

}  // namespace gather3d
