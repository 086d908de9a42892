#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <fstream>
#include <iostream>
#include <mutex>
#include <thread>
#include <vector>

#include "gather3d/instance.hpp"
#include "gather3d/monitors.hpp"
#include "gather3d/simulation.hpp"
#include "run_config.hpp"
#include "trace_io.hpp"

namespace gather3d {

namespace {

std::string point_text(const Point3& p) {
  return "(" + format_double(p.x) + ", " + format_double(p.y) + ", " +
         format_double(p.z) + ")";
}

int verdict_code(const Trace& t) {
  if (t.summary.monitor_failures > 0) return kExitMonitorViolation;
  return t.summary.gathered ? kExitOk : kExitNotGathered;
}

}  // namespace

int cmd_run(const std::string& config_path, const std::string& trace_path) {
  RunConfig rc;
  try {
    rc = load_run_config(config_path);
  } catch (const ConfigError& e) {
    std::cerr << e.what() << '\n';
    return kExitBadInput;
  }

  Trace trace;
  try {
    trace = run(rc.robots, rc.params, rc.faults);
    annotate_monitors(trace);
    save_trace(trace, trace_path);
  } catch (const std::exception& e) {
    std::cerr << "run failed: " << e.what() << '\n';
    return kExitBadInput;
  }

  if (trace.summary.gathered)
    std::cout << "gathered at " << point_text(*trace.summary.gather_point)
              << " after " << trace.summary.events_used << " events";
  else
    std::cout << "not gathered after " << trace.summary.events_used
              << " events (budget " << rc.params.max_events << ")";
  if (trace.summary.monitor_failures > 0)
    std::cout << "; " << trace.summary.monitor_failures << " monitor violations";
  std::cout << '\n';
  return verdict_code(trace);
}

int cmd_batch(const BatchOptions& opt) {
  RunConfig rc;
  try {
    rc = load_run_config(opt.config_path);
  } catch (const ConfigError& e) {
    std::cerr << e.what() << '\n';
    return kExitBadInput;
  }
  if (opt.seed_end < opt.seed_begin) {
    std::cerr << "batch: empty seed range\n";
    return kExitBadInput;
  }
  const std::uint64_t count64 = opt.seed_end - opt.seed_begin + 1;
  if (count64 > 1000000) {
    std::cerr << "batch: seed range too large (over 1e6 runs)\n";
    return kExitBadInput;
  }
  const std::size_t count = static_cast<std::size_t>(count64);

  std::vector<std::string> rows(count);
  std::atomic<bool> any_violation{false};
  std::atomic<bool> all_gathered{true};
  std::atomic<std::size_t> cursor{0};
  std::atomic<bool> failed{false};
  std::string first_error;
  std::mutex error_mutex;

  auto worker = [&]() {
    while (true) {
      const std::size_t i = cursor.fetch_add(1);
      if (i >= count || failed.load()) return;
      RunConfig local = rc;
      local.params.seed = opt.seed_begin + i;
      try {
        Trace trace = run(local.robots, local.params, local.faults);
        const MonitorReport rep = annotate_monitors(trace);
        if (!rep.clean()) any_violation.store(true);
        if (!trace.summary.gathered) all_gathered.store(false);
        rows[i] = std::to_string(local.params.seed) + ',' +
                  (trace.summary.gathered ? "true" : "false") + ',' +
                  std::to_string(trace.summary.events_used) + ',' +
                  format_double(trace.summary.final_span) + ',' +
                  format_double(rep.max_magnitude());
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lk(error_mutex);
        if (!failed.exchange(true)) first_error = e.what();
        return;
      }
    }
  };

  unsigned n_threads = opt.threads > 0 ? static_cast<unsigned>(opt.threads)
                                       : std::thread::hardware_concurrency();
  if (n_threads == 0) n_threads = 1;
  n_threads = std::min<unsigned>(n_threads, static_cast<unsigned>(count));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  if (failed.load()) {
    std::cerr << "batch: " << first_error << '\n';
    return kExitBadInput;
  }

  std::ofstream out(opt.out_path, std::ios::binary);
  if (!out) {
    std::cerr << "batch: cannot open for writing: " << opt.out_path << '\n';
    return kExitBadInput;
  }
  out << "seed,gathered,events,final_span,max_monitor_violation\n";
  for (const std::string& row : rows) out << row << '\n';
  if (!out.flush()) {
    std::cerr << "batch: write failed: " << opt.out_path << '\n';
    return kExitBadInput;
  }

  std::size_t gathered_count = 0;
  for (const std::string& row : rows)
    if (row.find(",true,") != std::string::npos) ++gathered_count;
  std::cout << count << " runs: " << gathered_count << " gathered, "
            << (any_violation.load() ? "with" : "no") << " monitor violations\n";

  if (any_violation.load()) return kExitMonitorViolation;
  return all_gathered.load() ? kExitOk : kExitNotGathered;
}

int cmd_check(const std::string& trace_path) {
  Trace trace;
  try {
    trace = load_trace(trace_path);
  } catch (const TraceError& e) {
    std::cerr << e.what() << '\n';
    return kExitBadInput;
  }

  MonitorReport rep;
  try {
    rep = evaluate_monitors(trace);
  } catch (const std::exception& e) {
    std::cerr << "check: " << e.what() << '\n';
    return kExitBadInput;
  }

  static const char* names[5] = {
      "M1 triangle sides", "M2 cone surface", "M3 axis progress",
      "M4 peak cylinder", "M5 radius monotone"};
  for (int m = 0; m < 5; ++m)
    std::cout << 'M' << m + 1 << " (" << names[m] << "): checked "
              << rep.checked[m] << ", violations " << rep.violations_for(m + 1)
              << '\n';
  if (!rep.clean())
    std::cout << "worst violation magnitude " << format_double(rep.max_magnitude())
              << '\n';
  return rep.clean() ? kExitOk : kExitMonitorViolation;
}

int cmd_gen(const GenOptions& opt) {
  if (opt.n < 1) {
    std::cerr << "gen: n must be at least 1\n";
    return kExitBadInput;
  }
  if (opt.z_layers < 0) {
    std::cerr << "gen: z-layers must be non-negative\n";
    return kExitBadInput;
  }
  if (!(opt.spread > 0.0)) {
    std::cerr << "gen: spread must be positive\n";
    return kExitBadInput;
  }

  Rng rng(opt.seed);
  InstanceOptions io;
  io.n = opt.n;
  io.z_layers = opt.z_layers;
  io.spread = opt.spread;

  RunConfig rc;
  try {
    rc.robots = random_setup(io, rng);
  } catch (const std::exception& e) {
    std::cerr << "gen: " << e.what() << '\n';
    return kExitBadInput;
  }
  rc.params.seed = opt.seed;

  try {
    if (opt.out_path.empty()) write_run_config(rc, std::cout);
    else save_run_config(rc, opt.out_path);
  } catch (const ConfigError& e) {
    std::cerr << e.what() << '\n';
    return kExitBadInput;
  }
  return kExitOk;
}

bool parse_seed_range(const std::string& text, std::uint64_t& lo, std::uint64_t& hi) {
  const std::size_t dots = text.find("..");
  const char* begin = text.data();
  const char* end = text.data() + text.size();
  if (dots == std::string::npos) {
    const auto [p, ec] = std::from_chars(begin, end, lo);
    if (ec != std::errc() || p != end) return false;
    hi = lo;
    return true;
  }
  const auto [p1, e1] = std::from_chars(begin, begin + dots, lo);
  if (e1 != std::errc() || p1 != begin + dots) return false;
  const auto [p2, e2] = std::from_chars(begin + dots + 2, end, hi);
  if (e2 != std::errc() || p2 != end) return false;
  return true;
}

}  // namespace gather3d
