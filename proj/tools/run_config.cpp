#include "run_config.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include <json.hpp>

#include "trace_io.hpp"

namespace gather3d {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) { throw ConfigError("config: " + what); }

void reject_unknown_keys(const json& j, std::initializer_list<const char*> known,
                         const std::string& where) {
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (const char* k : known)
      if (key == k) ok = true;
    if (!ok) bad("unknown key \"" + key + "\" in " + where);
  }
}

double need_finite(const json& j, const char* key, const std::string& where) {
  if (!j[key].is_number()) bad('"' + std::string(key) + "\" in " + where + " must be a number");
  const double v = j[key].get<double>();
  if (!std::isfinite(v)) bad('"' + std::string(key) + "\" in " + where + " must be finite");
  return v;
}

Point3 need_point(const json& j, const char* key, const std::string& where) {
  const json& a = j[key];
  if (!a.is_array() || a.size() != 3 || !a[0].is_number() || !a[1].is_number() ||
      !a[2].is_number())
    bad('"' + std::string(key) + "\" in " + where + " must be an array of 3 numbers");
  const Point3 p{a[0].get<double>(), a[1].get<double>(), a[2].get<double>()};
  if (!all_finite(p)) bad('"' + std::string(key) + "\" in " + where + " must be finite");
  return p;
}

}  // namespace

RunConfig parse_run_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) bad("top level must be an object");
  reject_unknown_keys(j, {"robots", "params", "faults"}, "top level");

  RunConfig rc;

  if (!j.contains("robots") || !j["robots"].is_array() || j["robots"].empty())
    bad("\"robots\" must be a non-empty array");
  int idx = 0;
  for (const json& r : j["robots"]) {
    const std::string where = "robots[" + std::to_string(idx) + "]";
    if (!r.is_object()) bad(where + " must be an object");
    reject_unknown_keys(r, {"position", "frame"}, where);
    if (!r.contains("position")) bad(where + " needs \"position\"");
    RobotSetup setup;
    setup.position = need_point(r, "position", where);
    setup.frame.origin = setup.position;
    if (r.contains("frame")) {
      const json& f = r["frame"];
      if (!f.is_object()) bad(where + ".frame must be an object");
      reject_unknown_keys(f, {"rotation_deg", "reflect", "scale"}, where + ".frame");
      if (f.contains("rotation_deg"))
        setup.frame.rotation =
            need_finite(f, "rotation_deg", where + ".frame") * std::numbers::pi / 180.0;
      if (f.contains("reflect")) {
        if (!f["reflect"].is_boolean()) bad(where + ".frame.reflect must be a boolean");
        setup.frame.reflect = f["reflect"].get<bool>();
      }
      if (f.contains("scale")) {
        setup.frame.scale = need_finite(f, "scale", where + ".frame");
        if (!(setup.frame.scale > 0.0)) bad(where + ".frame.scale must be positive");
      }
    }
    rc.robots.push_back(setup);
    ++idx;
  }

  if (j.contains("params")) {
    const json& p = j["params"];
    if (!p.is_object()) bad("\"params\" must be an object");
    reject_unknown_keys(p,
                        {"delta", "eps_z", "eps_geom", "eps_gather", "seed",
                         "max_events", "scheduler"},
                        "params");
    if (p.contains("delta")) rc.params.delta = need_finite(p, "delta", "params");
    if (p.contains("eps_z")) rc.params.tol.eps_z = need_finite(p, "eps_z", "params");
    if (p.contains("eps_geom"))
      rc.params.tol.eps_geom = need_finite(p, "eps_geom", "params");
    if (p.contains("eps_gather"))
      rc.params.tol.eps_gather = need_finite(p, "eps_gather", "params");
    if (p.contains("seed")) {
      if (!p["seed"].is_number_unsigned()) bad("\"seed\" must be a non-negative integer");
      rc.params.seed = p["seed"].get<std::uint64_t>();
    }
    if (p.contains("max_events")) {
      if (!p["max_events"].is_number_integer()) bad("\"max_events\" must be an integer");
      rc.params.max_events = p["max_events"].get<int>();
    }
    if (p.contains("scheduler")) {
      if (!p["scheduler"].is_string() ||
          !parse_scheduler(p["scheduler"].get<std::string>(), rc.params.scheduler))
        bad("\"scheduler\" must be one of Synchronous, RoundRobinAsync, RandomAdversary");
    }
  }

  if (j.contains("faults")) {
    if (!j["faults"].is_array()) bad("\"faults\" must be an array");
    int fi = 0;
    std::set<int> seen_ids;
    for (const json& f : j["faults"]) {
      const std::string where = "faults[" + std::to_string(fi) + "]";
      if (!f.is_object()) bad(where + " must be an object");
      reject_unknown_keys(f, {"robot", "at_event"}, where);
      if (!f.contains("robot") || !f["robot"].is_number_integer())
        bad(where + " needs integer \"robot\"");
      if (!f.contains("at_event") || !f["at_event"].is_number_integer())
        bad(where + " needs integer \"at_event\"");
      CrashAt c{f["robot"].get<int>(), f["at_event"].get<int>()};
      if (c.robot_id < 0 || c.robot_id >= static_cast<int>(rc.robots.size()))
        bad(where + ": robot id out of range");
      if (c.at_event < 0) bad(where + ": \"at_event\" must be non-negative");
      if (!seen_ids.insert(c.robot_id).second)
        bad(where + ": robot crashes twice");
      rc.faults.crashes.push_back(c);
      ++fi;
    }
  }

  /* Semantic checks, matching what the simulator enforces. */
  try {
    rc.params.validate();
    for (const RobotSetup& r : rc.robots) r.frame.validate();
  } catch (const std::invalid_argument& e) {
    bad(e.what());
  }
  for (std::size_t a = 0; a < rc.robots.size(); ++a)
    for (std::size_t b = a + 1; b < rc.robots.size(); ++b)
      if (dist(rc.robots[a].position, rc.robots[b].position) <= rc.params.tol.eps_gather)
        bad("positions must be distinct");
  if (rc.faults.crashes.size() >= rc.robots.size()) bad("f < n required");

  return rc;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("config: cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_run_config(ss.str());
}

void write_run_config(const RunConfig& rc, std::ostream& os) {
  os << "{\n  \"robots\": [\n";
  for (std::size_t i = 0; i < rc.robots.size(); ++i) {
    const RobotSetup& r = rc.robots[i];
    os << "    {\"position\": [" << format_double(r.position.x) << ", "
       << format_double(r.position.y) << ", " << format_double(r.position.z)
       << "], \"frame\": {\"rotation_deg\": "
       << format_double(r.frame.rotation * 180.0 / std::numbers::pi)
       << ", \"reflect\": " << (r.frame.reflect ? "true" : "false")
       << ", \"scale\": " << format_double(r.frame.scale) << "}}"
       << (i + 1 < rc.robots.size() ? "," : "") << '\n';
  }
  os << "  ],\n  \"params\": {\"delta\": " << format_double(rc.params.delta)
     << ", \"eps_z\": " << format_double(rc.params.tol.eps_z)
     << ", \"eps_geom\": " << format_double(rc.params.tol.eps_geom)
     << ", \"eps_gather\": " << format_double(rc.params.tol.eps_gather)
     << ", \"seed\": " << rc.params.seed
     << ", \"max_events\": " << rc.params.max_events << ", \"scheduler\": \""
     << to_string(rc.params.scheduler) << "\"}";
  if (!rc.faults.crashes.empty()) {
    os << ",\n  \"faults\": [\n";
    for (std::size_t i = 0; i < rc.faults.crashes.size(); ++i)
      os << "    {\"robot\": " << rc.faults.crashes[i].robot_id
         << ", \"at_event\": " << rc.faults.crashes[i].at_event << "}"
         << (i + 1 < rc.faults.crashes.size() ? "," : "") << '\n';
    os << "  ]";
  }
  os << "\n}\n";
}

void save_run_config(const RunConfig& rc, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("config: cannot open for writing: " + path);
  write_run_config(rc, out);
  if (!out.flush()) throw ConfigError("config: write failed: " + path);
}

}  // namespace gather3d
