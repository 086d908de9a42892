#include "trace_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace gather3d {

using nlohmann::json;

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

void append_point(std::string& s, const Point3& p) {
  s += '[';
  s += format_double(p.x);
  s += ',';
  s += format_double(p.y);
  s += ',';
  s += format_double(p.z);
  s += ']';
}

std::string header_line(const Trace& t) {
  std::string s = "{\"schema\":\"";
  s += kTraceSchema;
  s += "\",\"delta\":" + format_double(t.params.delta);
  s += ",\"eps_z\":" + format_double(t.params.tol.eps_z);
  s += ",\"eps_geom\":" + format_double(t.params.tol.eps_geom);
  s += ",\"eps_gather\":" + format_double(t.params.tol.eps_gather);
  s += ",\"seed\":" + std::to_string(t.params.seed);
  s += ",\"max_events\":" + std::to_string(t.params.max_events);
  s += ",\"scheduler\":\"";
  s += to_string(t.params.scheduler);
  s += "\",\"robots\":[";
  for (std::size_t i = 0; i < t.initial.size(); ++i) {
    if (i) s += ',';
    const RobotSetup& r = t.initial[i];
    s += "{\"position\":";
    append_point(s, r.position);
    s += ",\"rotation\":" + format_double(r.frame.rotation);
    s += ",\"reflect\":";
    s += r.frame.reflect ? "true" : "false";
    s += ",\"scale\":" + format_double(r.frame.scale);
    s += '}';
  }
  s += "],\"faults\":[";
  for (std::size_t i = 0; i < t.faults.crashes.size(); ++i) {
    if (i) s += ',';
    s += "{\"robot\":" + std::to_string(t.faults.crashes[i].robot_id);
    s += ",\"at_event\":" + std::to_string(t.faults.crashes[i].at_event) + '}';
  }
  s += "]}";
  return s;
}

std::string event_line(const TraceEvent& ev) {
  std::string s = "{\"e\":" + std::to_string(ev.event_index);
  s += ",\"robot\":" + std::to_string(ev.robot_id);
  s += ",\"kind\":\"";
  s += to_string(ev.kind);
  s += "\",\"before\":";
  append_point(s, ev.pos_before);
  s += ",\"after\":";
  append_point(s, ev.pos_after);
  if (ev.destination) {
    s += ",\"dest\":";
    append_point(s, *ev.destination);
  }
  if (ev.rule) {
    s += ",\"rule\":\"";
    s += to_string(*ev.rule);
    s += '"';
  }
  if (!ev.seen.empty()) {
    s += ",\"seen\":[";
    for (std::size_t i = 0; i < ev.seen.size(); ++i) {
      if (i) s += ',';
      append_point(s, ev.seen[i]);
    }
    s += ']';
  }
  s += ",\"class\":\"";
  s += to_string(ev.config_class);
  s += "\",\"a\":" + format_double(ev.top_plane_radius);
  if (!ev.monitor_flags.empty()) {
    s += ",\"monitors\":[";
    for (std::size_t i = 0; i < ev.monitor_flags.size(); ++i) {
      if (i) s += ',';
      s += '"' + ev.monitor_flags[i] + '"';
    }
    s += ']';
  }
  s += '}';
  return s;
}

std::string summary_line(const RunSummary& su) {
  std::string s = "{\"summary\":true,\"gathered\":";
  s += su.gathered ? "true" : "false";
  s += ",\"gather_point\":";
  if (su.gather_point) append_point(s, *su.gather_point);
  else s += "null";
  s += ",\"events_used\":" + std::to_string(su.events_used);
  s += ",\"monitor_failures\":" + std::to_string(su.monitor_failures);
  s += ",\"final_span\":" + format_double(su.final_span);
  s += ",\"gathered_at_crashed\":";
  s += su.gathered_at_crashed ? "true" : "false";
  s += ",\"colocation_events\":" + std::to_string(su.colocation_events);
  s += '}';
  return s;
}

[[noreturn]] void bad(int line_no, const std::string& what) {
  throw TraceError("trace line " + std::to_string(line_no) + ": " + what);
}

double need_finite(const json& j, const char* key, int line_no) {
  if (!j.contains(key) || !j[key].is_number())
    bad(line_no, std::string("missing or non-numeric \"") + key + '"');
  const double v = j[key].get<double>();
  if (!std::isfinite(v)) bad(line_no, std::string("non-finite \"") + key + '"');
  return v;
}

Point3 need_point(const json& j, const char* key, int line_no) {
  if (!j.contains(key)) bad(line_no, std::string("missing \"") + key + '"');
  const json& a = j[key];
  if (!a.is_array() || a.size() != 3 || !a[0].is_number() || !a[1].is_number() ||
      !a[2].is_number())
    bad(line_no, std::string("\"") + key + "\" must be an array of 3 numbers");
  const Point3 p{a[0].get<double>(), a[1].get<double>(), a[2].get<double>()};
  if (!all_finite(p)) bad(line_no, std::string("non-finite \"") + key + '"');
  return p;
}

}  // namespace

void write_trace(const Trace& t, std::ostream& os) {
  os << header_line(t) << '\n';
  for (const TraceEvent& ev : t.events) os << event_line(ev) << '\n';
  os << summary_line(t.summary) << '\n';
}

std::string trace_to_string(const Trace& t) {
  std::ostringstream os;
  write_trace(t, os);
  return os.str();
}

void save_trace(const Trace& t, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw TraceError("cannot open for writing: " + path);
  write_trace(t, out);
  if (!out.flush()) throw TraceError("write failed: " + path);
}

Trace parse_trace(std::istream& is) {
  Trace t;
  std::string line;
  int line_no = 0;
  bool have_header = false;
  bool have_summary = false;
  int next_event = 0;

  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      bad(line_no, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) bad(line_no, "expected an object");

    if (!have_header) {
      if (!j.contains("schema") || !j["schema"].is_string() ||
          j["schema"].get<std::string>() != kTraceSchema)
        bad(line_no, std::string("missing or unsupported schema (want \"") +
                         kTraceSchema + "\")");
      t.params.delta = need_finite(j, "delta", line_no);
      t.params.tol.eps_z = need_finite(j, "eps_z", line_no);
      t.params.tol.eps_geom = need_finite(j, "eps_geom", line_no);
      t.params.tol.eps_gather = need_finite(j, "eps_gather", line_no);
      if (!j.contains("seed") || !j["seed"].is_number_unsigned())
        bad(line_no, "missing or invalid \"seed\"");
      t.params.seed = j["seed"].get<std::uint64_t>();
      if (!j.contains("max_events") || !j["max_events"].is_number_integer())
        bad(line_no, "missing or invalid \"max_events\"");
      t.params.max_events = j["max_events"].get<int>();
      if (!j.contains("scheduler") || !j["scheduler"].is_string() ||
          !parse_scheduler(j["scheduler"].get<std::string>(), t.params.scheduler))
        bad(line_no, "missing or unknown \"scheduler\"");
      if (!j.contains("robots") || !j["robots"].is_array() || j["robots"].empty())
        bad(line_no, "missing or empty \"robots\"");
      for (const json& r : j["robots"]) {
        if (!r.is_object()) bad(line_no, "robot entries must be objects");
        RobotSetup setup;
        setup.position = need_point(r, "position", line_no);
        setup.frame.origin = setup.position;
        setup.frame.rotation = need_finite(r, "rotation", line_no);
        if (!r.contains("reflect") || !r["reflect"].is_boolean())
          bad(line_no, "missing or non-boolean \"reflect\"");
        setup.frame.reflect = r["reflect"].get<bool>();
        setup.frame.scale = need_finite(r, "scale", line_no);
        if (!(setup.frame.scale > 0.0)) bad(line_no, "\"scale\" must be positive");
        t.initial.push_back(setup);
      }
      if (j.contains("faults")) {
        if (!j["faults"].is_array()) bad(line_no, "\"faults\" must be an array");
        for (const json& f : j["faults"]) {
          CrashAt c;
          if (!f.is_object() || !f.contains("robot") || !f["robot"].is_number_integer() ||
              !f.contains("at_event") || !f["at_event"].is_number_integer())
            bad(line_no, "fault entries need integer \"robot\" and \"at_event\"");
          c.robot_id = f["robot"].get<int>();
          c.at_event = f["at_event"].get<int>();
          if (c.robot_id < 0 || c.robot_id >= static_cast<int>(t.initial.size()))
            bad(line_no, "fault references unknown robot");
          t.faults.crashes.push_back(c);
        }
      }
      have_header = true;
      continue;
    }

    if (j.contains("summary")) {
      if (have_summary) bad(line_no, "duplicate summary line");
      have_summary = true;
      if (!j.contains("gathered") || !j["gathered"].is_boolean())
        bad(line_no, "summary needs boolean \"gathered\"");
      t.summary.gathered = j["gathered"].get<bool>();
      if (j.contains("gather_point") && !j["gather_point"].is_null())
        t.summary.gather_point = need_point(j, "gather_point", line_no);
      if (j.contains("events_used"))
        t.summary.events_used = j["events_used"].get<int>();
      if (j.contains("monitor_failures"))
        t.summary.monitor_failures = j["monitor_failures"].get<int>();
      if (j.contains("final_span"))
        t.summary.final_span = need_finite(j, "final_span", line_no);
      if (j.contains("gathered_at_crashed"))
        t.summary.gathered_at_crashed = j["gathered_at_crashed"].get<bool>();
      if (j.contains("colocation_events"))
        t.summary.colocation_events = j["colocation_events"].get<int>();
      continue;
    }

    if (have_summary) bad(line_no, "event after summary line");

    TraceEvent ev;
    if (!j.contains("e") || !j["e"].is_number_integer())
      bad(line_no, "missing event index \"e\"");
    ev.event_index = j["e"].get<int>();
    if (ev.event_index != next_event)
      bad(line_no, "event index " + std::to_string(ev.event_index) +
                       " out of order (expected " + std::to_string(next_event) + ")");
    ++next_event;
    if (!j.contains("robot") || !j["robot"].is_number_integer())
      bad(line_no, "missing \"robot\"");
    ev.robot_id = j["robot"].get<int>();
    if (ev.robot_id < 0 || ev.robot_id >= static_cast<int>(t.initial.size()))
      bad(line_no, "event references unknown robot");
    if (!j.contains("kind") || !j["kind"].is_string() ||
        !parse_event_kind(j["kind"].get<std::string>(), ev.kind))
      bad(line_no, "missing or unknown \"kind\"");
    ev.pos_before = need_point(j, "before", line_no);
    ev.pos_after = need_point(j, "after", line_no);
    if (j.contains("dest")) ev.destination = need_point(j, "dest", line_no);
    if (j.contains("rule")) {
      MoveRule rule;
      if (!j["rule"].is_string() || !parse_move_rule(j["rule"].get<std::string>(), rule))
        bad(line_no, "unknown \"rule\"");
      ev.rule = rule;
    }
    if (j.contains("seen")) {
      if (!j["seen"].is_array()) bad(line_no, "\"seen\" must be an array");
      for (std::size_t i = 0; i < j["seen"].size(); ++i) {
        const json& a = j["seen"][i];
        if (!a.is_array() || a.size() != 3) bad(line_no, "\"seen\" entries must be points");
        ev.seen.push_back({a[0].get<double>(), a[1].get<double>(), a[2].get<double>()});
      }
    }
    if (j.contains("class")) {
      const std::string c = j["class"].get<std::string>();
      if (c == "C1") ev.config_class = ConfigClass::C1;
      else if (c == "C2") ev.config_class = ConfigClass::C2;
      else if (c == "C>2") ev.config_class = ConfigClass::Cgt2;
      else bad(line_no, "unknown \"class\"");
    }
    if (j.contains("a")) ev.top_plane_radius = need_finite(j, "a", line_no);
    if (j.contains("monitors")) {
      if (!j["monitors"].is_array()) bad(line_no, "\"monitors\" must be an array");
      for (const json& m : j["monitors"]) ev.monitor_flags.push_back(m.get<std::string>());
    }
    t.events.push_back(std::move(ev));
  }

  if (!have_header) throw TraceError("trace is empty: missing header line");
  if (!have_summary) t.summary.events_used = static_cast<int>(t.events.size());
  return t;
}

Trace parse_trace_string(const std::string& text) {
  std::istringstream is(text);
  return parse_trace(is);
}

Trace load_trace(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw TraceError("cannot open trace: " + path);
  return parse_trace(in);
}

}  // namespace gather3d
