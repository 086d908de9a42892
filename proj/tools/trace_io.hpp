#ifndef GATHER3D_TOOLS_TRACE_IO_HPP
#define GATHER3D_TOOLS_TRACE_IO_HPP

#include <iosfwd>
#include <string>

#include "gather3d/errors.hpp"
#include "gather3d/trace.hpp"

namespace gather3d {

struct TraceError : Error { using Error::Error; };

inline constexpr const char* kTraceSchema = "gather3d-trace/1";

/* 17 significant digits: every finite double round-trips exactly, and the
 * text for a given value is identical on every run. */
std::string format_double(double v);

/* JSONL: one header line, one line per event, one summary line. */
void write_trace(const Trace& t, std::ostream& os);
std::string trace_to_string(const Trace& t);
void save_trace(const Trace& t, const std::string& path);

/* Strict parse of the same format; throws TraceError naming the bad line. */
Trace parse_trace(std::istream& is);
Trace parse_trace_string(const std::string& text);
Trace load_trace(const std::string& path);

}  // namespace gather3d

#endif
