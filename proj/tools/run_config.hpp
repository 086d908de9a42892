#ifndef GATHER3D_TOOLS_RUN_CONFIG_HPP
#define GATHER3D_TOOLS_RUN_CONFIG_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "gather3d/errors.hpp"
#include "gather3d/trace.hpp"

namespace gather3d {

struct ConfigError : Error { using Error::Error; };

/* One runnable problem instance: who starts where with which frame, the
 * simulation parameters, and the crash plan. */
struct RunConfig {
  std::vector<RobotSetup> robots;
  SimParams params;
  FaultPlan faults;
};

/* Strict JSON parse + semantic validation; throws ConfigError with the
 * offending field in the message.  Frame rotations are given in degrees. */
RunConfig parse_run_config(const std::string& text);
RunConfig load_run_config(const std::string& path);

void write_run_config(const RunConfig& rc, std::ostream& os);
void save_run_config(const RunConfig& rc, const std::string& path);

}  // namespace gather3d

#endif
