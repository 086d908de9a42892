#ifndef GATHER3D_TOOLS_CLI_HPP
#define GATHER3D_TOOLS_CLI_HPP

#include <cstdint>
#include <string>

namespace gather3d {

/* Exit contract for every subcommand. */
inline constexpr int kExitOk = 0;
inline constexpr int kExitBadInput = 1;       // malformed config or trace
inline constexpr int kExitNotGathered = 2;    // budget ran out first
inline constexpr int kExitMonitorViolation = 3;

int cmd_run(const std::string& config_path, const std::string& trace_path);

struct BatchOptions {
  std::string config_path;
  std::uint64_t seed_begin = 0;
  std::uint64_t seed_end = 0;  // inclusive
  std::string out_path;
  int threads = 0;             // 0: hardware concurrency
};
int cmd_batch(const BatchOptions& opt);

int cmd_check(const std::string& trace_path);

struct GenOptions {
  int n = 0;
  int z_layers = 0;
  double spread = 5.0;
  std::uint64_t seed = 0;
  std::string out_path;  // empty: stdout
};
int cmd_gen(const GenOptions& opt);

/* "A..B" or a single "A"; inclusive on both ends. */
bool parse_seed_range(const std::string& text, std::uint64_t& lo, std::uint64_t& hi);

}  // namespace gather3d

#endif
