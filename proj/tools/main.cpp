#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"deterministic adversarial simulator for 3D robot gathering"};
  app.require_subcommand(1);

  std::string config_path, trace_path, seeds_text;
  gather3d::BatchOptions batch;
  gather3d::GenOptions gen;

  CLI::App* run_cmd =
      app.add_subcommand("run", "simulate one configuration and write its trace");
  run_cmd->add_option("config", config_path, "run configuration (JSON)")->required();
  run_cmd->add_option("-o,--trace", trace_path, "trace output path (JSONL)")->required();

  CLI::App* batch_cmd =
      app.add_subcommand("batch", "sweep a seed range over one configuration");
  batch_cmd->add_option("config", batch.config_path, "run configuration (JSON)")
      ->required();
  batch_cmd->add_option("--seeds", seeds_text, "inclusive seed range A..B")->required();
  batch_cmd->add_option("-o,--out", batch.out_path, "summary output path (CSV)")
      ->required();
  batch_cmd->add_option("-j,--threads", batch.threads, "worker threads (0 = auto)");

  CLI::App* check_cmd =
      app.add_subcommand("check", "replay a trace through the run-time monitors");
  check_cmd->add_option("trace", trace_path, "trace file (JSONL)")->required();

  CLI::App* gen_cmd = app.add_subcommand("gen", "generate a random run configuration");
  gen_cmd->add_option("-n,--robots", gen.n, "number of robots")->required();
  gen_cmd->add_option("--z-layers", gen.z_layers,
                      "0 for continuous z, k for k shared height levels");
  gen_cmd->add_option("--spread", gen.spread, "coordinate range width");
  gen_cmd->add_option("--seed", gen.seed, "generator seed");
  gen_cmd->add_option("-o,--out", gen.out_path, "output path (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : gather3d::kExitBadInput;
  }

  if (run_cmd->parsed()) return gather3d::cmd_run(config_path, trace_path);
  if (batch_cmd->parsed()) {
    if (!gather3d::parse_seed_range(seeds_text, batch.seed_begin, batch.seed_end)) {
      std::fprintf(stderr, "batch: invalid seed range \"%s\"\n", seeds_text.c_str());
      return gather3d::kExitBadInput;
    }
    return gather3d::cmd_batch(batch);
  }
  if (check_cmd->parsed()) return gather3d::cmd_check(trace_path);
  if (gen_cmd->parsed()) return gather3d::cmd_gen(gen);
  return gather3d::kExitBadInput;
}
