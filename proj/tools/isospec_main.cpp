#include <cstdio>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "isospec/run_config.hpp"
#include "isospec/version.hpp"

int main(int argc, char** argv) {
  CLI::App app{"spectral experiments for order-1 isotropic oscillator perturbations"};
  app.set_version_flag("--version", isospec::kVersion);
  app.require_subcommand(1);

  std::string config_path;
  std::string output_dir;
  int threads = 0;
  std::uint64_t seed = 0;
  bool have_seed = false;

  auto* run = app.add_subcommand("run", "run an experiment from a JSON config");
  run->add_option("config", config_path, "path to the experiment config")->required();
  run->add_option("--output-dir", output_dir, "override the config's output directory");
  run->add_option("--threads", threads, "worker thread cap (0 = hardware)");
  auto* seed_opt = run->add_option("--seed", seed, "override the config's seed");

  auto* list = app.add_subcommand("list", "print the catalog of shipped recipes");

  CLI11_PARSE(app, argc, argv);
  have_seed = seed_opt->count() > 0;

  if (list->parsed()) {
    std::fputs(isospec::experiments_catalog().c_str(), stdout);
    return 0;
  }

  std::optional<std::string> outdir;
  if (!output_dir.empty()) outdir = output_dir;
  std::optional<int> thr;
  if (threads > 0) thr = threads;
  std::optional<std::uint64_t> sd;
  if (have_seed) sd = seed;

  auto outcome = isospec::run_experiment(config_path, outdir, thr, sd);
  if (!outcome.manifest_path.empty())
    std::printf("manifest: %s\n", outcome.manifest_path.c_str());
  if (outcome.exit_code != 0)
    std::fprintf(stderr, "run failed with exit code %d (see manifest)\n", outcome.exit_code);
  return outcome.exit_code;
}
