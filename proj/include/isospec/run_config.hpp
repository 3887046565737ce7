#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include <nlohmann/json_fwd.hpp>

namespace isospec {

// exit codes: 0 success (all criteria pass), 1 numerical failure or red
// criterion, 2 config validation error, 3 trust-region / precondition error
struct RunOutcome {
  int exit_code = 0;
  std::string manifest_path;
};

RunOutcome run_experiment(const std::filesystem::path& config_path,
                          const std::optional<std::string>& output_dir_override,
                          std::optional<int> threads,
                          std::optional<std::uint64_t> seed_override);

// Text catalog of the shipped reproduction recipes with expected PASS bands.
std::string experiments_catalog();

// Validates a parsed config against the strict schema; throws ConfigError
// naming the offending key.
void validate_config(const nlohmann::json& cfg);

}  // namespace isospec
