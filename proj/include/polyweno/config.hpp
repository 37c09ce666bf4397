#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "polyweno/simulation.hpp"

namespace polyweno {

inline constexpr std::string_view kVersion = "0.1.0";

struct OutputOptions {
  bool plot_script = true;
  friend bool operator==(const OutputOptions&, const OutputOptions&) = default;
};

struct RunConfig {
  SimConfig sim;
  OutputOptions output;
  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

struct ParsedConfig {
  RunConfig config;
  std::vector<std::string> warnings;
};

/// Parse flat `key = value` text. `[section]` headers and `#` comments are
/// accepted; unknown keys, malformed numbers and out-of-range values throw
/// ConfigError naming the key and line. `overrides` are `key=value` strings
/// applied after the file.
ParsedConfig parse_config(std::string_view text, const std::vector<std::string>& overrides = {});

/// Render every resolved value; parse_config(print_config(c)).config == c.
std::string print_config(const RunConfig& config);

/// Fixed-width snapshot file name embedding the requested time.
std::string snapshot_filename(double requested_time);

/// Write timeseries.csv, one snapshot CSV per snapshot, run_manifest.cfg and
/// (optionally) plot.gp into `out_dir`. Returns the written paths.
std::vector<std::filesystem::path> write_outputs(const SimulationResult& result, const RunConfig& config,
                                                 const std::filesystem::path& out_dir);

struct SnapshotTable {
  std::vector<double> x;
  std::vector<double> u;
};

SnapshotTable read_snapshot_csv(const std::filesystem::path& path);

}  // namespace polyweno
