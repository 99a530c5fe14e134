#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <iosfwd>

#include "motifminer/clustering.hpp"
#include "motifminer/distances.hpp"
#include "motifminer/mining.hpp"
#include "motifminer/representation.hpp"
#include "motifminer/simulator.hpp"

namespace motifminer {

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error("config", what) {}
};

/// How the `simulate` command builds its data set.
struct SimulationPlan {
  double habit_days = 2.0;
  double motif_min_minutes = 30.0;
  double motif_max_minutes = 120.0;
  std::size_t motif_min_symbols = 4;
  std::size_t instances = 5;          // normal instances
  std::vector<double> abnormal_inflations;  // one extra inflated instance per entry
  std::size_t min_gap = 60;           // samples between instances
};

struct LcssConfig {
  double epsilon = 0.15;  // quantitative columns
  std::size_t delta = 30;
  bool end_anchored = true;
};

struct RunConfig {
  std::optional<std::uint64_t> seed;
  std::size_t threads = 1;

  // Inputs; relative paths resolve against the config file's directory.
  std::string schema_path;
  std::string input_path;
  std::string motifs_path;
  std::string truth_path;

  RepresentationConfig representation;
  LcssConfig lcss;
  ProjectionConfig projection;
  MiningThresholds mining;
  ClusteringConfig clustering;
  SimConfig simulation;
  NoiseSpec noise;
  SimulationPlan plan;

  /// Defaults tuned for the four-parameter monitoring data.
  static RunConfig defaults();

  LcssParams lcss_params(const Schema& schema) const;
  /// Validates every section against its module's invariants.
  void validate() const;
  /// Seed of a named stage, derived from the global seed. Throws without a seed.
  std::uint64_t stage_seed(const std::string& stage) const;
};

/// Reads a JSON config; missing keys keep their defaults, unknown keys are errors.
RunConfig load_config(const std::filesystem::path& path);
RunConfig parse_config(const std::string& json_text, const std::filesystem::path& base_dir = {});
std::string config_to_json(const RunConfig& cfg);

}  // namespace motifminer
