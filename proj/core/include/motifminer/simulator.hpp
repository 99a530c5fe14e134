#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "motifminer/evaluation.hpp"
#include "motifminer/representation.hpp"
#include "motifminer/schema.hpp"

namespace motifminer {

/// Posture codes of the monitoring schema.
enum Posture : int { Lying = 1, Sitting = 2, Standing = 3 };

/// Generative parameters of the cascade room -> posture -> activity -> heart rate.
struct SimConfig {
  std::uint64_t rng_seed = 0;
  double days = 1.0;
  double sampling_period = 60.0;  // seconds
  int rooms = 7;

  // Dwell times, in minutes, drawn log-uniformly.
  double room_dwell_min = 3.0;
  double room_dwell_max = 12.0;
  double posture_dwell_min = 2.0;
  double posture_dwell_max = 6.0;

  // posture_given_room[r][q]: weight of posture q+1 in room r+1.
  std::vector<std::array<double, 3>> posture_given_room = {
      {0.70, 0.15, 0.15},  // bedroom
      {0.00, 0.20, 0.80},  // bathroom
      {0.00, 0.45, 0.55},  // kitchen
      {0.25, 0.60, 0.15},  // living room
      {0.00, 0.70, 0.30},  // toilet
      {0.00, 0.05, 0.95},  // hall
      {0.00, 0.80, 0.20},  // office
  };
  // Activity level per posture (arbitrary unit) and its AR(1) noise.
  std::array<double, 3> activity_mean = {0.8, 3.0, 6.5};
  std::array<double, 3> activity_sd = {0.4, 0.8, 1.4};
  double activity_ar = 0.8;
  // heart_rate = hr_intercept + hr_slope * activity + noise.
  double hr_intercept = 55.0;
  double hr_slope = 4.5;
  double hr_noise_sd = 2.5;

  double start_time = 0.0;

  void validate() const;
  std::size_t samples() const;
};

/// The simulator schema: monitoring_schema(cfg.rooms).
Schema simulator_schema(const SimConfig& cfg);

/// One scripted behavioural state held for `minutes`. `activity` < 0 means
/// the posture baseline.
struct Step {
  int room = 1;
  int posture = Sitting;
  double minutes = 5.0;
  double activity = -1.0;
};
using Script = std::vector<Step>;

/// Per-sample state timeline.
struct Timeline {
  std::vector<int> rooms;
  std::vector<int> postures;
  std::vector<double> activity_means;  // per sample baseline
};

/// Samples the quantitative columns for a timeline (activity AR(1) noise,
/// heart rate affine in activity plus noise, both clipped to the bounds).
Series render(const Timeline& timeline, const SimConfig& cfg, std::mt19937_64& rng,
              double start_time = 0.0);

/// Appends a scripted activity to a timeline, each step lasting
/// round(minutes * scale) samples (at least one).
void append_script(Timeline& t, const Script& script, const SimConfig& cfg, double scale = 1.0);

/// Appends `samples` samples of random room walk (no daily structure).
void append_random_walk(Timeline& t, std::size_t samples, const SimConfig& cfg,
                        std::mt19937_64& rng);

/// Background sequence without any planted structure.
Series generate_nonpattern(const SimConfig& cfg);

/// Daily habits used as the pool for motif selection.
struct HabitTemplate {
  struct Block {
    std::string label;
    double start_minute = 0.0;  // minute of the day
    Script script;
  };
  std::vector<Block> blocks;
  double start_jitter = 30.0;     // minutes, uniform +-
  double duration_jitter = 0.2;   // relative, uniform +-
};

HabitTemplate default_habits();

/// Schedule-driven series: template blocks placed every day with jitter and
/// random walk between them.
Series generate_habits(const SimConfig& cfg, const HabitTemplate& habits = default_habits());

struct MotifPick {
  Series motif;
  Span source;  // rows of the habit series
  std::size_t symbols = 0;
};

/// Random subsequence with a duration in [min_minutes, max_minutes] whose own
/// representation (breakpoints of `schema`) has at least `min_symbols`
/// symbols. Throws after `max_tries` failures.
MotifPick pick_motif(const Series& habits, const RepresentationConfig& rep, const Schema& schema,
                     std::mt19937_64& rng, double min_minutes = 30.0, double max_minutes = 120.0,
                     std::size_t min_symbols = 4, std::size_t max_tries = 200);

struct NoiseSpec {
  std::vector<double> value_noise;  // per parameter, uniform +- magnitude in raw units
  double qualitative_flip = 0.0;    // per-sample probability of a random qualitative value
  std::size_t interruptions = 0;    // bursts per instance
  double interruption_minutes = 0.0;  // maximum burst length
  double stretch_min = 1.0;
  double stretch_max = 1.0;
  double heart_rate_inflation = 0.0;  // relative increase of the heart-rate column

  void validate(std::size_t dims) const;
  bool is_zero() const;
};

/// One motif occurrence after stretching, value noise, flips, interruption
/// bursts and heart-rate inflation. `stretch` receives the drawn factor.
Series make_instance(const Series& motif, const NoiseSpec& noise, const SimConfig& cfg,
                     std::mt19937_64& rng, double* stretch = nullptr);

struct Injected {
  Series series;
  GroundTruth truth;
};

/// Overwrites `base` with each instance at random non-overlapping offsets
/// separated by at least `min_gap` samples. Instances are placed in order and
/// the ground truth lists them by position in time.
Injected inject(const Series& base, const std::vector<Series>& instances, int motif_id,
                std::mt19937_64& rng, std::size_t min_gap = 60,
                const std::vector<double>& inflation = {}, const std::vector<double>& stretch = {});

/// Convenience wrapper: `count` noisy instances of `motif`.
Injected inject(const Series& base, const Series& motif, std::size_t count, const NoiseSpec& noise,
                const SimConfig& cfg, std::mt19937_64& rng, std::size_t min_gap = 60);

}  // namespace motifminer
