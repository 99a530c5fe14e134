#pragma once

#include <cstdint>
#include <vector>

#include "motifminer/mining.hpp"
#include "motifminer/representation.hpp"
#include "motifminer/simulator.hpp"

namespace motifminer {

/// Reference activity of the comparison set: getting ready in the morning,
/// about an hour long.
Script morning_routine();

/// Seven unrelated hour-long activities (sleeping, meals, quiet activities...).
std::vector<Script> other_activities();

/// Nineteen raw sequences: 0 is the reference, 1-8 are noisy variants of it
/// (class 0), 9-15 other activities, 16 the reference performed slowly, 17
/// the reference with a long worrying interruption and 18 the reference with
/// an inflated heart rate (class 1).
struct ComparisonFixture {
  std::vector<Series> sequences;
  std::vector<int> classes;  // 0 or 1; the reference itself is class 0
};

/// Noise applied to the class-0 variants: value noise, stretch in
/// [0.8, 1.25] and one interruption of up to 10 minutes.
NoiseSpec default_variant_noise();

ComparisonFixture comparison_fixture(const SimConfig& cfg, std::uint64_t seed,
                                     const NoiseSpec& variant = default_variant_noise());

/// Preprocessed (normalized) copy of every fixture sequence.
std::vector<Series> preprocess_all(const std::vector<Series>& raw, const RepresentationConfig& rep);

/// Symbolic representation of every sequence with breakpoints fitted on their
/// concatenation, so that codes are comparable across sequences.
std::vector<SymbolicSeries> represent_all(const std::vector<Series>& raw,
                                          const RepresentationConfig& rep);

/// Mean over `cfg.proj` masks of the fraction of reference windows that share
/// a bucket with at least one window of each sequence (the reference itself
/// included, at 1). Sequences shorter than the window get 0.
std::vector<double> reference_collision_rates(const std::vector<SymbolicSeries>& sequences,
                                              std::size_t reference, const ProjectionConfig& cfg);

}  // namespace motifminer
