#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "motifminer/distances.hpp"
#include "motifminer/representation.hpp"
#include "motifminer/schema.hpp"

namespace motifminer {

struct ProjectionConfig {
  std::size_t w = 4;       // symbols per basic subsequence
  std::size_t w_mask = 1;  // symbol positions masked entirely
  std::size_t p_mask = 1;  // parameters masked per unmasked symbol
  std::size_t proj = 40;   // projection iterations
  std::uint64_t rng_seed = 0;

  void validate(std::size_t dims) const;
};

/// Sliding windows of `w` symbols over a symbolic series, one row per start
/// position (N - w + 1 rows of w x p codes).
class WindowMatrix {
 public:
  WindowMatrix(const SymbolicSeries& sym, std::size_t w);

  std::size_t count() const noexcept { return count_; }
  std::size_t w() const noexcept { return w_; }
  std::size_t dims() const noexcept { return dims_; }
  std::span<const Code> word(std::size_t i) const {
    return std::span<const Code>(codes_).subspan(i * w_ * dims_, w_ * dims_);
  }
  /// Symbols i .. i + w - 1.
  Span symbol_span(std::size_t i) const { return spans_[i]; }

 private:
  std::size_t w_ = 0;
  std::size_t dims_ = 0;
  std::size_t count_ = 0;
  std::vector<Code> codes_;
  std::vector<Span> spans_;
};

WindowMatrix windows(const SymbolicSeries& sym, std::size_t w);

/// Cells (symbol position, parameter) of a w x p window excluded from hashing.
struct ProjectionMask {
  std::size_t w = 0;
  std::size_t dims = 0;
  std::vector<bool> masked;  // row-major w x p

  bool is_masked(std::size_t pos, std::size_t k) const { return masked[pos * dims + k]; }
};

/// Masks `w_mask` whole symbol positions, then for each remaining position an
/// independent draw (without replacement) of `p_mask` parameters.
ProjectionMask draw_mask(const ProjectionConfig& cfg, std::size_t dims, std::mt19937_64& rng);

/// RNG stream of one projection iteration, derived from the run seed so that
/// iterations can execute in any order.
std::mt19937_64 projection_rng(std::uint64_t seed, std::size_t iteration);

/// Stable 64-bit bucket key of every window under `mask`.
std::vector<std::uint64_t> project_once(const WindowMatrix& windows, const ProjectionMask& mask);

/// Sparse upper-triangular collision counts between window indices. Pairs
/// closer than the exclusion band (|i - j| < band) are never counted.
class CollisionMatrix {
 public:
  struct Cell {
    std::size_t i = 0;
    std::size_t j = 0;
    std::uint32_t count = 0;
  };

  CollisionMatrix() = default;
  CollisionMatrix(std::size_t size, std::size_t band) : size_(size), band_(band) {}

  std::size_t size() const noexcept { return size_; }
  std::size_t band() const noexcept { return band_; }
  std::size_t nonzero() const noexcept { return cells_.size(); }

  /// Count of the unordered pair {i, j}; 0 inside the exclusion band.
  std::uint32_t count(std::size_t i, std::size_t j) const;
  void increment(std::size_t i, std::size_t j, std::uint32_t by = 1);
  /// Adds one collision for every eligible pair sharing a bucket.
  void accumulate(std::span<const std::uint64_t> buckets);
  void merge(const CollisionMatrix& other);

  /// Non-zero cells ordered by descending count, then (i, j) ascending.
  std::vector<Cell> sorted_cells() const;
  std::uint32_t max_count() const;

  friend bool operator==(const CollisionMatrix& a, const CollisionMatrix& b) {
    return a.size_ == b.size_ && a.band_ == b.band_ && a.cells_ == b.cells_;
  }

 private:
  static std::uint64_t key(std::size_t i, std::size_t j) {
    return (static_cast<std::uint64_t>(i) << 32) | static_cast<std::uint64_t>(j);
  }
  std::size_t size_ = 0;
  std::size_t band_ = 0;
  std::unordered_map<std::uint64_t, std::uint32_t> cells_;
};

/// Runs all `cfg.proj` iterations. `threads` > 1 splits iterations across
/// worker threads; the result is identical to the sequential run.
CollisionMatrix project(const WindowMatrix& windows, const ProjectionConfig& cfg,
                        std::size_t threads = 1);

/// Probability that one projection iteration hashes two windows differing
/// exactly at `cells` (pairs of symbol position, parameter) into one bucket.
double collision_probability(std::size_t w, std::size_t dims, std::size_t w_mask,
                             std::size_t p_mask,
                             std::span<const std::pair<std::size_t, std::size_t>> cells);

struct MiningThresholds {
  std::uint32_t collision_threshold = 20;
  double distance_threshold = 0.35;
  std::size_t neighbourhood_radius = 1;
  double min_motif_duration = 20.0 * 60.0;  // seconds
  std::size_t min_symbols = 4;
  std::size_t beam_width = 8;
  double acceptable_removal_rate = 0.5;

  void validate(std::size_t proj) const;
};

/// A pair of similar subsequences after pattern growing.
struct GrownPair {
  Span first_symbols;   // into the symbolic series
  Span second_symbols;
  Span first;           // into the preprocessed series
  Span second;
  double distance = 0.0;           // LCSS distance of the grown originals
  std::uint32_t seed_count = 0;    // collision count of the accepted seed cell
  std::size_t seed_i = 0;
  std::size_t seed_j = 0;
};

/// Examines collision cells from the largest count down, confirms candidates
/// on the preprocessed originals (best pair of the close collision
/// neighbourhood), and grows confirmed pairs left and right while both the
/// collision and the distance criteria hold.
std::vector<GrownPair> examine(const CollisionMatrix& collisions, const WindowMatrix& windows,
                               const SymbolicSeries& sym, const Series& preprocessed,
                               const MiningThresholds& thresholds, const LcssParams& lcss);

/// One grown subsequence entering the divisive synthesis step.
struct Subsequence {
  Span span;          // preprocessed rows
  Span symbol_span;   // symbols
  std::size_t pair_index = 0;
};

struct TentativeMotif {
  Span span;
  Span symbol_span;
  std::vector<std::size_t> support;  // indices into the examined subsequences
};

/// Result of dividing one overlap group: groups of member indices (into the
/// input list) in which every member overlaps every other, plus the removed ones.
struct Division {
  std::vector<std::vector<std::size_t>> groups;
  std::vector<std::size_t> removed;
};

/// Divisive synthesis of a list of intervals into pairwise-overlapping groups,
/// removing as few intervals as possible (bounded beam search with a greedy
/// fallback when no division within the acceptable removal rate is found).
Division divide_overlaps(std::span<const Span> intervals, std::size_t beam_width,
                         double acceptable_removal_rate);

/// Flattens grown pairs into subsequences (first and second of each pair).
std::vector<Subsequence> subsequences_of(const std::vector<GrownPair>& pairs);

std::vector<TentativeMotif> extract_tentative_motifs(const std::vector<GrownPair>& pairs,
                                                     const MiningThresholds& thresholds);
std::vector<TentativeMotif> extract_tentative_motifs(const std::vector<Subsequence>& subsequences,
                                                     const MiningThresholds& thresholds);

}  // namespace motifminer
