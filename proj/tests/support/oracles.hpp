#pragma once

// Independent reference implementations used to check the library. They are
// written for clarity over speed and share no code with the library kernels.

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "motifminer/representation.hpp"
#include "motifminer/schema.hpp"

namespace motifminer::oracle {

/// Literal match test: every component strictly closer than its epsilon.
/// Quantitative cells are compared as given (already normalized), ordered
/// cells by |a-b|/(v-1), unordered cells by equality.
bool points_match(const Series& a, std::size_t i, const Series& b, std::size_t j,
                  const std::vector<double>& epsilon);

/// Longest chain of index pairs (i1<i2<..., j1<j2<...) whose points match and
/// satisfy |i-j| <= delta and, when end-anchored, |(N-i)-(M-j)| <= delta.
/// Exhaustive search over all chains.
std::size_t lcss_exhaustive(const Series& a, const Series& b, const std::vector<double>& epsilon,
                            std::size_t delta, bool end_anchored);

/// Minimum over every monotone warping path of the summed squared per-step
/// costs, square-rooted. Exhaustive path enumeration.
double dtw_exhaustive(const Series& a, const Series& b);

/// Exact per-iteration probability that the cells in `cells` are all masked,
/// by enumerating every mask the projection can draw.
double collision_probability_by_enumeration(
    std::size_t w, std::size_t dims, std::size_t w_mask, std::size_t p_mask,
    const std::vector<std::pair<std::size_t, std::size_t>>& cells);

/// Aggregate of rows [begin, end) computed from first principles: the
/// discretized mean for quantitative columns, the earliest most frequent code
/// for qualitative ones.
std::vector<Code> aggregate_of(const Series& normalized, std::size_t begin, std::size_t end);

/// Squared-sum mindist of rows [begin, end) of the discrete series against
/// their repeated aggregate (one symbol per sample, so n equals the word length).
double window_mindist(const Representation& rep, std::size_t begin, std::size_t end);

struct AggregationCheck {
  std::size_t symbols = 0;
  std::size_t round_trip_violations = 0;  // symbol window above threshold
  std::size_t maximality_violations = 0;  // symbol merged with its successor within threshold
  std::size_t coverage_violations = 0;    // gaps or overlaps between symbol sources
};

AggregationCheck check_aggregation(const Representation& rep, double threshold);

/// Schema with one parameter of each kind plus an extra quantitative one.
Schema mixed_schema();

/// Random normalized series over `schema` (quantitative values drawn on a
/// coarse grid so that ties and near-ties occur).
Series random_series(const SchemaPtr& schema, std::size_t n, std::mt19937_64& rng);

}  // namespace motifminer::oracle
