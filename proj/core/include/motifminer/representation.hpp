#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "motifminer/distances.hpp"
#include "motifminer/schema.hpp"

namespace motifminer {

struct RepresentationConfig {
  std::size_t filter_len = 5;        // odd, in samples; 1 disables filtering
  std::size_t reduction_factor = 1;  // keep every k-th sample
  std::size_t k_per_param = 4;       // discretization intervals per quantitative parameter
  double aggregation_threshold = 0.0;
  std::uint64_t kmeans_seed = 0;

  void validate() const;
};

/// Smooth quantitative columns with a centered triangular weighted mean
/// (boundary samples replicated), decimate by `reduction_factor` (majority
/// vote per window for qualitative columns) and min-max normalize.
/// Returns a series at Stage::Normalized.
Series preprocess(const Series& raw, const RepresentationConfig& cfg);

/// Triangular weights of a filter of odd length `len`: len/2+1-|k| for
/// offsets -len/2..len/2.
std::vector<double> triangular_weights(std::size_t len);

/// 1-D k-means over one normalized quantitative column (k-means++ seeding from
/// `seed`, Lloyd iterations). Returns k-1 strictly increasing breakpoints at the
/// midpoints of adjacent sorted centers. With fewer than k distinct values, k is
/// reduced to the distinct count (with a warning); fewer than 2 distinct values
/// raises a ValidationError.
std::vector<double> fit_breakpoints(const Series& train, std::size_t param, std::size_t k,
                                    std::uint64_t seed = 0);

/// Schema copy where every quantitative parameter without fixed breakpoints
/// receives breakpoints fitted on `normalized`.
Schema fit_schema(const Series& normalized, const RepresentationConfig& cfg);

/// Interval code (1..a) of a normalized value: alpha_j iff beta_{j-1} <= x < beta_j.
Code discretize_value(double x, const std::vector<double>& breakpoints);

/// Series of discrete codes, aligned row by row with the series it came from.
struct DiscreteSeries {
  SchemaPtr schema;
  std::vector<double> timestamps;
  std::vector<Code> codes;  // row-major, size() x dims()

  std::size_t size() const noexcept { return timestamps.size(); }
  std::size_t dims() const noexcept { return schema ? schema->size() : 0; }
  Code code(std::size_t row, std::size_t k) const { return codes[row * dims() + k]; }
  std::span<const Code> rows(std::size_t begin, std::size_t end) const {
    return std::span<const Code>(codes).subspan(begin * dims(), (end - begin) * dims());
  }
};

/// Maps normalized quantitative cells to interval codes using the breakpoints
/// of `schema`; qualitative cells pass through.
DiscreteSeries discretize(const Series& normalized, const SchemaPtr& schema);

struct Symbol {
  std::vector<Code> codes;
  double start_time = 0.0;
  double duration = 0.0;
  Span source;  // rows of the preprocessed series it stands for
};

/// Time-stamped sequence of aggregated p-dimensional symbols.
class SymbolicSeries {
 public:
  SymbolicSeries() = default;
  SymbolicSeries(SchemaPtr schema, std::vector<Symbol> symbols);

  const Schema& schema() const noexcept { return *schema_; }
  const SchemaPtr& schema_ptr() const noexcept { return schema_; }
  std::size_t size() const noexcept { return symbols_.size(); }
  std::size_t dims() const noexcept { return schema_ ? schema_->size() : 0; }
  const std::vector<Symbol>& symbols() const noexcept { return symbols_; }
  const Symbol& operator[](std::size_t i) const { return symbols_[i]; }
  /// Codes of symbols [begin, end), row-major.
  std::vector<Code> codes(std::size_t begin, std::size_t end) const;
  /// Preprocessed-series span covered by symbols [first, last].
  Span source_span(std::size_t first, std::size_t last) const;
  Span symbol_span(std::size_t first, std::size_t last) const;
  double duration() const;

 private:
  SchemaPtr schema_;
  std::vector<Symbol> symbols_;
};

/// Aggregate vector of rows [begin, end): discretized mean of the normalized
/// values for quantitative columns, most frequent code (earliest first on
/// ties) for qualitative columns.
std::vector<Code> aggregate_vector(const DiscreteSeries& d, const Series& normalized,
                                   std::size_t begin, std::size_t end);

/// Greedy temporal aggregation: from the first unconsumed row, take the longest
/// window whose mindist to its repeated aggregate vector is <= threshold.
SymbolicSeries aggregate(const DiscreteSeries& d, const Series& normalized,
                         const SymbolDistanceTable& tables, double threshold);

/// Full abstraction pipeline output.
struct Representation {
  Series preprocessed;  // normalized; schema carries the fitted breakpoints
  DiscreteSeries discrete;
  SymbolDistanceTable tables;
  SymbolicSeries symbolic;
};

/// preprocess -> fit breakpoints (unless `fixed_schema` already has them) ->
/// discretize -> aggregate.
Representation represent(const Series& raw, const RepresentationConfig& cfg,
                         const std::optional<Schema>& fixed_schema = std::nullopt);

/// Re-runs discretization and aggregation on an already preprocessed series
/// whose schema carries breakpoints.
Representation represent_preprocessed(const Series& preprocessed, const RepresentationConfig& cfg);

}  // namespace motifminer
