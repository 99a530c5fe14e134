#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace motifminer {

/// Base class for every error raised by the library. `kind()` is a short
/// machine-readable tag ("validation", "io", "config", ...) used by the CLI
/// when it emits an error record.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

/// Raised when a series violates one of its invariants. Row and column are
/// -1 when the violation is not tied to a cell.
class ValidationError : public Error {
 public:
  ValidationError(const std::string& what, std::ptrdiff_t row = -1,
                  std::ptrdiff_t column = -1);
  std::ptrdiff_t row() const noexcept { return row_; }
  std::ptrdiff_t column() const noexcept { return column_; }

 private:
  std::ptrdiff_t row_;
  std::ptrdiff_t column_;
};

enum class ParameterKind { Quantitative, OrderedQualitative, UnorderedQualitative };

const char* to_string(ParameterKind kind);
ParameterKind parameter_kind_from_string(const std::string& name);

/// Discrete code of a symbol or qualitative value. Codes are 1-based.
using Code = std::int32_t;

struct ParameterSchema {
  std::string name;
  ParameterKind kind = ParameterKind::Quantitative;
  // Quantitative only.
  double min_bound = 0.0;
  double max_bound = 1.0;
  std::vector<double> breakpoints;  // normalized, strictly increasing, in (0,1)
  // Qualitative only.
  int cardinality = 0;
  std::vector<std::string> labels;

  static ParameterSchema quantitative(std::string name, double min_bound, double max_bound,
                                      std::vector<double> breakpoints = {});
  static ParameterSchema ordered(std::string name, int cardinality,
                                 std::vector<std::string> labels = {});
  static ParameterSchema unordered(std::string name, int cardinality,
                                   std::vector<std::string> labels = {});

  bool is_quantitative() const noexcept { return kind == ParameterKind::Quantitative; }
  bool is_qualitative() const noexcept { return !is_quantitative(); }
  /// Number of discrete symbols: breakpoints + 1 for quantitative, v otherwise.
  int alphabet_size() const noexcept;

  /// Throws ValidationError when the schema's own invariants do not hold.
  void validate() const;
};

using Schema = std::vector<ParameterSchema>;
using SchemaPtr = std::shared_ptr<const Schema>;

SchemaPtr make_schema(Schema schema);
void validate_schema(const Schema& schema);

/// The four-parameter home-monitoring schema: moves (unordered, one code per
/// room), postures (ordered lying < sitting < standing), activity level and
/// mean heart rate (quantitative).
Schema monitoring_schema(int rooms = 7);

enum class Stage { Raw, Preprocessed, Normalized };

const char* to_string(Stage stage);

/// Inclusive index range into a Series or SymbolicSeries. `start_time` is the
/// instant of the first element and `end_time` the instant at which the last
/// element ends, so `end_time - start_time` is the covered duration.
struct Span {
  std::size_t start_index = 0;
  std::size_t end_index = 0;
  double start_time = 0.0;
  double end_time = 0.0;

  std::size_t length() const noexcept { return end_index - start_index + 1; }
  double duration() const noexcept { return end_time - start_time; }
  bool overlaps(const Span& other) const noexcept {
    return start_index <= other.end_index && other.start_index <= end_index;
  }
  bool contains(const Span& other) const noexcept {
    return start_index <= other.start_index && other.end_index <= end_index;
  }
  friend bool operator==(const Span&, const Span&) = default;
};

/// Row-major view over contiguous rows of a series.
struct RowsView {
  std::span<const double> values;
  std::size_t rows = 0;
  std::size_t dims = 0;

  std::span<const double> row(std::size_t i) const { return values.subspan(i * dims, dims); }
  double at(std::size_t i, std::size_t k) const { return values[i * dims + k]; }
};

/// Timestamped p-dimensional heterogeneous sequence. Cells are stored as
/// doubles; qualitative cells hold exact small integers. Immutable.
class Series {
 public:
  Series() = default;
  Series(SchemaPtr schema, std::vector<double> timestamps, std::vector<double> values,
         Stage stage);

  const Schema& schema() const noexcept { return *schema_; }
  const SchemaPtr& schema_ptr() const noexcept { return schema_; }
  Stage stage() const noexcept { return stage_; }
  std::size_t size() const noexcept { return timestamps_.size(); }
  std::size_t dims() const noexcept { return schema_ ? schema_->size() : 0; }
  bool empty() const noexcept { return timestamps_.empty(); }

  const std::vector<double>& timestamps() const noexcept { return timestamps_; }
  const std::vector<double>& values() const noexcept { return values_; }
  double at(std::size_t row, std::size_t column) const { return values_[row * dims() + column]; }
  Code code(std::size_t row, std::size_t column) const {
    return static_cast<Code>(at(row, column));
  }
  std::span<const double> row(std::size_t i) const {
    return std::span<const double>(values_).subspan(i * dims(), dims());
  }
  std::vector<double> column(std::size_t k) const;

  RowsView view() const { return view(0, size()); }
  /// Rows [begin, end).
  RowsView view(std::size_t begin, std::size_t end) const;
  RowsView view(const Span& span) const { return view(span.start_index, span.end_index + 1); }

  /// Time covered by sample `i`: gap to the next sample, or the previous gap
  /// for the last sample (60 s for a single-sample series).
  double sample_duration(std::size_t i) const;
  /// Span over rows [start, end] with times filled in.
  Span span(std::size_t start, std::size_t end) const;
  Span full_span() const { return span(0, size() - 1); }
  /// Total covered time.
  double duration() const;

  Series with_schema(SchemaPtr schema) const;
  Series with_stage(Stage stage) const;

 private:
  SchemaPtr schema_;
  std::vector<double> timestamps_;
  std::vector<double> values_;
  Stage stage_ = Stage::Raw;
};

/// Returns normally iff every Series invariant holds; otherwise throws a
/// ValidationError naming the first violation and its location.
void validate_series(const Series& s);

/// Contiguous sub-series over `span` (inclusive). The schema is shared and the
/// stage preserved.
Series slice(const Series& s, const Span& span);
Series slice(const Series& s, std::size_t start, std::size_t end);

}  // namespace motifminer
