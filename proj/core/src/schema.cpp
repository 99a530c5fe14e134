#include "motifminer/schema.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace motifminer {

namespace {

constexpr double kDefaultSamplePeriod = 60.0;

std::string located(const std::string& what, std::ptrdiff_t row, std::ptrdiff_t column) {
  if (row < 0 && column < 0) return what;
  std::ostringstream os;
  os << what << " (";
  if (row >= 0) os << "row " << row;
  if (row >= 0 && column >= 0) os << ", ";
  if (column >= 0) os << "column " << column;
  os << ")";
  return os.str();
}

}  // namespace

ValidationError::ValidationError(const std::string& what, std::ptrdiff_t row,
                                 std::ptrdiff_t column)
    : Error("validation", located(what, row, column)), row_(row), column_(column) {}

const char* to_string(ParameterKind kind) {
  switch (kind) {
    case ParameterKind::Quantitative: return "quantitative";
    case ParameterKind::OrderedQualitative: return "ordered";
    case ParameterKind::UnorderedQualitative: return "unordered";
  }
  return "unknown";
}

ParameterKind parameter_kind_from_string(const std::string& name) {
  if (name == "quantitative") return ParameterKind::Quantitative;
  if (name == "ordered" || name == "ordered_qualitative") return ParameterKind::OrderedQualitative;
  if (name == "unordered" || name == "unordered_qualitative")
    return ParameterKind::UnorderedQualitative;
  throw ValidationError("unknown parameter kind '" + name + "'");
}

const char* to_string(Stage stage) {
  switch (stage) {
    case Stage::Raw: return "raw";
    case Stage::Preprocessed: return "preprocessed";
    case Stage::Normalized: return "normalized";
  }
  return "unknown";
}

ParameterSchema ParameterSchema::quantitative(std::string name, double min_bound,
                                              double max_bound,
                                              std::vector<double> breakpoints) {
  ParameterSchema s;
  s.name = std::move(name);
  s.kind = ParameterKind::Quantitative;
  s.min_bound = min_bound;
  s.max_bound = max_bound;
  s.breakpoints = std::move(breakpoints);
  return s;
}

ParameterSchema ParameterSchema::ordered(std::string name, int cardinality,
                                         std::vector<std::string> labels) {
  ParameterSchema s;
  s.name = std::move(name);
  s.kind = ParameterKind::OrderedQualitative;
  s.cardinality = cardinality;
  s.labels = std::move(labels);
  return s;
}

ParameterSchema ParameterSchema::unordered(std::string name, int cardinality,
                                           std::vector<std::string> labels) {
  ParameterSchema s = ordered(std::move(name), cardinality, std::move(labels));
  s.kind = ParameterKind::UnorderedQualitative;
  return s;
}

int ParameterSchema::alphabet_size() const noexcept {
  return is_quantitative() ? static_cast<int>(breakpoints.size()) + 1 : cardinality;
}

void ParameterSchema::validate() const {
  if (name.empty()) throw ValidationError("parameter name is empty");
  if (is_quantitative()) {
    if (!(min_bound < max_bound))
      throw ValidationError("parameter '" + name + "': min_bound must be below max_bound");
    for (std::size_t i = 0; i < breakpoints.size(); ++i) {
      const double b = breakpoints[i];
      if (!(b > 0.0 && b < 1.0))
        throw ValidationError("parameter '" + name + "': breakpoint outside (0,1)");
      if (i > 0 && !(breakpoints[i - 1] < b))
        throw ValidationError("parameter '" + name + "': breakpoints not strictly increasing");
    }
  } else {
    if (cardinality < 2)
      throw ValidationError("parameter '" + name + "': cardinality must be at least 2");
    if (!breakpoints.empty())
      throw ValidationError("parameter '" + name + "': qualitative parameter has breakpoints");
    if (!labels.empty() && labels.size() != static_cast<std::size_t>(cardinality))
      throw ValidationError("parameter '" + name + "': label count differs from cardinality");
  }
}

SchemaPtr make_schema(Schema schema) {
  return std::make_shared<const Schema>(std::move(schema));
}

void validate_schema(const Schema& schema) {
  if (schema.empty()) throw ValidationError("schema has no parameters");
  for (std::size_t k = 0; k < schema.size(); ++k) {
    schema[k].validate();
    for (std::size_t j = 0; j < k; ++j)
      if (schema[j].name == schema[k].name)
        throw ValidationError("duplicate parameter name '" + schema[k].name + "'");
  }
}

Schema monitoring_schema(int rooms) {
  std::vector<std::string> room_labels;
  const char* names[] = {"bedroom", "bathroom", "kitchen", "living_room",
                         "toilet",  "hall",     "office",  "dining_room"};
  for (int r = 0; r < rooms; ++r)
    room_labels.emplace_back(r < 8 ? names[r] : "room_" + std::to_string(r + 1));
  return {
      ParameterSchema::unordered("moves", rooms, std::move(room_labels)),
      ParameterSchema::ordered("postures", 3, {"lying", "sitting", "standing"}),
      ParameterSchema::quantitative("activity", 0.0, 12.0),
      ParameterSchema::quantitative("heart_rate", 40.0, 140.0),
  };
}

Series::Series(SchemaPtr schema, std::vector<double> timestamps, std::vector<double> values,
               Stage stage)
    : schema_(std::move(schema)),
      timestamps_(std::move(timestamps)),
      values_(std::move(values)),
      stage_(stage) {
  if (!schema_) throw ValidationError("series has no schema");
  if (values_.size() != timestamps_.size() * schema_->size())
    throw ValidationError("value count does not match rows x columns");
}

std::vector<double> Series::column(std::size_t k) const {
  std::vector<double> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = at(i, k);
  return out;
}

RowsView Series::view(std::size_t begin, std::size_t end) const {
  if (begin > end || end > size()) throw ValidationError("row range out of bounds");
  return RowsView{std::span<const double>(values_).subspan(begin * dims(), (end - begin) * dims()),
                  end - begin, dims()};
}

double Series::sample_duration(std::size_t i) const {
  if (i + 1 < size()) return timestamps_[i + 1] - timestamps_[i];
  if (size() >= 2) return timestamps_[size() - 1] - timestamps_[size() - 2];
  return kDefaultSamplePeriod;
}

Span Series::span(std::size_t start, std::size_t end) const {
  if (start > end || end >= size()) throw ValidationError("span out of bounds");
  return Span{start, end, timestamps_[start], timestamps_[end] + sample_duration(end)};
}

double Series::duration() const {
  if (empty()) return 0.0;
  return full_span().duration();
}

Series Series::with_schema(SchemaPtr schema) const {
  return Series(std::move(schema), timestamps_, values_, stage_);
}

Series Series::with_stage(Stage stage) const {
  return Series(schema_, timestamps_, values_, stage);
}

void validate_series(const Series& s) {
  validate_schema(s.schema());
  const auto& ts = s.timestamps();
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (!std::isfinite(ts[i])) throw ValidationError("timestamp not finite", i);
    if (i > 0 && !(ts[i - 1] < ts[i])) throw ValidationError("timestamps not increasing", i);
  }
  const Schema& schema = s.schema();
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t k = 0; k < schema.size(); ++k) {
      const double v = s.at(i, k);
      if (!std::isfinite(v)) throw ValidationError("value not finite", i, k);
      if (schema[k].is_qualitative()) {
        if (v != std::floor(v) || v < 1.0 || v > schema[k].cardinality)
          throw ValidationError("value out of alphabet", i, k);
      } else if (s.stage() == Stage::Normalized && (v < 0.0 || v > 1.0)) {
        throw ValidationError("normalized value outside [0,1]", i, k);
      }
    }
  }
}

Series slice(const Series& s, const Span& span) {
  return slice(s, span.start_index, span.end_index);
}

Series slice(const Series& s, std::size_t start, std::size_t end) {
  if (start > end) throw ValidationError("inverted span");
  if (end >= s.size()) throw ValidationError("span out of bounds");
  const std::size_t p = s.dims();
  std::vector<double> ts(s.timestamps().begin() + start, s.timestamps().begin() + end + 1);
  std::vector<double> vals(s.values().begin() + start * p, s.values().begin() + (end + 1) * p);
  return Series(s.schema_ptr(), std::move(ts), std::move(vals), s.stage());
}

}  // namespace motifminer
