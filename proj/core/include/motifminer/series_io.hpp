#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "motifminer/schema.hpp"

namespace motifminer {

/// Raised on unreadable or malformed files.
class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error("io", what) {}
};

// Series CSV: header `timestamp,<name1>,...,<namep>`, one row per sample,
// qualitative values written as integers. Columns are matched to the schema
// by name, so their order in the file may differ from the schema's.
Series read_series_csv(std::istream& in, SchemaPtr schema, Stage stage = Stage::Raw);
Series read_series_csv(const std::filesystem::path& path, SchemaPtr schema,
                       Stage stage = Stage::Raw);
void write_series_csv(std::ostream& out, const Series& s);
void write_series_csv(const std::filesystem::path& path, const Series& s);

/// Shortest decimal text that round-trips to the same double.
std::string format_double(double v);

}  // namespace motifminer
