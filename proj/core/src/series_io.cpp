#include "motifminer/series_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>
#include <vector>

namespace motifminer {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) {
    while (!field.empty() && (field.back() == '\r' || field.back() == ' ')) field.pop_back();
    while (!field.empty() && field.front() == ' ') field.erase(field.begin());
    fields.push_back(field);
  }
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

double parse_double(const std::string& text, std::size_t row, std::size_t column) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || text.empty())
    throw IoError("malformed number '" + text + "' at row " + std::to_string(row) +
                  ", column " + std::to_string(column));
  return v;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) return std::to_string(v);
  return std::string(buf, ptr);
}

Series read_series_csv(std::istream& in, SchemaPtr schema, Stage stage) {
  std::string line;
  if (!std::getline(in, line)) throw IoError("empty series CSV");
  const auto header = split_csv_line(line);
  if (header.empty() || header[0] != "timestamp")
    throw IoError("series CSV header must start with 'timestamp'");
  const std::size_t p = schema->size();
  if (header.size() != p + 1)
    throw IoError("series CSV has " + std::to_string(header.size() - 1) +
                  " value columns, schema has " + std::to_string(p));
  // file column -> schema column
  std::vector<std::size_t> target(p);
  for (std::size_t c = 0; c < p; ++c) {
    bool found = false;
    for (std::size_t k = 0; k < p; ++k) {
      if ((*schema)[k].name == header[c + 1]) {
        target[c] = k;
        found = true;
        break;
      }
    }
    if (!found) throw IoError("series CSV column '" + header[c + 1] + "' not in schema");
  }
  std::vector<double> ts;
  std::vector<double> values;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != p + 1)
      throw IoError("series CSV row " + std::to_string(row) + " has " +
                    std::to_string(fields.size()) + " fields");
    ts.push_back(parse_double(fields[0], row, 0));
    const std::size_t base = values.size();
    values.resize(base + p);
    for (std::size_t c = 0; c < p; ++c)
      values[base + target[c]] = parse_double(fields[c + 1], row, c + 1);
    ++row;
  }
  Series s(std::move(schema), std::move(ts), std::move(values), stage);
  validate_series(s);
  return s;
}

Series read_series_csv(const std::filesystem::path& path, SchemaPtr schema, Stage stage) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return read_series_csv(in, std::move(schema), stage);
}

void write_series_csv(std::ostream& out, const Series& s) {
  out << "timestamp";
  for (const auto& param : s.schema()) out << ',' << param.name;
  out << '\n';
  for (std::size_t i = 0; i < s.size(); ++i) {
    out << format_double(s.timestamps()[i]);
    for (std::size_t k = 0; k < s.dims(); ++k) {
      out << ',';
      if (s.schema()[k].is_qualitative())
        out << s.code(i, k);
      else
        out << format_double(s.at(i, k));
    }
    out << '\n';
  }
}

void write_series_csv(const std::filesystem::path& path, const Series& s) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  write_series_csv(out, s);
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace motifminer
