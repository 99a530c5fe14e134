#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "motifminer/clustering.hpp"
#include "motifminer/evaluation.hpp"
#include "motifminer/mining.hpp"
#include "motifminer/representation.hpp"
#include "motifminer/schema.hpp"

namespace motifminer {

/// Extraction output: tentative motifs, their classes and the audit trail.
struct MotifSet {
  SchemaPtr schema;                  // carries the fitted breakpoints
  std::size_t series_length = 0;     // preprocessed rows
  std::size_t reduction_factor = 1;
  std::vector<GrownPair> pairs;
  std::vector<TentativeMotif> tentative;
  std::vector<MotifClass> classes;   // members, reference and representative
  std::vector<LinkageStep> trace;

  std::vector<Span> tentative_spans() const;
  std::vector<std::vector<Span>> class_spans() const;
};

std::string schema_to_json(const Schema& schema);
Schema schema_from_json(const std::string& text);
Schema read_schema(const std::filesystem::path& path);

std::string symbolic_to_json(const SymbolicSeries& sym);
SymbolicSeries symbolic_from_json(const std::string& text);

std::string motif_set_to_json(const MotifSet& set);
MotifSet motif_set_from_json(const std::string& text);

std::string ground_truth_to_json(const GroundTruth& gt);
GroundTruth ground_truth_from_json(const std::string& text);

std::string eval_report_to_json(const EvalReport& report);
/// One flat CSV line (no newline) and its header, for aggregating runs.
std::string eval_report_csv_header();
std::string eval_report_csv_row(const EvalReport& report);

/// Sparse "i,j,count" triplets of the non-zero cells, largest counts first.
std::string collisions_to_csv(const CollisionMatrix& m);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace motifminer
