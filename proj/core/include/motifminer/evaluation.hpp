#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "motifminer/schema.hpp"

namespace motifminer {

struct GroundTruthInstance {
  Span span;
  double heart_rate_inflation = 0.0;  // 0 for a normal instance, 0.2 for +20%
  double stretch = 1.0;
};

struct GroundTruthMotif {
  int motif_id = 0;
  std::vector<GroundTruthInstance> instances;
};

struct GroundTruth {
  std::size_t series_length = 0;
  std::vector<GroundTruthMotif> motifs;

  /// Throws when instances overlap or leave the series.
  void validate() const;
};

/// Per-sample rates of extraction: TP = in both an instance and a found span.
struct Rates {
  double sensitivity = 0.0;
  double specificity = 0.0;
  std::size_t tp = 0, fp = 0, tn = 0, fn = 0;
};

Rates extraction_sensitivity_specificity(const GroundTruth& gt, const std::vector<Span>& found,
                                         std::size_t n);

/// True when `element` covers more than half of `instance`.
bool associated(const Span& element, const Span& instance);

/// Confusion matrices between ground-truth motifs (rows) and classes (columns).
struct Confusion {
  std::size_t motifs = 0;
  std::size_t classes = 0;
  std::vector<double> c;        // whole associations, motifs x classes
  std::vector<double> c_split;  // associations weighted by 1 / eta
  std::vector<std::vector<std::size_t>> eta;  // per motif, per instance
  std::vector<std::size_t> missed;    // m'_i: instances matched by no element
  std::vector<std::size_t> spurious;  // n'_j: elements matching no instance
  std::vector<std::size_t> instance_counts;
  std::vector<std::size_t> class_sizes;

  double at(std::size_t i, std::size_t j) const { return c[i * classes + j]; }
  double split_at(std::size_t i, std::size_t j) const { return c_split[i * classes + j]; }
};

/// `classes[j]` lists the spans of the elements of class j.
Confusion build_confusion(const GroundTruth& gt, const std::vector<std::vector<Span>>& classes);

struct EntropyMetrics {
  std::vector<double> se;  // per motif
  std::vector<double> sp;  // per class
  std::vector<double> rho_e;
  std::vector<double> rho_p;
  double mean_se = 0.0;
  double mean_sp = 0.0;
};

/// Entropy-weighted sensitivity per motif and specificity per class over the
/// split-weighted matrix. With a single class (or motif) the entropy term is 0.
/// Mean Se covers motifs with at least one instance; mean Sp covers the
/// emitted classes and is 0 when there are none.
EntropyMetrics entropy_metrics(const Confusion& conf);

struct Segmentation {
  double lambda = 1.0;
  std::size_t skipped_cells = 0;  // cells with c = 0, counted as 1
};

Segmentation segmentation_index(const Confusion& conf);

struct EvalReport {
  Rates identification;
  EntropyMetrics classification;
  Segmentation segmentation;
  Confusion confusion;
  bool perfect() const;
};

EvalReport evaluate(const GroundTruth& gt, const std::vector<Span>& tentative,
                    const std::vector<std::vector<Span>>& classes, std::size_t n);

/// The "normal" class of a motif is the class associated with the most of
/// its non-inflated instances (lowest index on ties). `recognized[k]` tells
/// whether instance k is associated with an element of that class.
struct NormalRecognition {
  std::optional<std::size_t> normal_class;
  std::vector<bool> recognized;
};

NormalRecognition recognize_as_normal(const GroundTruthMotif& motif,
                                      const std::vector<std::vector<Span>>& classes);

/// Does a single threshold t classify every `same` distance as <= t and every
/// `other` distance as > t? `gap` is min(other) - max(same).
struct Separation {
  bool separable = false;
  double gap = 0.0;
  double threshold = 0.0;
};

Separation threshold_separation(const std::vector<double>& same, const std::vector<double>& other);

}  // namespace motifminer
