#pragma once

#include <cstddef>
#include <vector>

#include "motifminer/distances.hpp"
#include "motifminer/mining.hpp"
#include "motifminer/schema.hpp"

namespace motifminer {

struct ClusteringConfig {
  double distance_threshold = 0.35;
  std::size_t min_class_size = 2;

  void validate() const;
};

/// Symmetric distance table over n items, row-major.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), d_(n * n, 0.0) {}

  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, double v) {
    d_[i * n_ + j] = v;
    d_[j * n_ + i] = v;
  }

 private:
  std::size_t n_ = 0;
  std::vector<double> d_;
};

/// Pairwise LCSS distances between the preprocessed spans of the motifs.
DistanceMatrix motif_distances(const std::vector<TentativeMotif>& motifs, const Series& pre,
                               const LcssParams& lcss, std::size_t threads = 1);

/// One merge of the agglomerative pass. Classes are named by their smallest item.
struct LinkageStep {
  std::size_t left = 0;
  std::size_t right = 0;
  double distance = 0.0;
  std::size_t size = 0;  // items in the merged class
};

struct Linkage {
  std::vector<std::vector<std::size_t>> classes;  // sorted items, ordered by first item
  std::vector<LinkageStep> trace;
};

/// Complete-linkage agglomeration from singletons: repeatedly merge the pair of
/// classes with the smallest maximum cross distance while it is <= threshold.
/// Equal linkages resolve to the pair with the smallest class names.
Linkage complete_linkage(const DistanceMatrix& d, double threshold);

struct MotifClass {
  std::vector<std::size_t> member_ids;  // indices into the clustered motif list
  std::vector<TentativeMotif> members;
  std::size_t reference_member = 0;     // index into `members`
  Series representative;
};

/// Member whose time duration is closest to the mean member duration
/// (earliest member on ties).
std::size_t reference_member(const std::vector<Span>& members);

/// Mean representative sequence: every reference vector is combined with the
/// vectors LCSS-matched to it in the other members (mean for quantitative
/// columns, most frequent value for qualitative ones, earliest first on ties).
/// The result has the reference's length and timestamps.
Series representative(const Series& pre, const std::vector<Span>& members,
                      const LcssParams& lcss, std::size_t* reference = nullptr);

struct ClusteringResult {
  std::vector<MotifClass> classes;
  Linkage linkage;
  DistanceMatrix distances;
};

ClusteringResult cluster(const std::vector<TentativeMotif>& motifs, const Series& pre,
                         const LcssParams& lcss, const ClusteringConfig& cfg,
                         std::size_t threads = 1);

}  // namespace motifminer
