#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "motifminer/schema.hpp"

namespace motifminer {

/// Parameters of the heterogeneous LCSS similarity.
///
/// `delta` bounds the index shift between matched points, in samples. It is
/// applied from both ends of the compared sequences: |n - m| <= delta for
/// prefixes of length n and m, and |(N - n) - (M - m)| <= delta against the
/// full lengths N and M. The second constraint can be switched off with
/// `end_anchored = false`.
///
/// Two points match when every component satisfies d(a_k, b_k) < epsilon_k.
struct LcssParams {
  std::size_t delta = 30;
  std::vector<double> epsilon;
  bool end_anchored = true;

  /// Per-type defaults: `quantitative_epsilon` for quantitative columns,
  /// 1/(v-1) for ordered qualitative and 1 for unordered qualitative columns.
  static LcssParams for_schema(const Schema& schema, double quantitative_epsilon,
                               std::size_t delta, bool end_anchored = true);
  void validate(const Schema& schema) const;
};

/// Min-max normalization with clamping to the schema bounds.
double normalize(double x, const ParameterSchema& schema);

/// Per-type point distance in [0,1]. Quantitative inputs must be normalized.
double point_distance(double a, double b, const ParameterSchema& schema);

std::size_t lcss_count(const Series& a, const Series& b, const LcssParams& params);
std::size_t lcss_count(const RowsView& a, const RowsView& b, const Schema& schema,
                       const LcssParams& params);

/// 1 - LCSS / min(n, m). Throws on empty input.
double lcss_distance(const Series& a, const Series& b, const LcssParams& params);
double lcss_distance(const RowsView& a, const RowsView& b, const Schema& schema,
                     const LcssParams& params);

/// One optimal LCSS matching, recovered by traceback (matched tails taken first,
/// then the `a`-prefix drop on ties). Pairs are (index in a, index in b), increasing.
struct LcssAlignment {
  std::size_t count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
};
LcssAlignment lcss_align(const RowsView& a, const RowsView& b, const Schema& schema,
                         const LcssParams& params);

/// Classic DTW (diagonal / left / up steps, no window). The local cost of a
/// step is s = sum over parameters of point_distance; the result is
/// sqrt(min over warping paths of sum s^2).
double dtw_distance(const Series& a, const Series& b);
double dtw_distance(const RowsView& a, const RowsView& b, const Schema& schema);

/// Per-parameter symbol distance lookup. Codes are 1-based.
class SymbolDistanceTable {
 public:
  SymbolDistanceTable() = default;
  explicit SymbolDistanceTable(std::vector<std::vector<double>> tables,
                               std::vector<int> alphabet_sizes);

  std::size_t dims() const noexcept { return sizes_.size(); }
  int alphabet_size(std::size_t param) const { return sizes_[param]; }
  double operator()(std::size_t param, Code i, Code j) const {
    const int a = sizes_[param];
    return tables_[param][static_cast<std::size_t>((i - 1) * a + (j - 1))];
  }
  /// Smallest positive entry of a parameter's table, 0 when none exists.
  double min_positive(std::size_t param) const;

 private:
  std::vector<std::vector<double>> tables_;
  std::vector<int> sizes_;
};

/// Quantitative tables come from the breakpoints (0 for neighbouring symbols,
/// beta_{max(i,j)-1} - beta_{min(i,j)} otherwise); qualitative tables use the
/// point distances. Throws if a quantitative parameter has no breakpoints.
SymbolDistanceTable build_symbol_tables(const Schema& schema);

/// Lower-bounding distance between two symbolic words of equal length
/// omega (flattened row-major, omega x p codes) standing for `n` samples:
/// sqrt(n / omega) * sqrt(sum_i sum_j d(q_ij, c_ij)^2).
double mindist(std::span<const Code> q, std::span<const Code> c, std::size_t n,
               const SymbolDistanceTable& tables);

}  // namespace motifminer
