#include "motifminer/distances.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>

namespace motifminer {

namespace {

// Column-wise match predicate compiled once per LCSS call.
class PointMatcher {
 public:
  PointMatcher(const Schema& schema, const LcssParams& params) {
    if (params.epsilon.size() != schema.size())
      throw ValidationError("LCSS epsilon count differs from schema dimension");
    qualitative_.reserve(schema.size());
    for (std::size_t k = 0; k < schema.size(); ++k) {
      qualitative_.push_back(schema[k].is_qualitative());
      scale_.push_back(schema[k].kind == ParameterKind::OrderedQualitative
                           ? 1.0 / (schema[k].cardinality - 1)
                           : 1.0);
      unordered_.push_back(schema[k].kind == ParameterKind::UnorderedQualitative);
      epsilon_.push_back(params.epsilon[k]);
    }
  }

  bool operator()(std::span<const double> a, std::span<const double> b) const {
    for (std::size_t k = 0; k < epsilon_.size(); ++k) {
      double d = std::abs(a[k] - b[k]);
      if (qualitative_[k]) d = unordered_[k] ? std::min(d, 1.0) : d * scale_[k];
      if (!(d < epsilon_[k])) return false;
    }
    return true;
  }

 private:
  std::vector<bool> qualitative_;
  std::vector<bool> unordered_;
  std::vector<double> scale_;
  std::vector<double> epsilon_;
};

bool within_delta(std::size_t n, std::size_t m, std::size_t big_n, std::size_t big_m,
                  const LcssParams& params) {
  const auto shift = [](std::ptrdiff_t x) { return static_cast<std::size_t>(x < 0 ? -x : x); };
  if (shift(static_cast<std::ptrdiff_t>(n) - static_cast<std::ptrdiff_t>(m)) > params.delta)
    return false;
  if (!params.end_anchored) return true;
  const std::ptrdiff_t tail = static_cast<std::ptrdiff_t>(big_n - n) -
                              static_cast<std::ptrdiff_t>(big_m - m);
  return shift(tail) <= params.delta;
}

void check_same_dims(const RowsView& a, const RowsView& b, const Schema& schema) {
  if (a.dims != schema.size() || b.dims != schema.size())
    throw ValidationError("schema mismatch between compared sequences");
}

void check_same_schema(const Series& a, const Series& b) {
  if (a.schema_ptr() == b.schema_ptr()) return;
  const Schema& sa = a.schema();
  const Schema& sb = b.schema();
  bool same = sa.size() == sb.size();
  for (std::size_t k = 0; same && k < sa.size(); ++k)
    same = sa[k].name == sb[k].name && sa[k].kind == sb[k].kind;
  if (!same) throw ValidationError("schema mismatch between compared sequences");
}

}  // namespace

LcssParams LcssParams::for_schema(const Schema& schema, double quantitative_epsilon,
                                  std::size_t delta, bool end_anchored) {
  LcssParams p;
  p.delta = delta;
  p.end_anchored = end_anchored;
  for (const auto& param : schema) {
    switch (param.kind) {
      case ParameterKind::Quantitative: p.epsilon.push_back(quantitative_epsilon); break;
      case ParameterKind::OrderedQualitative:
        p.epsilon.push_back(1.0 / (param.cardinality - 1));
        break;
      case ParameterKind::UnorderedQualitative: p.epsilon.push_back(1.0); break;
    }
  }
  return p;
}

void LcssParams::validate(const Schema& schema) const {
  if (epsilon.size() != schema.size())
    throw ValidationError("LCSS epsilon count differs from schema dimension");
  for (std::size_t k = 0; k < schema.size(); ++k) {
    if (schema[k].is_quantitative() && !(epsilon[k] > 0.0 && epsilon[k] < 1.0))
      throw ValidationError("quantitative epsilon must lie in (0,1) for '" + schema[k].name + "'");
    if (schema[k].is_qualitative() && !(epsilon[k] > 0.0))
      throw ValidationError("qualitative epsilon must be positive for '" + schema[k].name + "'");
  }
}

double normalize(double x, const ParameterSchema& schema) {
  if (!schema.is_quantitative())
    throw ValidationError("normalize requires a quantitative parameter ('" + schema.name + "')");
  const double range = schema.max_bound - schema.min_bound;
  return std::min(1.0, std::max(0.0, std::min(x, schema.max_bound) - schema.min_bound) / range);
}

double point_distance(double a, double b, const ParameterSchema& schema) {
  const double diff = std::abs(a - b);
  switch (schema.kind) {
    case ParameterKind::Quantitative: return diff;
    case ParameterKind::OrderedQualitative: return diff / (schema.cardinality - 1);
    case ParameterKind::UnorderedQualitative: return std::min(diff, 1.0);
  }
  return diff;
}

std::size_t lcss_count(const RowsView& a, const RowsView& b, const Schema& schema,
                       const LcssParams& params) {
  check_same_dims(a, b, schema);
  const std::size_t n = a.rows;
  const std::size_t m = b.rows;
  if (n == 0 || m == 0) return 0;
  const PointMatcher match(schema, params);
  // prev[j] = LCSS(a[0..i-1), b[0..j)), cur[j] = LCSS(a[0..i], b[0..j))
  std::vector<std::size_t> prev(m + 1, 0), cur(m + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    cur[0] = 0;
    const auto ra = a.row(i - 1);
    for (std::size_t j = 1; j <= m; ++j) {
      if (within_delta(i, j, n, m, params) && match(ra, b.row(j - 1)))
        cur[j] = prev[j - 1] + 1;
      else
        cur[j] = std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[m];
}

std::size_t lcss_count(const Series& a, const Series& b, const LcssParams& params) {
  check_same_schema(a, b);
  return lcss_count(a.view(), b.view(), a.schema(), params);
}

double lcss_distance(const RowsView& a, const RowsView& b, const Schema& schema,
                     const LcssParams& params) {
  if (a.rows == 0 || b.rows == 0) throw ValidationError("LCSS distance of an empty sequence");
  const double count = static_cast<double>(lcss_count(a, b, schema, params));
  return 1.0 - count / static_cast<double>(std::min(a.rows, b.rows));
}

double lcss_distance(const Series& a, const Series& b, const LcssParams& params) {
  check_same_schema(a, b);
  return lcss_distance(a.view(), b.view(), a.schema(), params);
}

LcssAlignment lcss_align(const RowsView& a, const RowsView& b, const Schema& schema,
                         const LcssParams& params) {
  check_same_dims(a, b, schema);
  const std::size_t n = a.rows;
  const std::size_t m = b.rows;
  LcssAlignment out;
  if (n == 0 || m == 0) return out;
  const PointMatcher match(schema, params);
  const std::size_t stride = m + 1;
  std::vector<std::size_t> table((n + 1) * stride, 0);
  std::vector<unsigned char> matched((n + 1) * stride, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    const auto ra = a.row(i - 1);
    for (std::size_t j = 1; j <= m; ++j) {
      if (within_delta(i, j, n, m, params) && match(ra, b.row(j - 1))) {
        matched[i * stride + j] = 1;
        table[i * stride + j] = table[(i - 1) * stride + j - 1] + 1;
      } else {
        table[i * stride + j] = std::max(table[(i - 1) * stride + j], table[i * stride + j - 1]);
      }
    }
  }
  out.count = table[n * stride + m];
  std::size_t i = n, j = m;
  while (i > 0 && j > 0) {
    if (matched[i * stride + j]) {
      out.pairs.emplace_back(i - 1, j - 1);
      --i;
      --j;
    } else if (table[(i - 1) * stride + j] >= table[i * stride + j - 1]) {
      --i;
    } else {
      --j;
    }
  }
  std::reverse(out.pairs.begin(), out.pairs.end());
  return out;
}

double dtw_distance(const RowsView& a, const RowsView& b, const Schema& schema) {
  check_same_dims(a, b, schema);
  const std::size_t n = a.rows;
  const std::size_t m = b.rows;
  if (n == 0 || m == 0) throw ValidationError("DTW distance of an empty sequence");
  const auto step_cost = [&](std::size_t i, std::size_t j) {
    double s = 0.0;
    for (std::size_t k = 0; k < schema.size(); ++k)
      s += point_distance(a.at(i, k), b.at(j, k), schema[k]);
    return s * s;
  };
  constexpr double inf = std::numeric_limits<double>::infinity();
  std::vector<double> prev(m + 1, inf), cur(m + 1, inf);
  prev[0] = 0.0;
  for (std::size_t i = 1; i <= n; ++i) {
    cur[0] = inf;
    for (std::size_t j = 1; j <= m; ++j)
      cur[j] = step_cost(i - 1, j - 1) + std::min({prev[j - 1], prev[j], cur[j - 1]});
    std::swap(prev, cur);
  }
  return std::sqrt(prev[m]);
}

double dtw_distance(const Series& a, const Series& b) {
  check_same_schema(a, b);
  return dtw_distance(a.view(), b.view(), a.schema());
}

SymbolDistanceTable::SymbolDistanceTable(std::vector<std::vector<double>> tables,
                                         std::vector<int> alphabet_sizes)
    : tables_(std::move(tables)), sizes_(std::move(alphabet_sizes)) {
  if (tables_.size() != sizes_.size())
    throw ValidationError("symbol table count differs from alphabet count");
  for (std::size_t k = 0; k < sizes_.size(); ++k)
    if (tables_[k].size() != static_cast<std::size_t>(sizes_[k] * sizes_[k]))
      throw ValidationError("symbol table is not square");
}

double SymbolDistanceTable::min_positive(std::size_t param) const {
  double best = 0.0;
  for (double d : tables_[param])
    if (d > 0.0 && (best == 0.0 || d < best)) best = d;
  return best;
}

SymbolDistanceTable build_symbol_tables(const Schema& schema) {
  std::vector<std::vector<double>> tables;
  std::vector<int> sizes;
  for (const auto& param : schema) {
    if (param.is_quantitative() && param.breakpoints.empty())
      throw ValidationError("parameter '" + param.name + "' has no breakpoints");
    const int a = param.alphabet_size();
    std::vector<double> t(static_cast<std::size_t>(a * a), 0.0);
    for (int i = 1; i <= a; ++i) {
      for (int j = 1; j <= a; ++j) {
        double d = 0.0;
        if (param.is_quantitative()) {
          const int lo = std::min(i, j);
          const int hi = std::max(i, j);
          // breakpoints are 1-based in the formula: beta_{hi-1} - beta_{lo}
          if (hi - lo > 1) d = param.breakpoints[hi - 2] - param.breakpoints[lo - 1];
        } else {
          d = point_distance(i, j, param);
        }
        t[static_cast<std::size_t>((i - 1) * a + (j - 1))] = d;
      }
    }
    tables.push_back(std::move(t));
    sizes.push_back(a);
  }
  return SymbolDistanceTable(std::move(tables), std::move(sizes));
}

double mindist(std::span<const Code> q, std::span<const Code> c, std::size_t n,
               const SymbolDistanceTable& tables) {
  const std::size_t p = tables.dims();
  if (q.size() != c.size()) throw ValidationError("mindist of words with different lengths");
  if (p == 0 || q.size() % p != 0) throw ValidationError("word length is not a multiple of p");
  const std::size_t omega = q.size() / p;
  if (omega == 0) throw ValidationError("mindist of empty words");
  double sum = 0.0;
  for (std::size_t i = 0; i < omega; ++i) {
    for (std::size_t k = 0; k < p; ++k) {
      const double d = tables(k, q[i * p + k], c[i * p + k]);
      sum += d * d;
    }
  }
  return std::sqrt(static_cast<double>(n) / static_cast<double>(omega)) * std::sqrt(sum);
}

}  // namespace motifminer
