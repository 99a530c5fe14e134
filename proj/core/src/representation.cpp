#include "motifminer/representation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "motifminer/log.hpp"

namespace motifminer {

void RepresentationConfig::validate() const {
  if (filter_len == 0 || filter_len % 2 == 0)
    throw ValidationError("filter_len must be a positive odd integer");
  if (reduction_factor == 0) throw ValidationError("reduction_factor must be at least 1");
  if (k_per_param < 2) throw ValidationError("k_per_param must be at least 2");
  if (!(aggregation_threshold >= 0.0))
    throw ValidationError("aggregation_threshold must be non-negative");
}

std::vector<double> triangular_weights(std::size_t len) {
  const std::size_t half = len / 2;
  std::vector<double> w(len);
  for (std::size_t i = 0; i < len; ++i) {
    const std::size_t offset = i > half ? i - half : half - i;
    w[i] = static_cast<double>(half + 1 - offset);
  }
  return w;
}

namespace {

Code majority(const std::vector<Code>& window) {
  // most frequent; earliest first occurrence wins ties
  Code best = window.front();
  std::size_t best_count = 0;
  for (std::size_t i = 0; i < window.size(); ++i) {
    const Code c = window[i];
    if (std::find(window.begin(), window.begin() + i, c) != window.begin() + i) continue;
    const auto count = static_cast<std::size_t>(std::count(window.begin(), window.end(), c));
    if (count > best_count) {
      best = c;
      best_count = count;
    }
  }
  return best;
}

}  // namespace

Series preprocess(const Series& raw, const RepresentationConfig& cfg) {
  cfg.validate();
  if (raw.stage() != Stage::Raw) throw ValidationError("preprocess expects a raw series");
  const std::size_t n = raw.size();
  const std::size_t p = raw.dims();
  if (cfg.filter_len > n) throw ValidationError("filter_len exceeds series length");
  const Schema& schema = raw.schema();

  const auto weights = triangular_weights(cfg.filter_len);
  double weight_sum = 0.0;
  for (double w : weights) weight_sum += w;
  const std::ptrdiff_t half = static_cast<std::ptrdiff_t>(cfg.filter_len / 2);

  std::vector<double> filtered(raw.values());
  for (std::size_t k = 0; k < p; ++k) {
    if (!schema[k].is_quantitative() || cfg.filter_len == 1) continue;
    for (std::size_t i = 0; i < n; ++i) {
      double acc = 0.0;
      for (std::ptrdiff_t o = -half; o <= half; ++o) {
        const std::ptrdiff_t j = std::clamp<std::ptrdiff_t>(static_cast<std::ptrdiff_t>(i) + o, 0,
                                                            static_cast<std::ptrdiff_t>(n) - 1);
        acc += weights[static_cast<std::size_t>(o + half)] * raw.at(static_cast<std::size_t>(j), k);
      }
      filtered[i * p + k] = acc / weight_sum;
    }
  }

  const std::size_t r = cfg.reduction_factor;
  const std::size_t out_n = (n + r - 1) / r;
  std::vector<double> ts(out_n);
  std::vector<double> values(out_n * p);
  std::vector<Code> window;
  for (std::size_t j = 0; j < out_n; ++j) {
    const std::size_t begin = j * r;
    const std::size_t end = std::min(n, begin + r);
    ts[j] = raw.timestamps()[begin];
    for (std::size_t k = 0; k < p; ++k) {
      if (schema[k].is_quantitative()) {
        values[j * p + k] = normalize(filtered[begin * p + k], schema[k]);
      } else {
        window.clear();
        for (std::size_t i = begin; i < end; ++i) window.push_back(raw.code(i, k));
        values[j * p + k] = majority(window);
      }
    }
  }
  return Series(raw.schema_ptr(), std::move(ts), std::move(values), Stage::Normalized);
}

namespace {

struct KMeansResult {
  std::vector<double> centers;
  double inertia = 0.0;
};

// Lloyd iterations over sorted 1-D data; ties go to the lower center.
KMeansResult lloyd_1d(const std::vector<double>& sorted, std::vector<double> centers) {
  const std::size_t n = sorted.size();
  const std::size_t k = centers.size();
  std::vector<std::size_t> assign(n, 0);
  for (int iter = 0; iter < 200; ++iter) {
    std::sort(centers.begin(), centers.end());
    bool changed = iter == 0;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t best = 0;
      double best_d = std::abs(sorted[i] - centers[0]);
      for (std::size_t c = 1; c < k; ++c) {
        const double d = std::abs(sorted[i] - centers[c]);
        if (d < best_d) {
          best = c;
          best_d = d;
        }
      }
      if (assign[i] != best) {
        assign[i] = best;
        changed = true;
      }
    }
    std::vector<double> sum(k, 0.0);
    std::vector<std::size_t> count(k, 0);
    for (std::size_t i = 0; i < n; ++i) {
      sum[assign[i]] += sorted[i];
      ++count[assign[i]];
    }
    for (std::size_t c = 0; c < k; ++c)
      if (count[c] > 0) centers[c] = sum[c] / static_cast<double>(count[c]);
    if (!changed) break;
  }
  std::sort(centers.begin(), centers.end());
  KMeansResult out;
  for (std::size_t i = 0; i < n; ++i) {
    double best_d = std::numeric_limits<double>::infinity();
    for (double c : centers) best_d = std::min(best_d, std::abs(sorted[i] - c));
    out.inertia += best_d * best_d;
  }
  out.centers = std::move(centers);
  return out;
}

std::vector<double> kmeanspp_seed(const std::vector<double>& sorted, std::size_t k,
                                  std::mt19937_64& rng) {
  std::vector<double> centers;
  std::uniform_int_distribution<std::size_t> pick(0, sorted.size() - 1);
  centers.push_back(sorted[pick(rng)]);
  std::vector<double> d2(sorted.size());
  while (centers.size() < k) {
    double total = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      double best = std::numeric_limits<double>::infinity();
      for (double c : centers) best = std::min(best, (sorted[i] - c) * (sorted[i] - c));
      d2[i] = best;
      total += best;
    }
    if (total <= 0.0) break;
    std::uniform_real_distribution<double> u(0.0, total);
    double target = u(rng);
    std::size_t chosen = sorted.size() - 1;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      target -= d2[i];
      if (target < 0.0 && d2[i] > 0.0) {
        chosen = i;
        break;
      }
    }
    centers.push_back(sorted[chosen]);
  }
  return centers;
}

}  // namespace

std::vector<double> fit_breakpoints(const Series& train, std::size_t param, std::size_t k,
                                    std::uint64_t seed) {
  if (param >= train.dims()) throw ValidationError("parameter index out of range");
  const ParameterSchema& schema = train.schema()[param];
  if (!schema.is_quantitative())
    throw ValidationError("fit_breakpoints requires a quantitative parameter ('" + schema.name + "')");
  if (train.stage() != Stage::Normalized)
    throw ValidationError("fit_breakpoints expects normalized data");
  if (k < 2) throw ValidationError("k must be at least 2");
  std::vector<double> data = train.column(param);
  if (data.size() < k) throw ValidationError("fewer samples than discretization intervals");
  std::sort(data.begin(), data.end());
  std::vector<double> uniq(data);
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  if (uniq.size() < 2)
    throw ValidationError("parameter '" + schema.name + "' is constant; cannot fit breakpoints");
  if (uniq.size() < k) {
    log(LogLevel::Warn, "parameter '", schema.name, "' has only ", uniq.size(),
        " distinct values; reducing k from ", k, " to ", uniq.size());
    k = uniq.size();
  }

  std::mt19937_64 rng(seed ^ (0x9E3779B97F4A7C15ULL * (param + 1)));
  KMeansResult best;
  best.inertia = std::numeric_limits<double>::infinity();
  constexpr int kRestarts = 4;
  for (int r = 0; r < kRestarts; ++r) {
    auto centers = kmeanspp_seed(data, k, rng);
    auto result = lloyd_1d(data, std::move(centers));
    if (result.inertia < best.inertia) best = std::move(result);
  }
  // empty clusters may leave duplicate centers
  best.centers.erase(std::unique(best.centers.begin(), best.centers.end()), best.centers.end());
  std::vector<double> breakpoints;
  for (std::size_t c = 0; c + 1 < best.centers.size(); ++c)
    breakpoints.push_back(0.5 * (best.centers[c] + best.centers[c + 1]));
  return breakpoints;
}

Schema fit_schema(const Series& normalized, const RepresentationConfig& cfg) {
  Schema out = normalized.schema();
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (out[k].is_quantitative() && out[k].breakpoints.empty())
      out[k].breakpoints = fit_breakpoints(normalized, k, cfg.k_per_param, cfg.kmeans_seed);
  }
  return out;
}

Code discretize_value(double x, const std::vector<double>& breakpoints) {
  return static_cast<Code>(std::upper_bound(breakpoints.begin(), breakpoints.end(), x) -
                           breakpoints.begin()) +
         1;
}

DiscreteSeries discretize(const Series& normalized, const SchemaPtr& schema) {
  if (!schema || schema->size() != normalized.dims())
    throw ValidationError("schema dimension differs from series");
  for (const auto& param : *schema)
    if (param.is_quantitative() && param.breakpoints.empty())
      throw ValidationError("parameter '" + param.name + "' has no breakpoints");
  DiscreteSeries d;
  d.schema = schema;
  d.timestamps = normalized.timestamps();
  const std::size_t p = schema->size();
  d.codes.resize(normalized.size() * p);
  for (std::size_t i = 0; i < normalized.size(); ++i) {
    for (std::size_t k = 0; k < p; ++k) {
      const auto& param = (*schema)[k];
      d.codes[i * p + k] = param.is_quantitative()
                               ? discretize_value(normalized.at(i, k), param.breakpoints)
                               : normalized.code(i, k);
    }
  }
  return d;
}

SymbolicSeries::SymbolicSeries(SchemaPtr schema, std::vector<Symbol> symbols)
    : schema_(std::move(schema)), symbols_(std::move(symbols)) {}

std::vector<Code> SymbolicSeries::codes(std::size_t begin, std::size_t end) const {
  std::vector<Code> out;
  out.reserve((end - begin) * dims());
  for (std::size_t i = begin; i < end; ++i)
    out.insert(out.end(), symbols_[i].codes.begin(), symbols_[i].codes.end());
  return out;
}

Span SymbolicSeries::source_span(std::size_t first, std::size_t last) const {
  const Span& a = symbols_.at(first).source;
  const Span& b = symbols_.at(last).source;
  return Span{a.start_index, b.end_index, a.start_time, b.end_time};
}

Span SymbolicSeries::symbol_span(std::size_t first, std::size_t last) const {
  const Symbol& a = symbols_.at(first);
  const Symbol& b = symbols_.at(last);
  return Span{first, last, a.start_time, b.start_time + b.duration};
}

double SymbolicSeries::duration() const {
  double total = 0.0;
  for (const auto& s : symbols_) total += s.duration;
  return total;
}

std::vector<Code> aggregate_vector(const DiscreteSeries& d, const Series& normalized,
                                   std::size_t begin, std::size_t end) {
  const Schema& schema = *d.schema;
  const std::size_t p = schema.size();
  std::vector<Code> out(p);
  std::vector<Code> window;
  for (std::size_t k = 0; k < p; ++k) {
    if (schema[k].is_quantitative()) {
      double sum = 0.0;
      for (std::size_t i = begin; i < end; ++i) sum += normalized.at(i, k);
      out[k] = discretize_value(sum / static_cast<double>(end - begin), schema[k].breakpoints);
    } else {
      window.clear();
      for (std::size_t i = begin; i < end; ++i) window.push_back(d.code(i, k));
      out[k] = majority(window);
    }
  }
  return out;
}

namespace {

// Incremental state of a growing aggregation window: per-column code
// histograms, first occurrences and running means.
class WindowState {
 public:
  WindowState(const DiscreteSeries& d, const Series& normalized, const SymbolDistanceTable& tables)
      : d_(d), normalized_(normalized), tables_(tables) {
    const std::size_t p = d.dims();
    hist_.resize(p);
    first_.resize(p);
    sum_.assign(p, 0.0);
    for (std::size_t k = 0; k < p; ++k) {
      hist_[k].assign(static_cast<std::size_t>(tables.alphabet_size(k)) + 1, 0);
      first_[k].assign(static_cast<std::size_t>(tables.alphabet_size(k)) + 1,
                       std::numeric_limits<std::size_t>::max());
    }
  }

  void push(std::size_t row) {
    for (std::size_t k = 0; k < d_.dims(); ++k) {
      const auto c = static_cast<std::size_t>(d_.code(row, k));
      ++hist_[k][c];
      if (first_[k][c] == std::numeric_limits<std::size_t>::max()) first_[k][c] = row;
      sum_[k] += normalized_.at(row, k);
    }
    ++length_;
  }

  std::vector<Code> aggregate() const {
    const Schema& schema = *d_.schema;
    std::vector<Code> out(schema.size());
    for (std::size_t k = 0; k < schema.size(); ++k) {
      if (schema[k].is_quantitative()) {
        out[k] = discretize_value(sum_[k] / static_cast<double>(length_), schema[k].breakpoints);
      } else {
        std::size_t best = 0;
        for (std::size_t c = 1; c < hist_[k].size(); ++c) {
          if (hist_[k][c] == 0) continue;
          if (best == 0 || hist_[k][c] > hist_[k][best] ||
              (hist_[k][c] == hist_[k][best] && first_[k][c] < first_[k][best]))
            best = c;
        }
        out[k] = static_cast<Code>(best);
      }
    }
    return out;
  }

  double cost(std::size_t k, std::size_t target) const {
    double total = 0.0;
    for (std::size_t c = 1; c < hist_[k].size(); ++c) {
      if (hist_[k][c] == 0) continue;
      const double dist = tables_(k, static_cast<Code>(c), static_cast<Code>(target));
      total += static_cast<double>(hist_[k][c]) * dist * dist;
    }
    return total;
  }

  /// Squared mindist of the window against its repeated aggregate (n = omega).
  double squared_mindist(const std::vector<Code>& aggr) const {
    double total = 0.0;
    for (std::size_t k = 0; k < aggr.size(); ++k)
      total += cost(k, static_cast<std::size_t>(aggr[k]));
    return total;
  }

  /// Lower bound of the squared mindist of this window and any extension of
  /// it: counts only grow, so each per-target cost is non-decreasing.
  double squared_lower_bound() const {
    double total = 0.0;
    for (std::size_t k = 0; k < hist_.size(); ++k) {
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t c = 1; c < hist_[k].size(); ++c) best = std::min(best, cost(k, c));
      total += best;
    }
    return total;
  }

 private:
  const DiscreteSeries& d_;
  const Series& normalized_;
  const SymbolDistanceTable& tables_;
  std::size_t length_ = 0;
  std::vector<std::vector<std::size_t>> hist_;
  std::vector<std::vector<std::size_t>> first_;
  std::vector<double> sum_;
};

}  // namespace

SymbolicSeries aggregate(const DiscreteSeries& d, const Series& normalized,
                         const SymbolDistanceTable& tables, double threshold) {
  if (normalized.size() != d.size() || normalized.dims() != d.dims())
    throw ValidationError("discrete and normalized series are not aligned");
  if (tables.dims() != d.dims()) throw ValidationError("symbol table dimension differs");
  const double limit = threshold * threshold;
  std::vector<Symbol> symbols;
  std::size_t start = 0;
  const std::size_t n = d.size();
  while (start < n) {
    WindowState state(d, normalized, tables);
    std::size_t best_len = 1;
    std::vector<Code> best_aggr;
    for (std::size_t end = start; end < n; ++end) {
      state.push(end);
      if (end > start && state.squared_lower_bound() > limit) break;
      auto aggr = state.aggregate();
      if (std::sqrt(state.squared_mindist(aggr)) <= threshold) {
        best_len = end - start + 1;
        best_aggr = std::move(aggr);
      }
    }
    if (best_aggr.empty()) best_aggr = aggregate_vector(d, normalized, start, start + 1);
    Symbol sym;
    sym.codes = std::move(best_aggr);
    sym.source = normalized.span(start, start + best_len - 1);
    sym.start_time = sym.source.start_time;
    sym.duration = sym.source.duration();
    symbols.push_back(std::move(sym));
    start += best_len;
  }
  return SymbolicSeries(d.schema, std::move(symbols));
}

Representation represent_preprocessed(const Series& preprocessed,
                                      const RepresentationConfig& cfg) {
  Representation rep;
  rep.preprocessed = preprocessed;
  rep.discrete = discretize(preprocessed, preprocessed.schema_ptr());
  rep.tables = build_symbol_tables(preprocessed.schema());
  rep.symbolic = aggregate(rep.discrete, rep.preprocessed, rep.tables, cfg.aggregation_threshold);
  return rep;
}

Representation represent(const Series& raw, const RepresentationConfig& cfg,
                         const std::optional<Schema>& fixed_schema) {
  Series pre = preprocess(raw, cfg);
  Schema fitted = fixed_schema ? *fixed_schema : pre.schema();
  {
    Series tmp = pre.with_schema(make_schema(fitted));
    fitted = fit_schema(tmp, cfg);
  }
  pre = pre.with_schema(make_schema(std::move(fitted)));
  return represent_preprocessed(pre, cfg);
}

}  // namespace motifminer
