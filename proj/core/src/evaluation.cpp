#include "motifminer/evaluation.hpp"

#include <algorithm>
#include <cmath>

namespace motifminer {

void GroundTruth::validate() const {
  std::vector<Span> all;
  for (const auto& m : motifs)
    for (const auto& inst : m.instances) {
      if (inst.span.start_index > inst.span.end_index)
        throw ValidationError("ground-truth instance has an inverted span");
      if (series_length > 0 && inst.span.end_index >= series_length)
        throw ValidationError("ground-truth instance leaves the series");
      all.push_back(inst.span);
    }
  std::sort(all.begin(), all.end(),
            [](const Span& a, const Span& b) { return a.start_index < b.start_index; });
  for (std::size_t k = 1; k < all.size(); ++k)
    if (all[k].overlaps(all[k - 1])) throw ValidationError("ground-truth instances overlap");
}

Rates extraction_sensitivity_specificity(const GroundTruth& gt, const std::vector<Span>& found,
                                         std::size_t n) {
  if (n == 0) throw ValidationError("extraction rates of an empty series");
  std::vector<unsigned char> truth(n, 0), hit(n, 0);
  const auto mark = [n](std::vector<unsigned char>& v, const Span& s) {
    if (s.end_index >= n) throw ValidationError("span outside the evaluated series");
    std::fill(v.begin() + static_cast<std::ptrdiff_t>(s.start_index),
              v.begin() + static_cast<std::ptrdiff_t>(s.end_index + 1), 1);
  };
  for (const auto& m : gt.motifs)
    for (const auto& inst : m.instances) mark(truth, inst.span);
  for (const auto& s : found) mark(hit, s);
  Rates r;
  for (std::size_t i = 0; i < n; ++i) {
    if (truth[i] && hit[i]) ++r.tp;
    else if (truth[i]) ++r.fn;
    else if (hit[i]) ++r.fp;
    else ++r.tn;
  }
  r.sensitivity = r.tp + r.fn ? static_cast<double>(r.tp) / static_cast<double>(r.tp + r.fn) : 1.0;
  r.specificity = r.tn + r.fp ? static_cast<double>(r.tn) / static_cast<double>(r.tn + r.fp) : 1.0;
  return r;
}

bool associated(const Span& element, const Span& instance) {
  if (!element.overlaps(instance)) return false;
  const std::size_t lo = std::max(element.start_index, instance.start_index);
  const std::size_t hi = std::min(element.end_index, instance.end_index);
  return 2 * (hi - lo + 1) > instance.length();
}

Confusion build_confusion(const GroundTruth& gt, const std::vector<std::vector<Span>>& classes) {
  Confusion conf;
  conf.motifs = gt.motifs.size();
  conf.classes = classes.size();
  conf.c.assign(conf.motifs * conf.classes, 0.0);
  conf.c_split.assign(conf.motifs * conf.classes, 0.0);
  conf.missed.assign(conf.motifs, 0);
  conf.spurious.assign(conf.classes, 0);
  for (const auto& cls : classes) conf.class_sizes.push_back(cls.size());

  for (std::size_t i = 0; i < conf.motifs; ++i) {
    const auto& instances = gt.motifs[i].instances;
    conf.instance_counts.push_back(instances.size());
    conf.eta.emplace_back(instances.size(), 0);
    for (std::size_t k = 0; k < instances.size(); ++k)
      for (const auto& cls : classes)
        for (const auto& e : cls)
          if (associated(e, instances[k].span)) ++conf.eta[i][k];
    for (std::size_t k = 0; k < instances.size(); ++k) {
      const std::size_t eta = conf.eta[i][k];
      if (eta == 0) {
        ++conf.missed[i];
        continue;
      }
      for (std::size_t j = 0; j < conf.classes; ++j)
        for (const auto& e : classes[j])
          if (associated(e, instances[k].span)) {
            conf.c[i * conf.classes + j] += 1.0;
            conf.c_split[i * conf.classes + j] += 1.0 / static_cast<double>(eta);
          }
    }
  }
  for (std::size_t j = 0; j < conf.classes; ++j)
    for (const auto& e : classes[j]) {
      bool any = false;
      for (const auto& m : gt.motifs)
        for (const auto& inst : m.instances) any = any || associated(e, inst.span);
      if (!any) ++conf.spurious[j];
    }
  return conf;
}

namespace {

// 1 + (1/log(states)) * sum q log q over the normalized row or column.
double order_term(const std::vector<double>& cells, std::size_t states) {
  double total = 0.0;
  for (double v : cells) total += v;
  if (states <= 1 || total <= 0.0) return 1.0;
  double h = 0.0;
  for (double v : cells)
    if (v > 0.0) h += (v / total) * std::log(v / total);
  return 1.0 + h / std::log(static_cast<double>(states));
}

}  // namespace

EntropyMetrics entropy_metrics(const Confusion& conf) {
  EntropyMetrics out;
  const std::size_t m = conf.motifs, n = conf.classes;
  std::size_t counted = 0;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<double> row(n);
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) sum += row[j] = conf.split_at(i, j);
    const double denom = sum + static_cast<double>(conf.missed[i]);
    const double rho = denom > 0.0 ? sum / denom : 0.0;
    out.rho_e.push_back(rho);
    out.se.push_back(rho * order_term(row, n));
    if (conf.instance_counts[i] > 0) {
      out.mean_se += out.se.back();
      ++counted;
    }
  }
  if (counted) out.mean_se /= static_cast<double>(counted);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<double> col(m);
    double sum = 0.0;
    for (std::size_t i = 0; i < m; ++i) sum += col[i] = conf.split_at(i, j);
    const double denom = sum + static_cast<double>(conf.spurious[j]);
    const double rho = denom > 0.0 ? sum / denom : 0.0;
    out.rho_p.push_back(rho);
    out.sp.push_back(rho * order_term(col, m));
    out.mean_sp += out.sp.back();
  }
  if (n) out.mean_sp /= static_cast<double>(n);
  return out;
}

Segmentation segmentation_index(const Confusion& conf) {
  Segmentation s;
  const std::size_t cells = conf.motifs * conf.classes;
  if (cells == 0) return s;
  double sum = 0.0;
  for (std::size_t k = 0; k < cells; ++k) {
    if (conf.c[k] > 0.0) {
      sum += conf.c_split[k] / conf.c[k];
    } else {
      sum += 1.0;
      ++s.skipped_cells;
    }
  }
  s.lambda = sum / static_cast<double>(cells);
  return s;
}

bool EvalReport::perfect() const {
  return classification.mean_se == 1.0 && classification.mean_sp == 1.0 &&
         segmentation.lambda == 1.0;
}

EvalReport evaluate(const GroundTruth& gt, const std::vector<Span>& tentative,
                    const std::vector<std::vector<Span>>& classes, std::size_t n) {
  EvalReport r;
  r.identification = extraction_sensitivity_specificity(gt, tentative, n);
  r.confusion = build_confusion(gt, classes);
  r.classification = entropy_metrics(r.confusion);
  r.segmentation = segmentation_index(r.confusion);
  return r;
}

NormalRecognition recognize_as_normal(const GroundTruthMotif& motif,
                                      const std::vector<std::vector<Span>>& classes) {
  const auto in_class = [&](const std::vector<Span>& cls, const Span& instance) {
    return std::any_of(cls.begin(), cls.end(),
                       [&](const Span& e) { return associated(e, instance); });
  };
  NormalRecognition out;
  std::size_t best = 0;
  for (std::size_t j = 0; j < classes.size(); ++j) {
    std::size_t hits = 0;
    for (const auto& inst : motif.instances)
      if (inst.heart_rate_inflation == 0.0 && in_class(classes[j], inst.span)) ++hits;
    if (hits > best) {
      best = hits;
      out.normal_class = j;
    }
  }
  out.recognized.assign(motif.instances.size(), false);
  if (!out.normal_class) return out;
  for (std::size_t k = 0; k < motif.instances.size(); ++k)
    out.recognized[k] = in_class(classes[*out.normal_class], motif.instances[k].span);
  return out;
}

Separation threshold_separation(const std::vector<double>& same, const std::vector<double>& other) {
  Separation s;
  if (same.empty() || other.empty()) {
    s.separable = true;
    return s;
  }
  const double hi = *std::max_element(same.begin(), same.end());
  const double lo = *std::min_element(other.begin(), other.end());
  s.gap = lo - hi;
  s.separable = hi < lo;
  s.threshold = s.separable ? 0.5 * (hi + lo) : hi;
  return s;
}

}  // namespace motifminer
