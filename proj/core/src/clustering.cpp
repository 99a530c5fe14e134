#include "motifminer/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

namespace motifminer {

void ClusteringConfig::validate() const {
  if (!(distance_threshold > 0.0 && distance_threshold < 1.0))
    throw ValidationError("clustering distance threshold must lie in (0,1)");
  if (min_class_size == 0) throw ValidationError("min_class_size must be at least 1");
}

DistanceMatrix motif_distances(const std::vector<TentativeMotif>& motifs, const Series& pre,
                               const LcssParams& lcss, std::size_t threads) {
  const std::size_t n = motifs.size();
  DistanceMatrix d(n);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<double> out(pairs.size());
  const auto work = [&](std::size_t first, std::size_t last) {
    for (std::size_t p = first; p < last; ++p) {
      const auto [i, j] = pairs[p];
      out[p] = lcss_distance(pre.view(motifs[i].span), pre.view(motifs[j].span), pre.schema(), lcss);
    }
  };
  threads = std::max<std::size_t>(1, std::min(threads, pairs.size()));
  if (threads == 1) {
    work(0, pairs.size());
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t)
      pool.emplace_back(work, pairs.size() * t / threads, pairs.size() * (t + 1) / threads);
    for (auto& th : pool) th.join();
  }
  for (std::size_t p = 0; p < pairs.size(); ++p) d.set(pairs[p].first, pairs[p].second, out[p]);
  return d;
}

Linkage complete_linkage(const DistanceMatrix& d, double threshold) {
  const std::size_t n = d.size();
  std::vector<std::vector<std::size_t>> classes(n);
  for (std::size_t i = 0; i < n; ++i) classes[i] = {i};
  // link[a][b]: maximum cross distance between live classes a and b
  std::vector<std::vector<double>> link(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) link[i][j] = d(i, j);
  std::vector<bool> live(n, true);

  Linkage out;
  for (;;) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t ba = n, bb = n;
    for (std::size_t a = 0; a < n; ++a) {
      if (!live[a]) continue;
      for (std::size_t b = a + 1; b < n; ++b) {
        if (!live[b]) continue;
        if (link[a][b] < best) {
          best = link[a][b];
          ba = a;
          bb = b;
        }
      }
    }
    if (ba == n || best > threshold) break;
    // Class slots are named by their smallest item, so a < b keeps names stable.
    classes[ba].insert(classes[ba].end(), classes[bb].begin(), classes[bb].end());
    std::sort(classes[ba].begin(), classes[ba].end());
    classes[bb].clear();
    live[bb] = false;
    for (std::size_t c = 0; c < n; ++c) {
      if (!live[c] || c == ba) continue;
      const double v = std::max(link[ba][c], link[bb][c]);
      link[ba][c] = link[c][ba] = v;
    }
    out.trace.push_back({ba, bb, best, classes[ba].size()});
  }
  for (std::size_t a = 0; a < n; ++a)
    if (live[a]) out.classes.push_back(classes[a]);
  return out;
}

std::size_t reference_member(const std::vector<Span>& members) {
  if (members.empty()) throw ValidationError("reference of an empty class");
  double mean = 0.0;
  for (const auto& m : members) mean += m.duration();
  mean /= static_cast<double>(members.size());
  std::size_t best = 0;
  for (std::size_t k = 1; k < members.size(); ++k)
    if (std::abs(members[k].duration() - mean) < std::abs(members[best].duration() - mean))
      best = k;
  return best;
}

Series representative(const Series& pre, const std::vector<Span>& members,
                      const LcssParams& lcss, std::size_t* reference) {
  const std::size_t ref = reference_member(members);
  if (reference) *reference = ref;
  const Schema& schema = pre.schema();
  const std::size_t p = schema.size();
  const RowsView rv = pre.view(members[ref]);

  // Matched rows per reference row, reference row first.
  std::vector<std::vector<std::span<const double>>> matched(rv.rows);
  for (std::size_t i = 0; i < rv.rows; ++i) matched[i].push_back(rv.row(i));
  for (std::size_t k = 0; k < members.size(); ++k) {
    if (k == ref) continue;
    const RowsView other = pre.view(members[k]);
    for (const auto& [i, j] : lcss_align(rv, other, schema, lcss).pairs)
      matched[i].push_back(other.row(j));
  }

  std::vector<double> values;
  values.reserve(rv.rows * p);
  for (std::size_t i = 0; i < rv.rows; ++i) {
    for (std::size_t c = 0; c < p; ++c) {
      if (schema[c].is_quantitative()) {
        double sum = 0.0;
        for (const auto& row : matched[i]) sum += row[c];
        values.push_back(sum / static_cast<double>(matched[i].size()));
      } else {
        // Mode; the first value reaching the top count wins.
        double mode = matched[i].front()[c];
        std::size_t top = 0;
        for (const auto& cand : matched[i]) {
          const auto n = static_cast<std::size_t>(std::count_if(
              matched[i].begin(), matched[i].end(), [&](const auto& r) { return r[c] == cand[c]; }));
          if (n > top) {
            top = n;
            mode = cand[c];
          }
        }
        values.push_back(mode);
      }
    }
  }
  const auto& ts = pre.timestamps();
  std::vector<double> times(ts.begin() + static_cast<std::ptrdiff_t>(members[ref].start_index),
                            ts.begin() + static_cast<std::ptrdiff_t>(members[ref].end_index + 1));
  return Series(pre.schema_ptr(), std::move(times), std::move(values), pre.stage());
}

ClusteringResult cluster(const std::vector<TentativeMotif>& motifs, const Series& pre,
                         const LcssParams& lcss, const ClusteringConfig& cfg,
                         std::size_t threads) {
  cfg.validate();
  ClusteringResult out;
  out.distances = motif_distances(motifs, pre, lcss, threads);
  out.linkage = complete_linkage(out.distances, cfg.distance_threshold);
  for (const auto& items : out.linkage.classes) {
    if (items.size() < cfg.min_class_size) continue;
    MotifClass cls;
    cls.member_ids = items;
    std::vector<Span> spans;
    for (std::size_t id : items) {
      cls.members.push_back(motifs[id]);
      spans.push_back(motifs[id].span);
    }
    cls.representative = representative(pre, spans, lcss, &cls.reference_member);
    out.classes.push_back(std::move(cls));
  }
  return out;
}

}  // namespace motifminer
