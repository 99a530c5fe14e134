#include "motifminer/mining.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <optional>
#include <thread>
#include <unordered_set>

#include "motifminer/log.hpp"

namespace motifminer {

namespace {

// Portable bounded draw: std::uniform_int_distribution is implementation
// defined, which would make masks differ between standard libraries.
std::size_t uniform_index(std::mt19937_64& rng, std::size_t n) {
  const std::uint64_t bound = n;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return static_cast<std::size_t>(x % bound);
}

// First `k` entries of a partial Fisher-Yates shuffle of 0..n-1.
std::vector<std::size_t> sample_without_replacement(std::mt19937_64& rng, std::size_t n,
                                                    std::size_t k) {
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  for (std::size_t i = 0; i < k; ++i) std::swap(idx[i], idx[i + uniform_index(rng, n - i)]);
  idx.resize(k);
  return idx;
}

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdULL;
  h ^= h >> 33;
  return h;
}

double binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0.0;
  double r = 1.0;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return r;
}

}  // namespace

void ProjectionConfig::validate(std::size_t dims) const {
  if (w == 0) throw ValidationError("projection window w must be at least 1");
  if (w_mask >= w) throw ValidationError("w_mask must be smaller than w");
  if (dims == 0 || p_mask >= dims) throw ValidationError("p_mask must be smaller than p");
  if (proj == 0) throw ValidationError("proj must be at least 1");
}

WindowMatrix::WindowMatrix(const SymbolicSeries& sym, std::size_t w) : w_(w), dims_(sym.dims()) {
  if (w == 0) throw ValidationError("window length must be at least 1");
  if (sym.size() < w)
    throw ValidationError("symbolic series shorter than the window (" + std::to_string(sym.size()) +
                          " < " + std::to_string(w) + ")");
  count_ = sym.size() - w + 1;
  codes_.reserve(count_ * w * dims_);
  spans_.reserve(count_);
  for (std::size_t i = 0; i < count_; ++i) {
    for (std::size_t s = i; s < i + w; ++s)
      codes_.insert(codes_.end(), sym[s].codes.begin(), sym[s].codes.end());
    spans_.push_back(sym.symbol_span(i, i + w - 1));
  }
}

WindowMatrix windows(const SymbolicSeries& sym, std::size_t w) { return WindowMatrix(sym, w); }

ProjectionMask draw_mask(const ProjectionConfig& cfg, std::size_t dims, std::mt19937_64& rng) {
  ProjectionMask mask{cfg.w, dims, std::vector<bool>(cfg.w * dims, false)};
  std::vector<bool> symbol_masked(cfg.w, false);
  for (std::size_t s : sample_without_replacement(rng, cfg.w, cfg.w_mask)) symbol_masked[s] = true;
  for (std::size_t s = 0; s < cfg.w; ++s) {
    if (symbol_masked[s]) {
      for (std::size_t k = 0; k < dims; ++k) mask.masked[s * dims + k] = true;
      continue;
    }
    for (std::size_t k : sample_without_replacement(rng, dims, cfg.p_mask))
      mask.masked[s * dims + k] = true;
  }
  return mask;
}

std::mt19937_64 projection_rng(std::uint64_t seed, std::size_t iteration) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(iteration),
                    static_cast<std::uint32_t>(static_cast<std::uint64_t>(iteration) >> 32),
                    0x5eedu};
  return std::mt19937_64(seq);
}

std::vector<std::uint64_t> project_once(const WindowMatrix& windows, const ProjectionMask& mask) {
  if (mask.w != windows.w() || mask.dims != windows.dims())
    throw ValidationError("projection mask shape differs from the window shape");
  std::vector<std::size_t> kept;
  for (std::size_t c = 0; c < mask.masked.size(); ++c)
    if (!mask.masked[c]) kept.push_back(c);
  std::vector<std::uint64_t> buckets(windows.count());
  for (std::size_t i = 0; i < windows.count(); ++i) {
    const auto word = windows.word(i);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::size_t c : kept) h = mix(h, static_cast<std::uint64_t>(static_cast<std::uint32_t>(word[c])));
    buckets[i] = h;
  }
  return buckets;
}

std::uint32_t CollisionMatrix::count(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  if (j - i < band_) return 0;
  const auto it = cells_.find(key(i, j));
  return it == cells_.end() ? 0 : it->second;
}

void CollisionMatrix::increment(std::size_t i, std::size_t j, std::uint32_t by) {
  if (i > j) std::swap(i, j);
  if (j >= size_) throw ValidationError("collision cell out of range");
  if (j - i < band_) return;
  cells_[key(i, j)] += by;
}

void CollisionMatrix::accumulate(std::span<const std::uint64_t> buckets) {
  if (buckets.size() != size_) throw ValidationError("bucket count differs from matrix size");
  std::vector<std::pair<std::uint64_t, std::size_t>> order(buckets.size());
  for (std::size_t i = 0; i < buckets.size(); ++i) order[i] = {buckets[i], i};
  std::sort(order.begin(), order.end());
  for (std::size_t a = 0; a < order.size();) {
    std::size_t b = a;
    while (b < order.size() && order[b].first == order[a].first) ++b;
    for (std::size_t x = a; x < b; ++x)
      for (std::size_t y = x + 1; y < b; ++y) {
        const std::size_t i = order[x].second;
        const std::size_t j = order[y].second;  // > i: ties sorted by index
        if (j - i >= band_) ++cells_[key(i, j)];
      }
    a = b;
  }
}

void CollisionMatrix::merge(const CollisionMatrix& other) {
  if (other.size_ != size_ || other.band_ != band_)
    throw ValidationError("merging collision matrices of different shapes");
  for (const auto& [k, v] : other.cells_) cells_[k] += v;
}

std::vector<CollisionMatrix::Cell> CollisionMatrix::sorted_cells() const {
  std::vector<Cell> out;
  out.reserve(cells_.size());
  for (const auto& [k, v] : cells_)
    out.push_back({static_cast<std::size_t>(k >> 32), static_cast<std::size_t>(k & 0xffffffffULL), v});
  std::sort(out.begin(), out.end(), [](const Cell& a, const Cell& b) {
    if (a.count != b.count) return a.count > b.count;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  });
  return out;
}

std::uint32_t CollisionMatrix::max_count() const {
  std::uint32_t best = 0;
  for (const auto& [k, v] : cells_) best = std::max(best, v);
  return best;
}

CollisionMatrix project(const WindowMatrix& windows, const ProjectionConfig& cfg,
                        std::size_t threads) {
  cfg.validate(windows.dims());
  if (windows.count() > std::numeric_limits<std::uint32_t>::max())
    throw ValidationError("too many windows for the collision matrix");
  const auto run = [&](std::size_t first, std::size_t last) {
    CollisionMatrix local(windows.count(), windows.w());
    for (std::size_t it = first; it < last; ++it) {
      auto rng = projection_rng(cfg.rng_seed, it);
      const auto mask = draw_mask(cfg, windows.dims(), rng);
      local.accumulate(project_once(windows, mask));
    }
    return local;
  };
  threads = std::max<std::size_t>(1, std::min(threads, cfg.proj));
  if (threads == 1) return run(0, cfg.proj);

  std::vector<CollisionMatrix> parts(threads);
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) {
    const std::size_t first = cfg.proj * t / threads;
    const std::size_t last = cfg.proj * (t + 1) / threads;
    pool.emplace_back([&, t, first, last] { parts[t] = run(first, last); });
  }
  for (auto& th : pool) th.join();
  CollisionMatrix total(windows.count(), windows.w());
  for (const auto& part : parts) total.merge(part);
  return total;
}

double collision_probability(std::size_t w, std::size_t dims, std::size_t w_mask,
                             std::size_t p_mask,
                             std::span<const std::pair<std::size_t, std::size_t>> cells) {
  if (w == 0 || w > 30) throw ValidationError("collision probability needs 1 <= w <= 30");
  if (w_mask > w || p_mask > dims) throw ValidationError("mask larger than the window");
  std::vector<std::size_t> differing(w, 0);
  std::vector<std::vector<bool>> seen(w, std::vector<bool>(dims, false));
  for (const auto& [s, k] : cells) {
    if (s >= w || k >= dims) throw ValidationError("differing cell outside the window");
    if (!seen[s][k]) {
      seen[s][k] = true;
      ++differing[s];
    }
  }
  // A symbol left unmasked collides iff its p_mask draw covers all its differing cells.
  std::vector<double> pass(w);
  const double total_draws = binomial(dims, p_mask);
  for (std::size_t s = 0; s < w; ++s)
    pass[s] = differing[s] > p_mask ? 0.0
                                    : binomial(dims - differing[s], p_mask - differing[s]) / total_draws;
  double sum = 0.0;
  std::size_t subsets = 0;
  for (std::uint32_t m = 0; m < (1u << w); ++m) {
    if (static_cast<std::size_t>(std::popcount(m)) != w_mask) continue;
    ++subsets;
    double prob = 1.0;
    for (std::size_t s = 0; s < w; ++s)
      if (!(m & (1u << s))) prob *= pass[s];
    sum += prob;
  }
  return sum / static_cast<double>(subsets);
}

void MiningThresholds::validate(std::size_t proj) const {
  if (collision_threshold == 0 || collision_threshold > proj)
    throw ValidationError("collision threshold must lie in [1, proj]");
  if (!(distance_threshold > 0.0 && distance_threshold < 1.0))
    throw ValidationError("distance threshold must lie in (0,1)");
  if (min_symbols == 0) throw ValidationError("min_symbols must be at least 1");
  if (min_motif_duration < 0.0) throw ValidationError("min_motif_duration must be non-negative");
  if (beam_width == 0) throw ValidationError("beam width must be at least 1");
  if (!(acceptable_removal_rate >= 0.0 && acceptable_removal_rate <= 1.0))
    throw ValidationError("acceptable removal rate must lie in [0,1]");
}

namespace {

class Examiner {
 public:
  Examiner(const CollisionMatrix& collisions, const WindowMatrix& windows,
           const SymbolicSeries& sym, const Series& pre, const MiningThresholds& th,
           const LcssParams& lcss)
      : p_(collisions), win_(windows), sym_(sym), pre_(pre), th_(th), lcss_(lcss) {}

  std::vector<GrownPair> run() {
    std::vector<GrownPair> out;
    for (const auto& cell : p_.sorted_cells()) {
      if (cell.count < th_.collision_threshold) break;
      if (visited_.count(key(cell.i, cell.j)) || inside_reported(cell.i, cell.j)) continue;
      auto seed = best_in_neighbourhood(cell.i, cell.j);
      if (!seed) continue;
      GrownPair g = grow(*seed);
      g.seed_count = p_.count(seed->a0, seed->b0);
      g.seed_i = seed->a0;
      g.seed_j = seed->b0;
      log(LogLevel::Debug, "grown pair ", g.first_symbols.start_index, "-", g.first_symbols.end_index,
          " / ", g.second_symbols.start_index, "-", g.second_symbols.end_index, " d=", g.distance);
      reported_.push_back(g);
      out.push_back(std::move(g));
    }
    return out;
  }

 private:
  // Symbol ranges [a0, a1] and [b0, b1], a before b.
  struct Candidate {
    std::size_t a0, a1, b0, b1;
    double distance;
  };

  static std::uint64_t key(std::size_t i, std::size_t j) {
    return (static_cast<std::uint64_t>(i) << 32) | j;
  }

  bool hits(std::size_t i, std::size_t j) const {
    if (i >= win_.count() || j >= win_.count()) return false;
    return p_.count(i, j) >= th_.collision_threshold;
  }

  // Windows starting inside the first and the second symbol range of an
  // already grown pair are within its scope.
  bool inside_reported(std::size_t i, std::size_t j) const {
    for (const auto& g : reported_) {
      const auto in = [&](std::size_t x, const Span& s) {
        return x >= s.start_index && x + win_.w() - 1 <= s.end_index;
      };
      if ((in(i, g.first_symbols) && in(j, g.second_symbols)) ||
          (in(j, g.first_symbols) && in(i, g.second_symbols)))
        return true;
    }
    return false;
  }

  double distance(std::size_t a0, std::size_t a1, std::size_t b0, std::size_t b1) const {
    const Span sa = sym_.source_span(a0, a1);
    const Span sb = sym_.source_span(b0, b1);
    return lcss_distance(pre_.view(sa), pre_.view(sb), pre_.schema(), lcss_);
  }

  std::optional<Candidate> best_in_neighbourhood(std::size_t ci, std::size_t cj) {
    std::optional<Candidate> best;
    const auto r = static_cast<std::ptrdiff_t>(th_.neighbourhood_radius);
    const std::size_t w = win_.w();
    for (std::ptrdiff_t di = -r; di <= r; ++di) {
      for (std::ptrdiff_t dj = -r; dj <= r; ++dj) {
        const std::ptrdiff_t si = static_cast<std::ptrdiff_t>(ci) + di;
        const std::ptrdiff_t sj = static_cast<std::ptrdiff_t>(cj) + dj;
        if (si < 0 || sj < 0) continue;
        std::size_t i = static_cast<std::size_t>(si), j = static_cast<std::size_t>(sj);
        if (i > j) std::swap(i, j);
        if (!hits(i, j)) continue;
        visited_.insert(key(i, j));
        const double d = distance(i, i + w - 1, j, j + w - 1);
        if (d <= th_.distance_threshold && (!best || d < best->distance))
          best = Candidate{i, i + w - 1, j, j + w - 1, d};
      }
    }
    return best;
  }

  std::optional<Candidate> extend(const Candidate& c, bool left) const {
    std::optional<Candidate> best;
    const std::size_t r = th_.neighbourhood_radius;
    const std::size_t w = win_.w();
    const std::size_t n = sym_.size();
    for (std::size_t da = 0; da <= r; ++da) {
      for (std::size_t db = 0; db <= r; ++db) {
        if (da == 0 && db == 0) continue;
        Candidate e = c;
        std::size_t wi, wj;
        if (left) {
          if (da > c.a0 || db > c.b0) continue;
          e.a0 -= da;
          e.b0 -= db;
          wi = e.a0;
          wj = e.b0;
        } else {
          if (c.a1 + da >= n || c.b1 + db >= n) continue;
          e.a1 += da;
          e.b1 += db;
          wi = e.a1 + 1 - w;
          wj = e.b1 + 1 - w;
        }
        if (e.a1 >= e.b0) continue;  // the two occurrences must stay disjoint
        if (!hits(std::min(wi, wj), std::max(wi, wj))) continue;
        e.distance = distance(e.a0, e.a1, e.b0, e.b1);
        if (e.distance <= th_.distance_threshold && (!best || e.distance < best->distance))
          best = e;
      }
    }
    return best;
  }

  GrownPair grow(Candidate c) const {
    for (bool progress = true; progress;) {
      progress = false;
      for (bool left : {true, false}) {
        if (auto e = extend(c, left)) {
          c = *e;
          progress = true;
        }
      }
    }
    GrownPair g;
    g.first_symbols = sym_.symbol_span(c.a0, c.a1);
    g.second_symbols = sym_.symbol_span(c.b0, c.b1);
    g.first = sym_.source_span(c.a0, c.a1);
    g.second = sym_.source_span(c.b0, c.b1);
    g.distance = c.distance;
    return g;
  }

  const CollisionMatrix& p_;
  const WindowMatrix& win_;
  const SymbolicSeries& sym_;
  const Series& pre_;
  const MiningThresholds& th_;
  const LcssParams& lcss_;
  std::unordered_set<std::uint64_t> visited_;
  std::vector<GrownPair> reported_;
};

}  // namespace

std::vector<GrownPair> examine(const CollisionMatrix& collisions, const WindowMatrix& windows,
                               const SymbolicSeries& sym, const Series& preprocessed,
                               const MiningThresholds& thresholds, const LcssParams& lcss) {
  if (collisions.size() != windows.count())
    throw ValidationError("collision matrix size differs from the window count");
  if (preprocessed.stage() != Stage::Normalized)
    throw ValidationError("examination needs the normalized preprocessed series");
  lcss.validate(preprocessed.schema());
  return Examiner(collisions, windows, sym, preprocessed, thresholds, lcss).run();
}

namespace {

bool is_clique(std::span<const Span> all, const std::vector<std::size_t>& members) {
  std::size_t max_start = 0, min_end = std::numeric_limits<std::size_t>::max();
  for (std::size_t m : members) {
    max_start = std::max(max_start, all[m].start_index);
    min_end = std::min(min_end, all[m].end_index);
  }
  return max_start <= min_end;  // intervals share a point iff they pairwise overlap
}

// Connected components of the overlap graph, each sorted by index.
std::vector<std::vector<std::size_t>> components(std::span<const Span> all,
                                                 std::vector<std::size_t> members) {
  std::sort(members.begin(), members.end(), [&](std::size_t a, std::size_t b) {
    if (all[a].start_index != all[b].start_index) return all[a].start_index < all[b].start_index;
    return a < b;
  });
  std::vector<std::vector<std::size_t>> out;
  std::size_t reach = 0;
  for (std::size_t m : members) {
    if (out.empty() || all[m].start_index > reach) {
      out.emplace_back();
      reach = all[m].end_index;
    } else {
      reach = std::max(reach, all[m].end_index);
    }
    out.back().push_back(m);
  }
  for (auto& c : out) std::sort(c.begin(), c.end());
  return out;
}

struct DivState {
  std::vector<std::size_t> removed;  // sorted
  std::vector<std::vector<std::size_t>> pending;
  std::vector<std::vector<std::size_t>> done;

  bool operator<(const DivState& o) const {
    if (removed.size() != o.removed.size()) return removed.size() < o.removed.size();
    return removed < o.removed;
  }
};

void settle(std::span<const Span> all, std::vector<std::size_t> members, DivState& st) {
  for (auto& c : components(all, std::move(members))) {
    if (is_clique(all, c))
      st.done.push_back(std::move(c));
    else
      st.pending.push_back(std::move(c));
  }
}

// Non-overlapping pair of a non-clique component: earliest end, latest start.
std::pair<std::size_t, std::size_t> disjoint_pair(std::span<const Span> all,
                                                  const std::vector<std::size_t>& c) {
  std::size_t k1 = c.front(), k2 = c.front();
  for (std::size_t m : c) {
    if (all[m].end_index < all[k1].end_index) k1 = m;
    if (all[m].start_index > all[k2].start_index) k2 = m;
  }
  return {k1, k2};
}

// Keeping both k1 and k2 means cutting the component between them: the
// members straddling a boundary after some member's end inside the gap.
std::vector<std::vector<std::size_t>> separators(std::span<const Span> all,
                                                 const std::vector<std::size_t>& comp, std::size_t k1,
                                                 std::size_t k2) {
  const std::size_t lo = all[k1].end_index, hi = all[k2].start_index;
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t e : comp) {
    const std::size_t c = all[e].end_index;
    if (c < lo || c >= hi) continue;
    std::vector<std::size_t> cut;
    for (std::size_t m : comp)
      if (all[m].start_index <= c && all[m].end_index > c) cut.push_back(m);
    if (!cut.empty() && std::find(out.begin(), out.end(), cut) == out.end()) out.push_back(std::move(cut));
  }
  return out;
}

DivState branch(std::span<const Span> all, const DivState& parent,
                const std::vector<std::size_t>& comp, const std::vector<std::size_t>& drop) {
  DivState st;
  st.removed = parent.removed;
  st.removed.insert(st.removed.end(), drop.begin(), drop.end());
  std::sort(st.removed.begin(), st.removed.end());
  st.done = parent.done;
  st.pending.assign(parent.pending.begin() + 1, parent.pending.end());
  std::vector<std::size_t> rest;
  for (std::size_t m : comp)
    if (std::find(drop.begin(), drop.end(), m) == drop.end()) rest.push_back(m);
  settle(all, std::move(rest), st);
  return st;
}

// Removes the longest member of each non-clique component until all are cliques.
DivState greedy_division(std::span<const Span> all, std::vector<std::size_t> members) {
  DivState st;
  settle(all, std::move(members), st);
  while (!st.pending.empty()) {
    auto comp = st.pending.front();
    std::size_t longest = comp.front();
    for (std::size_t m : comp)
      if (all[m].length() > all[longest].length()) longest = m;
    st = branch(all, st, comp, {longest});
  }
  return st;
}

}  // namespace

Division divide_overlaps(std::span<const Span> intervals, std::size_t beam_width,
                         double acceptable_removal_rate) {
  std::vector<std::size_t> all_idx(intervals.size());
  std::iota(all_idx.begin(), all_idx.end(), 0);
  const double budget = acceptable_removal_rate * static_cast<double>(intervals.size());

  DivState root;
  settle(intervals, all_idx, root);
  std::optional<DivState> best;
  std::vector<DivState> beam{root};
  while (!beam.empty()) {
    std::vector<DivState> next;
    for (const auto& st : beam) {
      if (st.pending.empty()) {
        if (!best || st < *best) best = st;
        continue;
      }
      const auto& comp = st.pending.front();
      const auto [k1, k2] = disjoint_pair(intervals, comp);
      std::vector<std::vector<std::size_t>> drops{{k1}, {k2}, {k1, k2}};
      for (auto& cut : separators(intervals, comp, k1, k2))
        if (std::find(drops.begin(), drops.end(), cut) == drops.end()) drops.push_back(std::move(cut));
      for (const auto& drop : drops) {
        DivState child = branch(intervals, st, comp, drop);
        if (static_cast<double>(child.removed.size()) > budget) continue;
        if (best && child.removed.size() >= best->removed.size()) continue;
        next.push_back(std::move(child));
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end(),
                           [](const DivState& a, const DivState& b) { return a.removed == b.removed; }),
               next.end());
    if (next.size() > beam_width) next.resize(beam_width);
    beam = std::move(next);
  }
  if (!best) {
    log(LogLevel::Debug, "divisive search exceeded the removal budget; greedy fallback");
    best = greedy_division(intervals, all_idx);
  }

  Division out;
  out.removed = best->removed;
  out.groups = best->done;
  for (auto& g : out.groups) std::sort(g.begin(), g.end());
  std::sort(out.groups.begin(), out.groups.end(), [&](const auto& a, const auto& b) {
    return intervals[a.front()].start_index < intervals[b.front()].start_index ||
           (intervals[a.front()].start_index == intervals[b.front()].start_index && a < b);
  });
  return out;
}

std::vector<Subsequence> subsequences_of(const std::vector<GrownPair>& pairs) {
  std::vector<Subsequence> out;
  out.reserve(2 * pairs.size());
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    out.push_back({pairs[k].first, pairs[k].first_symbols, k});
    out.push_back({pairs[k].second, pairs[k].second_symbols, k});
  }
  return out;
}

std::vector<TentativeMotif> extract_tentative_motifs(const std::vector<GrownPair>& pairs,
                                                     const MiningThresholds& thresholds) {
  return extract_tentative_motifs(subsequences_of(pairs), thresholds);
}

std::vector<TentativeMotif> extract_tentative_motifs(const std::vector<Subsequence>& subsequences,
                                                     const MiningThresholds& thresholds) {
  std::vector<Span> spans;
  spans.reserve(subsequences.size());
  for (const auto& s : subsequences) spans.push_back(s.span);

  std::vector<TentativeMotif> out;
  std::vector<std::size_t> all_idx(spans.size());
  std::iota(all_idx.begin(), all_idx.end(), 0);
  for (const auto& comp : components(spans, all_idx)) {
    std::vector<Span> local;
    for (std::size_t m : comp) local.push_back(spans[m]);
    const Division div = divide_overlaps(local, thresholds.beam_width,
                                         thresholds.acceptable_removal_rate);
    for (const auto& group : div.groups) {
      TentativeMotif t;
      t.span = local[group.front()];
      t.symbol_span = subsequences[comp[group.front()]].symbol_span;
      for (std::size_t g : group) {
        const Span& s = local[g];
        const Span& sy = subsequences[comp[g]].symbol_span;
        if (s.start_index < t.span.start_index) {
          t.span.start_index = s.start_index;
          t.span.start_time = s.start_time;
        }
        if (s.end_index > t.span.end_index) {
          t.span.end_index = s.end_index;
          t.span.end_time = s.end_time;
        }
        if (sy.start_index < t.symbol_span.start_index) {
          t.symbol_span.start_index = sy.start_index;
          t.symbol_span.start_time = sy.start_time;
        }
        if (sy.end_index > t.symbol_span.end_index) {
          t.symbol_span.end_index = sy.end_index;
          t.symbol_span.end_time = sy.end_time;
        }
        t.support.push_back(comp[g]);
      }
      if (t.span.duration() < thresholds.min_motif_duration) continue;
      if (t.symbol_span.length() < thresholds.min_symbols) continue;
      out.push_back(std::move(t));
    }
  }
  std::sort(out.begin(), out.end(), [](const TentativeMotif& a, const TentativeMotif& b) {
    return a.span.start_index < b.span.start_index;
  });
  return out;
}

}  // namespace motifminer
