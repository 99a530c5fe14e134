#include "motifminer/fixtures.hpp"

#include <algorithm>
#include <unordered_set>

namespace motifminer {

Script morning_routine() {
  return {
      {1, Lying, 5.0, 0.8},     {1, Sitting, 3.0, 2.0},  {5, Sitting, 6.0, 2.0},
      {2, Standing, 15.0, 5.0}, {1, Standing, 8.0, 5.5}, {3, Standing, 10.0, 6.5},
      {3, Sitting, 13.0, 2.5},
  };
}

std::vector<Script> other_activities() {
  return {
      {{1, Lying, 60.0, 0.5}},                                                    // sleeping
      {{3, Standing, 20.0, 7.0}, {3, Sitting, 30.0, 2.5}, {4, Sitting, 10.0, 1.5}},  // meal
      {{4, Sitting, 45.0, 1.5}, {4, Lying, 15.0, 0.8}},                           // quiet activity
      {{7, Sitting, 50.0, 2.0}, {6, Standing, 4.0, 6.0}, {5, Sitting, 6.0, 2.0}},   // desk work
      {{6, Standing, 10.0, 8.0}, {4, Standing, 25.0, 7.5}, {4, Sitting, 25.0, 2.0}},  // housework
      {{4, Sitting, 30.0, 1.2}, {3, Standing, 5.0, 5.0}, {4, Sitting, 25.0, 1.2}},  // television
      {{2, Standing, 10.0, 5.0}, {1, Sitting, 10.0, 2.0}, {1, Lying, 40.0, 0.6}},   // going to bed
  };
}

namespace {

Script scaled_activity(Script s, double factor) {
  for (auto& step : s)
    if (step.activity >= 0.0) step.activity *= factor;
  return s;
}

}  // namespace

NoiseSpec default_variant_noise() {
  NoiseSpec n;
  n.value_noise = {0.0, 0.0, 0.8, 4.0};
  n.stretch_min = 0.8;
  n.stretch_max = 1.25;
  n.interruptions = 1;
  n.interruption_minutes = 10.0;
  return n;
}

ComparisonFixture comparison_fixture(const SimConfig& cfg, std::uint64_t seed,
                                     const NoiseSpec& variant) {
  cfg.validate();
  variant.validate(simulator_schema(cfg).size());
  std::mt19937_64 rng(seed);
  ComparisonFixture fx;
  const Script base = morning_routine();

  // The reference and its variants share one behavioural timeline.
  Timeline ref_t;
  append_script(ref_t, base, cfg, std::uniform_real_distribution<double>(0.9, 1.1)(rng));
  const Series reference = render(ref_t, cfg, rng);
  fx.sequences.push_back(reference);
  fx.classes.push_back(0);

  for (int k = 1; k <= 8; ++k) {
    const Series fresh = render(ref_t, cfg, rng);
    fx.sequences.push_back(make_instance(fresh, variant, cfg, rng));
    fx.classes.push_back(0);
  }

  for (const auto& script : other_activities()) {
    Timeline t;
    append_script(t, script, cfg, std::uniform_real_distribution<double>(0.9, 1.1)(rng));
    fx.sequences.push_back(render(t, cfg, rng));
    fx.classes.push_back(1);
  }

  {  // slowness: same moves, twice as long, lower activity
    Timeline t;
    append_script(t, scaled_activity(base, 0.6), cfg, 2.0);
    fx.sequences.push_back(render(t, cfg, rng));
    fx.classes.push_back(1);
  }
  {  // long interruption: half the routine spent lying in the hall
    Timeline t = ref_t;
    const std::size_t n = t.rooms.size();
    const std::size_t len = n / 2;
    const std::size_t at = std::uniform_int_distribution<std::size_t>(n / 6, n - len - n / 6)(rng);
    for (std::size_t i = at; i < at + len; ++i) {
      t.rooms[i] = 6;
      t.postures[i] = Lying;
      t.activity_means[i] = 0.2;
    }
    fx.sequences.push_back(render(t, cfg, rng));
    fx.classes.push_back(1);
  }
  {  // high heart rate
    NoiseSpec hr;
    hr.heart_rate_inflation = std::uniform_real_distribution<double>(0.3, 0.4)(rng);
    fx.sequences.push_back(make_instance(render(ref_t, cfg, rng), hr, cfg, rng));
    fx.classes.push_back(1);
  }
  return fx;
}

std::vector<Series> preprocess_all(const std::vector<Series>& raw, const RepresentationConfig& rep) {
  std::vector<Series> out;
  out.reserve(raw.size());
  for (const auto& s : raw) out.push_back(preprocess(s, rep));
  return out;
}

std::vector<SymbolicSeries> represent_all(const std::vector<Series>& raw,
                                          const RepresentationConfig& rep) {
  if (raw.empty()) return {};
  const auto pre = preprocess_all(raw, rep);
  // Fit on the concatenation, with synthetic increasing timestamps.
  std::vector<double> ts, values;
  for (const auto& s : pre) {
    for (std::size_t i = 0; i < s.size(); ++i) ts.push_back(static_cast<double>(ts.size()) * 60.0);
    values.insert(values.end(), s.values().begin(), s.values().end());
  }
  const Series all(pre.front().schema_ptr(), std::move(ts), std::move(values), Stage::Normalized);
  const Schema fitted = fit_schema(all, rep);
  std::vector<SymbolicSeries> out;
  out.reserve(raw.size());
  for (const auto& s : raw) out.push_back(represent(s, rep, fitted).symbolic);
  return out;
}

std::vector<double> reference_collision_rates(const std::vector<SymbolicSeries>& sequences,
                                              std::size_t reference, const ProjectionConfig& cfg) {
  if (reference >= sequences.size()) throw ValidationError("reference index out of range");
  const std::size_t dims = sequences[reference].dims();
  cfg.validate(dims);
  const WindowMatrix ref(sequences[reference], cfg.w);
  std::vector<std::optional<WindowMatrix>> wins;
  for (const auto& s : sequences) {
    if (s.size() >= cfg.w)
      wins.emplace_back(WindowMatrix(s, cfg.w));
    else
      wins.emplace_back(std::nullopt);
  }
  std::vector<double> rate(sequences.size(), 0.0);
  for (std::size_t it = 0; it < cfg.proj; ++it) {
    auto rng = projection_rng(cfg.rng_seed, it);
    const auto mask = draw_mask(cfg, dims, rng);
    const auto ref_buckets = project_once(ref, mask);
    for (std::size_t k = 0; k < sequences.size(); ++k) {
      if (!wins[k]) continue;
      const auto b = project_once(*wins[k], mask);
      const std::unordered_set<std::uint64_t> seen(b.begin(), b.end());
      std::size_t hit = 0;
      for (auto h : ref_buckets) hit += seen.count(h);
      rate[k] += static_cast<double>(hit) / static_cast<double>(ref_buckets.size());
    }
  }
  for (auto& r : rate) r /= static_cast<double>(cfg.proj);
  return rate;
}

}  // namespace motifminer
