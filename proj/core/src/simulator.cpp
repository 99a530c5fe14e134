#include "motifminer/simulator.hpp"

#include <algorithm>
#include <cmath>

#include "motifminer/log.hpp"

namespace motifminer {

namespace {

constexpr std::size_t kRoom = 0, kPosture = 1, kActivity = 2, kHeart = 3;

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::exp(uniform(rng, std::log(lo), std::log(hi)));
}

int pick_weighted(std::mt19937_64& rng, const std::array<double, 3>& w) {
  return std::discrete_distribution<int>(w.begin(), w.end())(rng) + 1;
}

std::size_t minutes_to_samples(double minutes, const SimConfig& cfg) {
  return static_cast<std::size_t>(std::max(1.0, std::round(minutes * 60.0 / cfg.sampling_period)));
}

}  // namespace

void SimConfig::validate() const {
  if (!(days > 0.0)) throw ValidationError("simulation length must be positive");
  if (!(sampling_period > 0.0)) throw ValidationError("sampling period must be positive");
  if (rooms < 2) throw ValidationError("at least two rooms are required");
  if (posture_given_room.size() != static_cast<std::size_t>(rooms))
    throw ValidationError("posture table needs one row per room");
  for (const auto& row : posture_given_room) {
    double sum = 0.0;
    for (double w : row) {
      if (w < 0.0) throw ValidationError("negative posture weight");
      sum += w;
    }
    if (!(sum > 0.0)) throw ValidationError("posture table row without weight");
  }
  if (!(room_dwell_min > 0.0 && room_dwell_min <= room_dwell_max))
    throw ValidationError("invalid room dwell range");
  if (!(posture_dwell_min > 0.0 && posture_dwell_min <= posture_dwell_max))
    throw ValidationError("invalid posture dwell range");
  if (!(activity_ar >= 0.0 && activity_ar < 1.0))
    throw ValidationError("activity AR coefficient must lie in [0,1)");
  for (int q = 0; q < 3; ++q) {
    if (activity_mean[q] < 0.0 || activity_mean[q] > 12.0)
      throw ValidationError("activity baseline outside the schema bounds");
    if (activity_sd[q] < 0.0) throw ValidationError("negative activity noise");
  }
  if (hr_noise_sd < 0.0) throw ValidationError("negative heart-rate noise");
}

std::size_t SimConfig::samples() const {
  return static_cast<std::size_t>(std::llround(days * 86400.0 / sampling_period));
}

Schema simulator_schema(const SimConfig& cfg) { return monitoring_schema(cfg.rooms); }

Series render(const Timeline& t, const SimConfig& cfg, std::mt19937_64& rng, double start_time) {
  const std::size_t n = t.rooms.size();
  if (t.postures.size() != n || t.activity_means.size() != n)
    throw ValidationError("timeline columns differ in length");
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<double> ts(n), values(n * 4);
  double e = 0.0;
  const double innovation = std::sqrt(1.0 - cfg.activity_ar * cfg.activity_ar);
  for (std::size_t i = 0; i < n; ++i) {
    const int q = t.postures[i];
    e = cfg.activity_ar * e + innovation * cfg.activity_sd[q - 1] * gauss(rng);
    const double activity = std::clamp(t.activity_means[i] + e, 0.0, 12.0);
    const double heart =
        std::clamp(cfg.hr_intercept + cfg.hr_slope * activity + cfg.hr_noise_sd * gauss(rng), 40.0,
                   140.0);
    ts[i] = start_time + static_cast<double>(i) * cfg.sampling_period;
    values[i * 4 + kRoom] = t.rooms[i];
    values[i * 4 + kPosture] = q;
    values[i * 4 + kActivity] = activity;
    values[i * 4 + kHeart] = heart;
  }
  return Series(make_schema(simulator_schema(cfg)), std::move(ts), std::move(values), Stage::Raw);
}

void append_script(Timeline& t, const Script& script, const SimConfig& cfg, double scale) {
  for (const auto& step : script) {
    if (step.room < 1 || step.room > cfg.rooms) throw ValidationError("script room out of range");
    if (step.posture < Lying || step.posture > Standing)
      throw ValidationError("script posture out of range");
    const std::size_t len = minutes_to_samples(step.minutes * scale, cfg);
    const double mean = step.activity >= 0.0 ? step.activity : cfg.activity_mean[step.posture - 1];
    t.rooms.insert(t.rooms.end(), len, step.room);
    t.postures.insert(t.postures.end(), len, step.posture);
    t.activity_means.insert(t.activity_means.end(), len, mean);
  }
}

void append_random_walk(Timeline& t, std::size_t samples, const SimConfig& cfg,
                        std::mt19937_64& rng) {
  std::uniform_int_distribution<int> any_room(1, cfg.rooms);
  int room = t.rooms.empty() ? any_room(rng) : t.rooms.back();
  std::size_t produced = 0;
  bool first = true;
  while (produced < samples) {
    if (!first || t.rooms.empty()) {
      // Move to a different room.
      int next = room;
      while (next == room) next = any_room(rng);
      room = next;
    }
    first = false;
    std::size_t dwell = minutes_to_samples(log_uniform(rng, cfg.room_dwell_min, cfg.room_dwell_max), cfg);
    dwell = std::min(dwell, samples - produced);
    std::size_t used = 0;
    while (used < dwell) {
      const int posture = pick_weighted(rng, cfg.posture_given_room[room - 1]);
      std::size_t len =
          minutes_to_samples(log_uniform(rng, cfg.posture_dwell_min, cfg.posture_dwell_max), cfg);
      len = std::min(len, dwell - used);
      t.rooms.insert(t.rooms.end(), len, room);
      t.postures.insert(t.postures.end(), len, posture);
      t.activity_means.insert(t.activity_means.end(), len, cfg.activity_mean[posture - 1]);
      used += len;
    }
    produced += dwell;
  }
}

Series generate_nonpattern(const SimConfig& cfg) {
  cfg.validate();
  std::mt19937_64 rng(cfg.rng_seed);
  Timeline t;
  append_random_walk(t, cfg.samples(), cfg, rng);
  return render(t, cfg, rng, cfg.start_time);
}

HabitTemplate default_habits() {
  // Rooms: 1 bedroom, 2 bathroom, 3 kitchen, 4 living room, 5 toilet, 6 hall, 7 office.
  HabitTemplate h;
  h.blocks = {
      {"night", 0.0, {{1, Lying, 400.0}, {5, Sitting, 5.0}, {1, Lying, 15.0}}},
      {"morning_routine", 420.0,
       {{1, Sitting, 5.0}, {5, Sitting, 6.0}, {2, Standing, 15.0, 5.0}, {1, Standing, 8.0, 5.5},
        {3, Standing, 10.0, 6.0}, {3, Sitting, 15.0, 2.5}}},
      {"lunch", 720.0,
       {{3, Standing, 20.0, 7.0}, {3, Sitting, 25.0, 2.5}, {3, Standing, 8.0, 5.0},
        {4, Sitting, 20.0, 1.5}}},
      {"dinner", 1140.0,
       {{3, Standing, 25.0, 7.0}, {3, Sitting, 30.0, 2.5}, {4, Sitting, 30.0, 1.8}}},
      {"evening_hygiene", 1330.0,
       {{2, Standing, 12.0, 5.0}, {5, Sitting, 5.0}, {1, Sitting, 5.0}, {1, Lying, 60.0}}},
  };
  return h;
}

Series generate_habits(const SimConfig& cfg, const HabitTemplate& habits) {
  cfg.validate();
  std::mt19937_64 rng(cfg.rng_seed);
  const std::size_t total = cfg.samples();
  const double per_minute = 60.0 / cfg.sampling_period;
  Timeline t;
  const auto days = static_cast<std::size_t>(std::ceil(cfg.days));
  for (std::size_t d = 0; d < days && t.rooms.size() < total; ++d) {
    for (const auto& block : habits.blocks) {
      const double jitter = block.start_minute == 0.0 ? 0.0
                                                      : uniform(rng, -habits.start_jitter, habits.start_jitter);
      const double start_min = static_cast<double>(d) * 1440.0 + block.start_minute + jitter;
      const auto start = static_cast<std::size_t>(std::max(0.0, std::round(start_min * per_minute)));
      if (start > t.rooms.size()) append_random_walk(t, start - t.rooms.size(), cfg, rng);
      const double scale = uniform(rng, 1.0 - habits.duration_jitter, 1.0 + habits.duration_jitter);
      append_script(t, block.script, cfg, scale);
    }
  }
  if (t.rooms.size() < total) append_random_walk(t, total - t.rooms.size(), cfg, rng);
  t.rooms.resize(total);
  t.postures.resize(total);
  t.activity_means.resize(total);
  return render(t, cfg, rng, cfg.start_time);
}

MotifPick pick_motif(const Series& habits, const RepresentationConfig& rep, const Schema& schema,
                     std::mt19937_64& rng, double min_minutes, double max_minutes,
                     std::size_t min_symbols, std::size_t max_tries) {
  if (habits.size() < 2) throw ValidationError("habit series too short to pick a motif");
  const double period = habits.timestamps()[1] - habits.timestamps()[0];
  const auto lo = static_cast<std::size_t>(std::ceil(min_minutes * 60.0 / period));
  const auto hi = static_cast<std::size_t>(std::floor(max_minutes * 60.0 / period));
  if (lo == 0 || lo > hi || hi > habits.size())
    throw ValidationError("motif duration range does not fit the habit series");
  for (std::size_t attempt = 0; attempt < max_tries; ++attempt) {
    const std::size_t len = std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    const std::size_t start = std::uniform_int_distribution<std::size_t>(0, habits.size() - len)(rng);
    Series sub = slice(habits, start, start + len - 1);
    const auto r = represent(sub, rep, schema);
    if (r.symbolic.size() >= min_symbols)
      return {std::move(sub), habits.span(start, start + len - 1), r.symbolic.size()};
  }
  throw Error("simulation", "no motif with at least " + std::to_string(min_symbols) +
                                " symbols found after " + std::to_string(max_tries) + " tries");
}

void NoiseSpec::validate(std::size_t dims) const {
  if (!value_noise.empty() && value_noise.size() != dims)
    throw ValidationError("value noise needs one magnitude per parameter");
  for (double v : value_noise)
    if (v < 0.0) throw ValidationError("negative value noise");
  if (qualitative_flip < 0.0 || qualitative_flip > 1.0)
    throw ValidationError("flip probability must lie in [0,1]");
  if (!(stretch_min > 0.0 && stretch_min <= stretch_max))
    throw ValidationError("stretch factors must be positive and ordered");
  if (interruption_minutes < 0.0) throw ValidationError("negative interruption length");
  if (heart_rate_inflation < 0.0) throw ValidationError("negative heart-rate inflation");
}

bool NoiseSpec::is_zero() const {
  for (double v : value_noise)
    if (v != 0.0) return false;
  return qualitative_flip == 0.0 && (interruptions == 0 || interruption_minutes == 0.0) &&
         stretch_min == 1.0 && stretch_max == 1.0 && heart_rate_inflation == 0.0;
}

Series make_instance(const Series& motif, const NoiseSpec& noise, const SimConfig& cfg,
                     std::mt19937_64& rng, double* stretch_out) {
  const Schema& schema = motif.schema();
  const std::size_t p = schema.size();
  noise.validate(p);
  const std::size_t len0 = motif.size();
  if (len0 == 0) throw ValidationError("empty motif");

  const double stretch =
      noise.stretch_min == noise.stretch_max ? noise.stretch_min : uniform(rng, noise.stretch_min, noise.stretch_max);
  if (stretch_out) *stretch_out = stretch;
  const std::size_t len = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::llround(static_cast<double>(len0) * stretch)));
  std::vector<double> values(len * p);
  for (std::size_t r = 0; r < len; ++r) {
    const std::size_t src = std::min(len0 - 1, r * len0 / len);
    std::copy_n(motif.row(src).begin(), p, values.begin() + static_cast<std::ptrdiff_t>(r * p));
  }

  for (std::size_t r = 0; r < len; ++r) {
    for (std::size_t k = 0; k < p; ++k) {
      double& v = values[r * p + k];
      if (schema[k].is_quantitative()) {
        const double a = noise.value_noise.empty() ? 0.0 : noise.value_noise[k];
        if (a > 0.0) v = std::clamp(v + uniform(rng, -a, a), schema[k].min_bound, schema[k].max_bound);
      } else if (noise.qualitative_flip > 0.0 && uniform(rng, 0.0, 1.0) < noise.qualitative_flip) {
        v = std::uniform_int_distribution<int>(1, schema[k].cardinality)(rng);
      }
    }
  }

  const std::size_t burst_max = minutes_to_samples(noise.interruption_minutes, cfg);
  for (std::size_t b = 0; b < noise.interruptions && noise.interruption_minutes > 0.0; ++b) {
    const std::size_t cap = std::min(burst_max, std::max<std::size_t>(1, len / 2));
    const std::size_t blen = std::uniform_int_distribution<std::size_t>(std::max<std::size_t>(1, cap / 2), cap)(rng);
    const std::size_t at = std::uniform_int_distribution<std::size_t>(0, len - blen)(rng);
    Timeline t;
    append_random_walk(t, blen, cfg, rng);
    const Series burst = render(t, cfg, rng);
    for (std::size_t r = 0; r < blen; ++r)
      std::copy_n(burst.row(r).begin(), p, values.begin() + static_cast<std::ptrdiff_t>((at + r) * p));
  }

  if (noise.heart_rate_inflation > 0.0) {
    for (std::size_t k = 0; k < p; ++k) {
      if (schema[k].name != "heart_rate") continue;
      for (std::size_t r = 0; r < len; ++r)
        values[r * p + k] =
            std::min(schema[k].max_bound, values[r * p + k] * (1.0 + noise.heart_rate_inflation));
    }
  }

  const double period = motif.size() > 1 ? motif.timestamps()[1] - motif.timestamps()[0] : cfg.sampling_period;
  std::vector<double> ts(len);
  for (std::size_t r = 0; r < len; ++r) ts[r] = motif.timestamps()[0] + static_cast<double>(r) * period;
  return Series(motif.schema_ptr(), std::move(ts), std::move(values), motif.stage());
}

Injected inject(const Series& base, const std::vector<Series>& instances, int motif_id,
                std::mt19937_64& rng, std::size_t min_gap, const std::vector<double>& inflation,
                const std::vector<double>& stretch) {
  const std::size_t n = base.size();
  const std::size_t p = base.dims();
  std::size_t occupied = 0;
  for (const auto& inst : instances) {
    if (inst.dims() != p) throw ValidationError("instance schema differs from the base series");
    occupied += inst.size();
  }
  const std::size_t gaps = (instances.size() + 1) * min_gap;
  if (occupied + gaps > n)
    throw Error("simulation", "cannot place " + std::to_string(instances.size()) +
                                  " instances without overlap");
  // Uniform placement of the ordered instances: spread the free slack at random.
  const std::size_t slack = n - occupied - gaps;
  std::vector<std::size_t> cuts(instances.size());
  for (auto& c : cuts) c = std::uniform_int_distribution<std::size_t>(0, slack)(rng);
  std::sort(cuts.begin(), cuts.end());

  std::vector<double> values = base.values();
  Injected out;
  out.truth.series_length = n;
  GroundTruthMotif gm;
  gm.motif_id = motif_id;
  std::size_t cursor = 0;
  for (std::size_t k = 0; k < instances.size(); ++k) {
    const std::size_t offset = cursor + min_gap + cuts[k] - (k ? cuts[k - 1] : 0);
    const Series& inst = instances[k];
    std::copy(inst.values().begin(), inst.values().end(),
              values.begin() + static_cast<std::ptrdiff_t>(offset * p));
    GroundTruthInstance gi;
    gi.span = base.span(offset, offset + inst.size() - 1);
    if (k < inflation.size()) gi.heart_rate_inflation = inflation[k];
    if (k < stretch.size()) gi.stretch = stretch[k];
    gm.instances.push_back(gi);
    cursor = offset + inst.size();
  }
  out.truth.motifs.push_back(std::move(gm));
  out.series = Series(base.schema_ptr(), base.timestamps(), std::move(values), base.stage());
  return out;
}

Injected inject(const Series& base, const Series& motif, std::size_t count, const NoiseSpec& noise,
                const SimConfig& cfg, std::mt19937_64& rng, std::size_t min_gap) {
  std::vector<Series> instances;
  std::vector<double> stretch, inflation;
  for (std::size_t k = 0; k < count; ++k) {
    double s = 1.0;
    instances.push_back(make_instance(motif, noise, cfg, rng, &s));
    stretch.push_back(s);
    inflation.push_back(noise.heart_rate_inflation);
  }
  log(LogLevel::Debug, "injecting ", count, " instances");
  return inject(base, instances, 0, rng, min_gap, inflation, stretch);
}

}  // namespace motifminer
