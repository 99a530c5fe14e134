#include "motifminer/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace motifminer {

using nlohmann::json;

namespace {

// Reads the keys of one JSON object and rejects any it did not consume.
class Section {
 public:
  Section(const json& j, std::string name) : j_(j), name_(std::move(name)) {
    if (!j_.is_object()) throw ConfigError("'" + name_ + "' must be an object");
  }
  ~Section() = default;

  template <class T>
  void get(const char* key, T& out) {
    used_.insert(key);
    if (!j_.contains(key)) return;
    try {
      out = j_.at(key).get<T>();
    } catch (const json::exception& e) {
      throw ConfigError("bad value for '" + name_ + "." + key + "': " + e.what());
    }
  }
  const json* child(const char* key) {
    used_.insert(key);
    return j_.contains(key) ? &j_.at(key) : nullptr;
  }
  void finish() const {
    for (const auto& [k, v] : j_.items())
      if (!used_.count(k)) throw ConfigError("unknown key '" + name_ + "." + k + "'");
  }

 private:
  const json& j_;
  std::string name_;
  std::set<std::string> used_;
};

std::string resolve(const std::string& p, const std::filesystem::path& base) {
  if (p.empty() || base.empty()) return p;
  const std::filesystem::path path(p);
  return path.is_absolute() ? p : (base / path).lexically_normal().string();
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

RunConfig RunConfig::defaults() {
  RunConfig c;
  c.representation.filter_len = 1;
  c.representation.reduction_factor = 1;
  c.representation.k_per_param = 4;
  c.representation.aggregation_threshold = 0.0;
  c.lcss = {0.06, 25, true};
  c.projection.w = 4;
  c.projection.w_mask = 1;
  c.projection.p_mask = 1;
  c.projection.proj = 40;
  c.mining.collision_threshold = 10;
  c.mining.distance_threshold = 0.3;
  c.mining.neighbourhood_radius = 5;
  c.mining.min_motif_duration = 25.0 * 60.0;
  c.clustering.distance_threshold = 0.45;
  c.clustering.min_class_size = 3;
  c.simulation.days = 7.0;
  c.noise.value_noise = {0.0, 0.0, 0.0, 0.0};
  return c;
}

LcssParams RunConfig::lcss_params(const Schema& schema) const {
  return LcssParams::for_schema(schema, lcss.epsilon, lcss.delta, lcss.end_anchored);
}

void RunConfig::validate() const {
  if (threads == 0) throw ConfigError("threads must be at least 1");
  try {
    representation.validate();
    const Schema schema = simulator_schema(simulation);
    lcss_params(schema).validate(schema);
    projection.validate(schema.size());
    mining.validate(projection.proj);
    clustering.validate();
    simulation.validate();
    noise.validate(schema.size());
  } catch (const ValidationError& e) {
    throw ConfigError(e.what());
  }
  if (plan.motif_min_minutes <= 0.0 || plan.motif_min_minutes > plan.motif_max_minutes)
    throw ConfigError("invalid motif duration range");
  if (plan.habit_days <= 0.0) throw ConfigError("habit_days must be positive");
  for (double r : plan.abnormal_inflations)
    if (r < 0.0) throw ConfigError("negative abnormal inflation");
}

std::uint64_t RunConfig::stage_seed(const std::string& stage) const {
  if (!seed) throw ConfigError("no seed given (set \"seed\" in the config or pass --seed)");
  std::uint64_t h = splitmix(*seed);
  for (unsigned char c : stage) h = splitmix(h ^ c);
  return h;
}

RunConfig parse_config(const std::string& text, const std::filesystem::path& base_dir) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  RunConfig c = RunConfig::defaults();
  Section top(root, "config");
  if (const json* s = top.child("seed"); s && !s->is_null()) {
    if (!s->is_number_unsigned()) throw ConfigError("'seed' must be a non-negative integer");
    c.seed = s->get<std::uint64_t>();
  }
  top.get("threads", c.threads);
  if (const json* p = top.child("paths")) {
    Section s(*p, "paths");
    s.get("schema", c.schema_path);
    s.get("input", c.input_path);
    s.get("motifs", c.motifs_path);
    s.get("truth", c.truth_path);
    s.finish();
  }
  if (const json* p = top.child("representation")) {
    Section s(*p, "representation");
    s.get("filter_len", c.representation.filter_len);
    s.get("reduction_factor", c.representation.reduction_factor);
    s.get("k_per_param", c.representation.k_per_param);
    s.get("aggregation_threshold", c.representation.aggregation_threshold);
    s.finish();
  }
  if (const json* p = top.child("lcss")) {
    Section s(*p, "lcss");
    s.get("epsilon", c.lcss.epsilon);
    s.get("delta", c.lcss.delta);
    s.get("end_anchored", c.lcss.end_anchored);
    s.finish();
  }
  if (const json* p = top.child("projection")) {
    Section s(*p, "projection");
    s.get("w", c.projection.w);
    s.get("w_mask", c.projection.w_mask);
    s.get("p_mask", c.projection.p_mask);
    s.get("proj", c.projection.proj);
    s.finish();
  }
  if (const json* p = top.child("mining")) {
    Section s(*p, "mining");
    s.get("collision_threshold", c.mining.collision_threshold);
    s.get("distance_threshold", c.mining.distance_threshold);
    s.get("neighbourhood_radius", c.mining.neighbourhood_radius);
    double minutes = c.mining.min_motif_duration / 60.0;
    s.get("min_motif_minutes", minutes);
    c.mining.min_motif_duration = minutes * 60.0;
    s.get("min_symbols", c.mining.min_symbols);
    s.get("beam_width", c.mining.beam_width);
    s.get("acceptable_removal_rate", c.mining.acceptable_removal_rate);
    s.finish();
  }
  if (const json* p = top.child("clustering")) {
    Section s(*p, "clustering");
    s.get("distance_threshold", c.clustering.distance_threshold);
    s.get("min_class_size", c.clustering.min_class_size);
    s.finish();
  }
  if (const json* p = top.child("simulation")) {
    Section s(*p, "simulation");
    s.get("days", c.simulation.days);
    s.get("sampling_period", c.simulation.sampling_period);
    s.get("rooms", c.simulation.rooms);
    s.get("room_dwell_min", c.simulation.room_dwell_min);
    s.get("room_dwell_max", c.simulation.room_dwell_max);
    s.get("posture_dwell_min", c.simulation.posture_dwell_min);
    s.get("posture_dwell_max", c.simulation.posture_dwell_max);
    s.get("posture_given_room", c.simulation.posture_given_room);
    s.get("activity_mean", c.simulation.activity_mean);
    s.get("activity_sd", c.simulation.activity_sd);
    s.get("activity_ar", c.simulation.activity_ar);
    s.get("hr_intercept", c.simulation.hr_intercept);
    s.get("hr_slope", c.simulation.hr_slope);
    s.get("hr_noise_sd", c.simulation.hr_noise_sd);
    s.finish();
  }
  if (const json* p = top.child("noise")) {
    Section s(*p, "noise");
    s.get("value_noise", c.noise.value_noise);
    s.get("qualitative_flip", c.noise.qualitative_flip);
    s.get("interruptions", c.noise.interruptions);
    s.get("interruption_minutes", c.noise.interruption_minutes);
    s.get("stretch_min", c.noise.stretch_min);
    s.get("stretch_max", c.noise.stretch_max);
    s.get("heart_rate_inflation", c.noise.heart_rate_inflation);
    s.finish();
  }
  if (const json* p = top.child("plan")) {
    Section s(*p, "plan");
    s.get("habit_days", c.plan.habit_days);
    s.get("motif_min_minutes", c.plan.motif_min_minutes);
    s.get("motif_max_minutes", c.plan.motif_max_minutes);
    s.get("motif_min_symbols", c.plan.motif_min_symbols);
    s.get("instances", c.plan.instances);
    s.get("abnormal_inflations", c.plan.abnormal_inflations);
    s.get("min_gap", c.plan.min_gap);
    s.finish();
  }
  top.finish();

  c.schema_path = resolve(c.schema_path, base_dir);
  c.input_path = resolve(c.input_path, base_dir);
  c.motifs_path = resolve(c.motifs_path, base_dir);
  c.truth_path = resolve(c.truth_path, base_dir);
  // The simulator schema's room count follows the posture table.
  if (c.simulation.posture_given_room.size() != static_cast<std::size_t>(c.simulation.rooms))
    throw ConfigError("simulation.posture_given_room needs one row per room");
  return c;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path.string() + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  RunConfig c = parse_config(ss.str(), path.parent_path());
  for (const auto& p : {c.schema_path, c.input_path, c.motifs_path, c.truth_path})
    if (!p.empty() && !std::filesystem::exists(p))
      throw ConfigError("referenced file '" + p + "' does not exist");
  return c;
}

std::string config_to_json(const RunConfig& c) {
  json j;
  j["seed"] = c.seed ? json(*c.seed) : json(nullptr);
  j["threads"] = c.threads;
  j["paths"] = {{"schema", c.schema_path},
                {"input", c.input_path},
                {"motifs", c.motifs_path},
                {"truth", c.truth_path}};
  j["representation"] = {{"filter_len", c.representation.filter_len},
                         {"reduction_factor", c.representation.reduction_factor},
                         {"k_per_param", c.representation.k_per_param},
                         {"aggregation_threshold", c.representation.aggregation_threshold}};
  j["lcss"] = {{"epsilon", c.lcss.epsilon},
               {"delta", c.lcss.delta},
               {"end_anchored", c.lcss.end_anchored}};
  j["projection"] = {{"w", c.projection.w},
                     {"w_mask", c.projection.w_mask},
                     {"p_mask", c.projection.p_mask},
                     {"proj", c.projection.proj}};
  j["mining"] = {{"collision_threshold", c.mining.collision_threshold},
                 {"distance_threshold", c.mining.distance_threshold},
                 {"neighbourhood_radius", c.mining.neighbourhood_radius},
                 {"min_motif_minutes", c.mining.min_motif_duration / 60.0},
                 {"min_symbols", c.mining.min_symbols},
                 {"beam_width", c.mining.beam_width},
                 {"acceptable_removal_rate", c.mining.acceptable_removal_rate}};
  j["clustering"] = {{"distance_threshold", c.clustering.distance_threshold},
                     {"min_class_size", c.clustering.min_class_size}};
  const auto& s = c.simulation;
  j["simulation"] = {{"days", s.days},
                     {"sampling_period", s.sampling_period},
                     {"rooms", s.rooms},
                     {"room_dwell_min", s.room_dwell_min},
                     {"room_dwell_max", s.room_dwell_max},
                     {"posture_dwell_min", s.posture_dwell_min},
                     {"posture_dwell_max", s.posture_dwell_max},
                     {"posture_given_room", s.posture_given_room},
                     {"activity_mean", s.activity_mean},
                     {"activity_sd", s.activity_sd},
                     {"activity_ar", s.activity_ar},
                     {"hr_intercept", s.hr_intercept},
                     {"hr_slope", s.hr_slope},
                     {"hr_noise_sd", s.hr_noise_sd}};
  j["noise"] = {{"value_noise", c.noise.value_noise},
                {"qualitative_flip", c.noise.qualitative_flip},
                {"interruptions", c.noise.interruptions},
                {"interruption_minutes", c.noise.interruption_minutes},
                {"stretch_min", c.noise.stretch_min},
                {"stretch_max", c.noise.stretch_max},
                {"heart_rate_inflation", c.noise.heart_rate_inflation}};
  j["plan"] = {{"habit_days", c.plan.habit_days},
               {"motif_min_minutes", c.plan.motif_min_minutes},
               {"motif_max_minutes", c.plan.motif_max_minutes},
               {"motif_min_symbols", c.plan.motif_min_symbols},
               {"instances", c.plan.instances},
               {"abnormal_inflations", c.plan.abnormal_inflations},
               {"min_gap", c.plan.min_gap}};
  return j.dump(2);
}

}  // namespace motifminer
