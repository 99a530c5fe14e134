#include "motifminer/pipeline.hpp"

#include "motifminer/log.hpp"

namespace motifminer {

SimulationResult run_simulation(const RunConfig& cfg) {
  cfg.validate();
  SimConfig base_cfg = cfg.simulation;
  base_cfg.rng_seed = cfg.stage_seed("background");
  SimConfig habit_cfg = cfg.simulation;
  habit_cfg.rng_seed = cfg.stage_seed("habits");
  habit_cfg.days = cfg.plan.habit_days;

  SimulationResult out{generate_nonpattern(base_cfg), generate_habits(habit_cfg), {}, {}};
  std::mt19937_64 rng(cfg.stage_seed("motif"));
  RepresentationConfig rep = cfg.representation;
  rep.kmeans_seed = cfg.stage_seed("kmeans");
  const auto habit_rep = represent(out.habits, rep);
  out.motif = pick_motif(out.habits, rep, habit_rep.preprocessed.schema(), rng,
                         cfg.plan.motif_min_minutes, cfg.plan.motif_max_minutes,
                         cfg.plan.motif_min_symbols);

  std::mt19937_64 noise_rng(cfg.stage_seed("noise"));
  std::vector<Series> instances;
  std::vector<double> inflation, stretch;
  const auto add = [&](const NoiseSpec& noise) {
    double s = 1.0;
    instances.push_back(make_instance(out.motif.motif, noise, cfg.simulation, noise_rng, &s));
    inflation.push_back(noise.heart_rate_inflation);
    stretch.push_back(s);
  };
  for (std::size_t k = 0; k < cfg.plan.instances; ++k) add(cfg.noise);
  for (double rate : cfg.plan.abnormal_inflations) {
    NoiseSpec abnormal = cfg.noise;
    abnormal.heart_rate_inflation = rate;
    add(abnormal);
  }
  std::mt19937_64 place_rng(cfg.stage_seed("placement"));
  out.injected = inject(out.background, instances, 0, place_rng, cfg.plan.min_gap, inflation, stretch);
  return out;
}

MiningResult run_mining(const Series& pre, const SymbolicSeries& sym, const RunConfig& cfg) {
  cfg.validate();
  if (pre.stage() != Stage::Normalized)
    throw ValidationError("mining needs the normalized preprocessed series");
  const LcssParams lcss = cfg.lcss_params(pre.schema());
  MiningResult out;
  MotifSet& set = out.motifs;
  set.schema = pre.schema_ptr();
  set.series_length = pre.size();
  set.reduction_factor = cfg.representation.reduction_factor;
  if (sym.size() < cfg.projection.w) {
    log(LogLevel::Warn, "only ", sym.size(), " symbols; nothing to project");
    return out;
  }

  ProjectionConfig proj = cfg.projection;
  proj.rng_seed = cfg.stage_seed("projection");
  const WindowMatrix win(sym, proj.w);
  out.collisions = project(win, proj, cfg.threads);
  log(LogLevel::Info, sym.size(), " symbols, ", out.collisions.nonzero(), " non-zero collision cells");

  set.pairs = examine(out.collisions, win, sym, pre, cfg.mining, lcss);
  set.tentative = extract_tentative_motifs(set.pairs, cfg.mining);
  log(LogLevel::Info, set.pairs.size(), " grown pairs, ", set.tentative.size(), " tentative motifs");

  auto clustered = cluster(set.tentative, pre, lcss, cfg.clustering, cfg.threads);
  set.classes = std::move(clustered.classes);
  set.trace = std::move(clustered.linkage.trace);
  return out;
}

ExtractionResult run_extraction(const Series& raw, const RunConfig& cfg,
                                const std::optional<Schema>& fixed_schema) {
  cfg.validate();
  RepresentationConfig rep = cfg.representation;
  rep.kmeans_seed = cfg.stage_seed("kmeans");
  ExtractionResult out{represent(raw, rep, fixed_schema), {}, {}};
  auto mined = run_mining(out.representation.preprocessed, out.representation.symbolic, cfg);
  out.collisions = std::move(mined.collisions);
  out.motifs = std::move(mined.motifs);
  return out;
}

GroundTruth reduce_truth(const GroundTruth& gt, std::size_t factor) {
  if (factor <= 1) return gt;
  GroundTruth out = gt;
  out.series_length = (gt.series_length + factor - 1) / factor;
  for (auto& m : out.motifs)
    for (auto& i : m.instances) {
      i.span.start_index /= factor;
      i.span.end_index /= factor;
    }
  return out;
}

EvalReport run_evaluation(const MotifSet& motifs, const GroundTruth& gt) {
  const GroundTruth reduced = reduce_truth(gt, motifs.reduction_factor);
  return evaluate(reduced, motifs.tentative_spans(), motifs.class_spans(), motifs.series_length);
}

}  // namespace motifminer
