#pragma once

#include <optional>

#include "motifminer/clustering.hpp"
#include "motifminer/config.hpp"
#include "motifminer/evaluation.hpp"
#include "motifminer/json_io.hpp"
#include "motifminer/mining.hpp"
#include "motifminer/representation.hpp"
#include "motifminer/simulator.hpp"

namespace motifminer {

/// Simulated data set: background, habit pool, picked motif and the
/// background with the motif's instances injected.
struct SimulationResult {
  Series background;
  Series habits;
  MotifPick motif;
  Injected injected;
};

/// Runs the simulation plan of `cfg` with seeds derived from `cfg.seed`.
SimulationResult run_simulation(const RunConfig& cfg);

struct MiningResult {
  CollisionMatrix collisions;
  MotifSet motifs;
};

/// Projections, examination, tentative motifs and clustering over an
/// existing representation.
MiningResult run_mining(const Series& preprocessed, const SymbolicSeries& sym,
                        const RunConfig& cfg);

struct ExtractionResult {
  Representation representation;
  CollisionMatrix collisions;
  MotifSet motifs;
};

/// Representation followed by `run_mining`.
/// `fixed_schema` supplies breakpoints instead of fitting them.
ExtractionResult run_extraction(const Series& raw, const RunConfig& cfg,
                                const std::optional<Schema>& fixed_schema = std::nullopt);

/// Ground truth rescaled to the rows of a series reduced by `factor`.
GroundTruth reduce_truth(const GroundTruth& gt, std::size_t factor);

EvalReport run_evaluation(const MotifSet& motifs, const GroundTruth& gt);

}  // namespace motifminer
