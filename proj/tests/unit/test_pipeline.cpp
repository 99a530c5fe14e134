#include <gtest/gtest.h>

#include "motifminer/pipeline.hpp"

using namespace motifminer;

namespace {

RunConfig small_run(std::uint64_t seed) {
  RunConfig c = RunConfig::defaults();
  c.seed = seed;
  c.simulation.days = 2.0;
  c.plan.instances = 4;
  return c;
}

}  // namespace

TEST(Pipeline, SimulationIsDeterministic) {
  const SimulationResult a = run_simulation(small_run(3));
  const SimulationResult b = run_simulation(small_run(3));
  EXPECT_EQ(a.injected.series.values(), b.injected.series.values());
  EXPECT_EQ(a.motif.source, b.motif.source);
  EXPECT_NE(a.injected.series.values(), run_simulation(small_run(4)).injected.series.values());
  ASSERT_EQ(a.injected.truth.motifs.size(), 1u);
  EXPECT_EQ(a.injected.truth.motifs[0].instances.size(), 4u);
}

TEST(Pipeline, AbnormalInstancesAreAppended) {
  RunConfig c = small_run(5);
  c.plan.abnormal_inflations = {0.2, 0.4};
  const SimulationResult r = run_simulation(c);
  const auto& inst = r.injected.truth.motifs[0].instances;
  ASSERT_EQ(inst.size(), 6u);
  std::size_t inflated = 0;
  for (const auto& i : inst) inflated += i.heart_rate_inflation > 0.0;
  EXPECT_EQ(inflated, 2u);
}

TEST(Pipeline, ZeroNoiseRunFindsThePlantedMotif) {
  const RunConfig c = small_run(3);
  const SimulationResult sim = run_simulation(c);
  const ExtractionResult ex = run_extraction(sim.injected.series, c);
  EXPECT_EQ(ex.motifs.series_length, ex.representation.preprocessed.size());
  const EvalReport r = run_evaluation(ex.motifs, sim.injected.truth);
  EXPECT_GT(r.identification.sensitivity, 0.8);
  EXPECT_GT(r.identification.specificity, 0.9);
  ASSERT_FALSE(ex.motifs.classes.empty());
  EXPECT_GT(r.classification.mean_se, 0.7);
}

TEST(Pipeline, ExtractionIsDeterministicAcrossThreads) {
  RunConfig c = small_run(6);
  const SimulationResult sim = run_simulation(c);
  const ExtractionResult one = run_extraction(sim.injected.series, c);
  c.threads = 4;
  const ExtractionResult four = run_extraction(sim.injected.series, c);
  EXPECT_EQ(one.collisions, four.collisions);
  EXPECT_EQ(one.motifs.tentative_spans(), four.motifs.tentative_spans());
  EXPECT_EQ(one.motifs.class_spans(), four.motifs.class_spans());
}

TEST(Pipeline, ReduceTruthRescalesIndices) {
  GroundTruth gt;
  gt.series_length = 100;
  gt.motifs.push_back({0, {{Span{10, 29, 600, 1800}, 0.0, 1.0}}});
  const GroundTruth r = reduce_truth(gt, 2);
  EXPECT_EQ(r.series_length, 50u);
  EXPECT_EQ(r.motifs[0].instances[0].span.start_index, 5u);
  EXPECT_EQ(r.motifs[0].instances[0].span.end_index, 14u);
  EXPECT_EQ(reduce_truth(gt, 1).motifs[0].instances[0].span, gt.motifs[0].instances[0].span);
}
