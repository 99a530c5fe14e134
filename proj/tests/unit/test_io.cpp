#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "motifminer/json_io.hpp"
#include "motifminer/pipeline.hpp"
#include "motifminer/series_io.hpp"

using namespace motifminer;

namespace {

Series small_raw() {
  std::vector<double> ts, v;
  for (int i = 0; i < 6; ++i) {
    ts.push_back(60.0 * i);
    v.insert(v.end(), {1.0 + i % 3, 1.0 + i % 2, 0.1 * i + 1.0 / 3.0, 70.0 + i * 0.7});
  }
  return Series(make_schema(monitoring_schema()), ts, v, Stage::Raw);
}

}  // namespace

TEST(FormatDouble, RoundTripsExactly) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int i = 0; i < 2000; ++i) {
    const double x = u(rng) / (1 + i);
    EXPECT_EQ(std::stod(format_double(x)), x);
  }
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(2.0), "2");
}

TEST(SeriesCsv, RoundTrip) {
  const Series s = small_raw();
  std::stringstream buf;
  write_series_csv(buf, s);
  const Series t = read_series_csv(buf, s.schema_ptr());
  EXPECT_EQ(t.timestamps(), s.timestamps());
  EXPECT_EQ(t.values(), s.values());
}

TEST(SeriesCsv, ColumnsMatchedByName) {
  std::stringstream in("timestamp,heart_rate,postures,activity,moves\n0,70,2,1.5,3\n60,71,1,1.25,3\n");
  const Series s = read_series_csv(in, make_schema(monitoring_schema()));
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s.at(0, 0), 3.0);
  EXPECT_EQ(s.at(0, 1), 2.0);
  EXPECT_EQ(s.at(1, 2), 1.25);
  EXPECT_EQ(s.at(1, 3), 71.0);
}

TEST(SeriesCsv, MalformedInputRaisesIoError) {
  const auto schema = make_schema(monitoring_schema());
  std::stringstream missing("timestamp,moves,postures,activity\n0,1,1,1\n");
  EXPECT_THROW(read_series_csv(missing, schema), IoError);
  std::stringstream garbage("timestamp,moves,postures,activity,heart_rate\n0,1,x,1,70\n");
  EXPECT_THROW(read_series_csv(garbage, schema), IoError);
  std::stringstream ragged("timestamp,moves,postures,activity,heart_rate\n0,1,1,1\n");
  EXPECT_THROW(read_series_csv(ragged, schema), IoError);
}

TEST(SeriesCsv, InvalidCellsRaiseValidationError) {
  std::stringstream in("timestamp,moves,postures,activity,heart_rate\n0,9,1,1,70\n");
  EXPECT_THROW(read_series_csv(in, make_schema(monitoring_schema())), ValidationError);
}

TEST(SchemaJson, RoundTripWithBreakpointsAndLabels) {
  Schema s = monitoring_schema();
  s[2].breakpoints = {0.1, 0.35, 0.7};
  s[3].breakpoints = {0.2, 0.4, 0.6};
  const Schema t = schema_from_json(schema_to_json(s));
  ASSERT_EQ(t.size(), s.size());
  for (std::size_t k = 0; k < s.size(); ++k) {
    EXPECT_EQ(t[k].name, s[k].name);
    EXPECT_EQ(t[k].kind, s[k].kind);
    EXPECT_EQ(t[k].breakpoints, s[k].breakpoints);
    EXPECT_EQ(t[k].cardinality, s[k].cardinality);
    EXPECT_EQ(t[k].labels, s[k].labels);
    EXPECT_EQ(t[k].min_bound, s[k].min_bound);
    EXPECT_EQ(t[k].max_bound, s[k].max_bound);
  }
  EXPECT_EQ(schema_to_json(t), schema_to_json(s));
}

TEST(SchemaJson, RejectsMalformed) {
  EXPECT_THROW(schema_from_json("{"), Error);
  EXPECT_THROW(schema_from_json(R"({"parameters":[{"name":"x","kind":"weird"}]})"), Error);
}

TEST(GroundTruthJson, RoundTrip) {
  GroundTruth gt;
  gt.series_length = 500;
  gt.motifs.push_back({0, {{{10, 40, 600, 2460}, 0.0, 1.0}, {{100, 150, 6000, 9060}, 0.3, 1.2}}});
  const std::string text = ground_truth_to_json(gt);
  const GroundTruth back = ground_truth_from_json(text);
  EXPECT_EQ(back.series_length, 500u);
  ASSERT_EQ(back.motifs.size(), 1u);
  ASSERT_EQ(back.motifs[0].instances.size(), 2u);
  EXPECT_EQ(back.motifs[0].instances[1].span, gt.motifs[0].instances[1].span);
  EXPECT_EQ(back.motifs[0].instances[1].heart_rate_inflation, 0.3);
  EXPECT_EQ(ground_truth_to_json(back), text);
}

TEST(PipelineJson, SymbolicAndMotifSetRoundTrip) {
  RunConfig cfg = RunConfig::defaults();
  cfg.seed = 3;
  cfg.simulation.days = 2.0;
  cfg.plan.instances = 4;
  const SimulationResult sim = run_simulation(cfg);
  const ExtractionResult ex = run_extraction(sim.injected.series, cfg);

  const std::string sym_text = symbolic_to_json(ex.representation.symbolic);
  const SymbolicSeries sym = symbolic_from_json(sym_text);
  ASSERT_EQ(sym.size(), ex.representation.symbolic.size());
  for (std::size_t i = 0; i < sym.size(); ++i) {
    EXPECT_EQ(sym[i].codes, ex.representation.symbolic[i].codes);
    EXPECT_EQ(sym[i].source, ex.representation.symbolic[i].source);
    EXPECT_EQ(sym[i].duration, ex.representation.symbolic[i].duration);
  }
  EXPECT_EQ(symbolic_to_json(sym), sym_text);

  const std::string motif_text = motif_set_to_json(ex.motifs);
  const MotifSet back = motif_set_from_json(motif_text);
  EXPECT_EQ(back.tentative_spans(), ex.motifs.tentative_spans());
  EXPECT_EQ(back.class_spans(), ex.motifs.class_spans());
  EXPECT_EQ(back.series_length, ex.motifs.series_length);
  EXPECT_EQ(motif_set_to_json(back), motif_text);
}

TEST(CollisionsCsv, LargestCountsFirst) {
  CollisionMatrix m(10, 2);
  m.increment(0, 5, 3);
  m.increment(1, 9, 7);
  m.increment(2, 6, 3);
  EXPECT_EQ(collisions_to_csv(m), "i,j,count\n1,9,7\n0,5,3\n2,6,3\n");
}
