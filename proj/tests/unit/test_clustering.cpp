#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "motifminer/clustering.hpp"
#include "oracles.hpp"

using namespace motifminer;

namespace {

DistanceMatrix matrix(const std::vector<std::vector<double>>& rows) {
  DistanceMatrix d(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i + 1; j < rows.size(); ++j) d.set(i, j, rows[i][j]);
  return d;
}

double max_cross(const DistanceMatrix& d, const std::vector<std::size_t>& a,
                 const std::vector<std::size_t>& b) {
  double m = 0.0;
  for (std::size_t i : a)
    for (std::size_t j : b) m = std::max(m, d(i, j));
  return m;
}

// Random normalized series with a 20-row block copied at each offset.
Series with_copies(const std::vector<std::size_t>& offsets, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto schema = make_schema(oracle::mixed_schema());
  const Series base = oracle::random_series(schema, n, rng);
  std::vector<double> v = base.values();
  const std::size_t p = base.dims();
  for (std::size_t o : offsets)
    std::copy_n(base.values().begin() + static_cast<std::ptrdiff_t>(offsets[0] * p), 20 * p,
                v.begin() + static_cast<std::ptrdiff_t>(o * p));
  return Series(schema, base.timestamps(), v, Stage::Normalized);
}

TentativeMotif motif_at(const Series& s, std::size_t start, std::size_t len) {
  TentativeMotif m;
  m.span = s.span(start, start + len - 1);
  m.symbol_span = m.span;
  return m;
}

}  // namespace

TEST(CompleteLinkage, TwoClearGroups) {
  // a, b, c close together; d, e close together; far across.
  const DistanceMatrix d = matrix({{0, 0.1, 0.3, 0.8, 0.9},
                                   {0, 0, 0.2, 0.7, 0.8},
                                   {0, 0, 0, 0.6, 0.7},
                                   {0, 0, 0, 0, 0.25},
                                   {0, 0, 0, 0, 0}});
  const Linkage l = complete_linkage(d, 0.4);
  ASSERT_EQ(l.classes.size(), 2u);
  EXPECT_EQ(l.classes[0], std::vector<std::size_t>({0, 1, 2}));
  EXPECT_EQ(l.classes[1], std::vector<std::size_t>({3, 4}));
  ASSERT_EQ(l.trace.size(), 3u);
  EXPECT_EQ(l.trace[0].left, 0u);
  EXPECT_EQ(l.trace[0].right, 1u);
  EXPECT_DOUBLE_EQ(l.trace[0].distance, 0.1);
  EXPECT_DOUBLE_EQ(l.trace[2].distance, 0.3);  // complete, not single, linkage
}

TEST(CompleteLinkage, NothingMergesAboveThreshold) {
  const DistanceMatrix d = matrix({{0, 0.9, 0.8}, {0, 0, 0.7}, {0, 0, 0}});
  const Linkage l = complete_linkage(d, 0.5);
  EXPECT_EQ(l.classes.size(), 3u);
  EXPECT_TRUE(l.trace.empty());
}

TEST(CompleteLinkage, ClassesAreTightAndMaximal) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 12;
    DistanceMatrix d(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) d.set(i, j, u(rng));
    const double th = 0.45;
    const Linkage l = complete_linkage(d, th);
    std::vector<std::size_t> seen;
    for (std::size_t a = 0; a < l.classes.size(); ++a) {
      EXPECT_LE(max_cross(d, l.classes[a], l.classes[a]), th);
      for (std::size_t b = a + 1; b < l.classes.size(); ++b)
        EXPECT_GT(max_cross(d, l.classes[a], l.classes[b]), th);
      seen.insert(seen.end(), l.classes[a].begin(), l.classes[a].end());
    }
    std::sort(seen.begin(), seen.end());
    ASSERT_EQ(seen.size(), n);
    for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(seen[i], i);
  }
}

TEST(ReferenceMember, ClosestToMeanDuration) {
  const auto s = [](double a, double b) { return Span{0, 1, a, b}; };
  EXPECT_EQ(reference_member({s(0, 10), s(0, 20), s(0, 30)}), 1u);
  EXPECT_EQ(reference_member({s(0, 10), s(0, 30)}), 0u);  // tie: earliest
  EXPECT_EQ(reference_member({s(0, 5)}), 0u);
}

TEST(Representative, IdenticalMembersReproduceTheReference) {
  const Series pre = with_copies({10, 60, 110}, 150, 2);
  const auto lcss = LcssParams::for_schema(pre.schema(), 0.1, 5);
  const std::vector<Span> members = {pre.span(10, 29), pre.span(60, 79), pre.span(110, 129)};
  std::size_t ref = 99;
  const Series rep = representative(pre, members, lcss, &ref);
  EXPECT_EQ(ref, 0u);
  const Series expected = slice(pre, members[0]);
  ASSERT_EQ(rep.values().size(), expected.values().size());
  // Quantitative cells are means of equal values, exact up to rounding.
  for (std::size_t i = 0; i < rep.values().size(); ++i) EXPECT_NEAR(rep.values()[i], expected.values()[i], 1e-15);
  EXPECT_EQ(rep.timestamps(), expected.timestamps());
}

TEST(Representative, SingletonIsItsOwnSlice) {
  const Series pre = with_copies({10}, 60, 3);
  const auto lcss = LcssParams::for_schema(pre.schema(), 0.1, 5);
  const Series rep = representative(pre, {pre.span(5, 24)}, lcss);
  EXPECT_EQ(rep.values(), slice(pre, 5, 24).values());
}

TEST(Cluster, DuplicatesFormOneClass) {
  const Series pre = with_copies({10, 60, 110}, 200, 4);
  const auto lcss = LcssParams::for_schema(pre.schema(), 0.1, 5);
  const std::vector<TentativeMotif> motifs = {motif_at(pre, 10, 20), motif_at(pre, 60, 20),
                                              motif_at(pre, 110, 20), motif_at(pre, 160, 20)};
  ClusteringConfig cfg;
  cfg.distance_threshold = 0.3;
  cfg.min_class_size = 2;
  const ClusteringResult r = cluster(motifs, pre, lcss, cfg);
  ASSERT_EQ(r.classes.size(), 1u);
  EXPECT_EQ(r.classes[0].member_ids, std::vector<std::size_t>({0, 1, 2}));
  EXPECT_EQ(r.distances(0, 1), 0.0);
  EXPECT_GT(r.distances(0, 3), 0.3);

  cfg.min_class_size = 4;
  EXPECT_TRUE(cluster(motifs, pre, lcss, cfg).classes.empty());
}

TEST(Cluster, DistancesDoNotDependOnThreads) {
  const Series pre = with_copies({10, 60, 110}, 200, 5);
  const auto lcss = LcssParams::for_schema(pre.schema(), 0.1, 5);
  const std::vector<TentativeMotif> motifs = {motif_at(pre, 10, 20), motif_at(pre, 40, 15),
                                              motif_at(pre, 60, 20), motif_at(pre, 150, 30)};
  const DistanceMatrix a = motif_distances(motifs, pre, lcss, 1);
  const DistanceMatrix b = motif_distances(motifs, pre, lcss, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(a(i, j), b(i, j));
}

TEST(ClusteringConfig, Validation) {
  ClusteringConfig c;
  EXPECT_NO_THROW(c.validate());
  c.distance_threshold = 0.0;
  EXPECT_THROW(c.validate(), ValidationError);
  c = {};
  c.min_class_size = 0;
  EXPECT_THROW(c.validate(), ValidationError);
}
