#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "motifminer/config.hpp"

using namespace motifminer;

TEST(Config, DefaultsValidate) {
  const RunConfig c = RunConfig::defaults();
  EXPECT_NO_THROW(c.validate());
  EXPECT_FALSE(c.seed.has_value());
  EXPECT_THROW(c.stage_seed("mining"), ConfigError);
}

TEST(Config, MissingKeysKeepDefaults) {
  const RunConfig c = parse_config(R"({"seed": 7, "lcss": {"delta": 11}})");
  const RunConfig d = RunConfig::defaults();
  ASSERT_TRUE(c.seed.has_value());
  EXPECT_EQ(*c.seed, 7u);
  EXPECT_EQ(c.lcss.delta, 11u);
  EXPECT_EQ(c.lcss.epsilon, d.lcss.epsilon);
  EXPECT_EQ(c.projection.proj, d.projection.proj);
  EXPECT_EQ(c.mining.min_motif_duration, d.mining.min_motif_duration);
}

TEST(Config, UnknownKeysAreErrors) {
  EXPECT_THROW(parse_config(R"({"seed": 1, "colour": 2})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"mining": {"threshold": 2}})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"seed": -3})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"lcss": {"delta": "wide"}})"), ConfigError);
  EXPECT_THROW(parse_config("{not json"), ConfigError);
}

TEST(Config, MinutesAreConvertedToSeconds) {
  const RunConfig c = parse_config(R"({"mining": {"min_motif_minutes": 12}})");
  EXPECT_DOUBLE_EQ(c.mining.min_motif_duration, 720.0);
}

TEST(Config, StageSeedsAreDistinctAndStable) {
  const RunConfig c = parse_config(R"({"seed": 42})");
  EXPECT_EQ(c.stage_seed("projection"), c.stage_seed("projection"));
  EXPECT_NE(c.stage_seed("projection"), c.stage_seed("simulation"));
  EXPECT_NE(c.stage_seed("projection"), parse_config(R"({"seed": 43})").stage_seed("projection"));
}

TEST(Config, InvalidSectionsFailValidation) {
  EXPECT_THROW(parse_config(R"({"projection": {"w_mask": 4}})").validate(), ConfigError);
  EXPECT_THROW(parse_config(R"({"mining": {"collision_threshold": 100}})").validate(), ConfigError);
  EXPECT_THROW(parse_config(R"({"clustering": {"distance_threshold": 1.5}})").validate(), ConfigError);
}

TEST(Config, JsonRoundTrip) {
  const RunConfig c = parse_config(
      R"({"seed": 9, "threads": 3, "lcss": {"epsilon": 0.1}, "plan": {"abnormal_inflations": [0.1, 0.3]},
          "noise": {"value_noise": [0, 0, 0.5, 2.0]}})");
  const std::string text = config_to_json(c);
  const RunConfig back = parse_config(text);
  EXPECT_EQ(config_to_json(back), text);
  EXPECT_EQ(back.threads, 3u);
  EXPECT_EQ(back.plan.abnormal_inflations, std::vector<double>({0.1, 0.3}));
  EXPECT_EQ(back.noise.value_noise, std::vector<double>({0, 0, 0.5, 2.0}));
}

TEST(Config, PathsResolveAgainstTheConfigDirectory) {
  const auto dir = std::filesystem::temp_directory_path() / "motifminer_config_test";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "data.csv") << "t\n";
  std::ofstream(dir / "run.json") << R"({"paths": {"input": "data.csv"}})";
  const RunConfig c = load_config(dir / "run.json");
  EXPECT_EQ(std::filesystem::path(c.input_path), dir / "data.csv");

  std::ofstream(dir / "bad.json") << R"({"paths": {"input": "missing.csv"}})";
  EXPECT_THROW(load_config(dir / "bad.json"), ConfigError);
  EXPECT_THROW(load_config(dir / "absent.json"), ConfigError);
  std::filesystem::remove_all(dir);
}
