#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "motifminer/distances.hpp"
#include "motifminer/json_io.hpp"
#include "motifminer/log.hpp"
#include "motifminer/pipeline.hpp"
#include "motifminer/series_io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace motifminer;

namespace {

struct Options {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::string out_dir = "out";
  std::optional<std::size_t> threads;
  bool dump_collisions = false;

  std::string input, schema, motifs, truth, symbolic, preprocessed;
  std::string file_a, file_b;
};

class Run {
 public:
  Run(const Options& opt, std::string command) : opt_(opt), command_(std::move(command)) {
    cfg_ = opt.config.empty() ? RunConfig::defaults() : load_config(opt.config);
    if (opt.seed) cfg_.seed = opt.seed;
    if (opt.threads) cfg_.threads = *opt.threads;
    const auto pick = [](const std::string& flag, std::string& field) {
      if (!flag.empty()) field = flag;
    };
    pick(opt.input, cfg_.input_path);
    pick(opt.schema, cfg_.schema_path);
    pick(opt.motifs, cfg_.motifs_path);
    pick(opt.truth, cfg_.truth_path);
    if (!cfg_.seed) throw ConfigError("no seed given; set \"seed\" in the config or pass --seed");
    cfg_.validate();
  }

  const RunConfig& cfg() const { return cfg_; }

  SchemaPtr schema() const {
    if (cfg_.schema_path.empty()) return make_schema(simulator_schema(cfg_.simulation));
    return make_schema(read_schema(cfg_.schema_path));
  }

  const std::string& require(const std::string& path, const char* what) const {
    if (path.empty()) throw ConfigError(std::string("missing ") + what + " path");
    return path;
  }

  fs::path out(const std::string& name) {
    const fs::path p = fs::path(opt_.out_dir) / name;
    outputs_.push_back(p.string());
    return p;
  }

  void text(const std::string& name, const std::string& content) {
    write_text_file(out(name), content);
  }

  void csv(const std::string& name, const Series& s) {
    const fs::path p = out(name);
    fs::create_directories(p.parent_path());
    write_series_csv(p, s);
  }

  void finish() {
    json m;
    m["command"] = command_;
    m["version"] = MOTIFMINER_VERSION;
    m["config"] = json::parse(config_to_json(cfg_));
    m["outputs"] = outputs_;
    write_text_file(fs::path(opt_.out_dir) / "manifest.json", m.dump(2));
  }

 private:
  const Options& opt_;
  std::string command_;
  RunConfig cfg_;
  std::vector<std::string> outputs_;
};

void cmd_simulate(Run& run) {
  const SimulationResult sim = run_simulation(run.cfg());
  run.csv("background.csv", sim.background);
  run.csv("habits.csv", sim.habits);
  run.csv("motif.csv", sim.motif.motif);
  run.csv("injected.csv", sim.injected.series);
  run.text("schema.json", schema_to_json(sim.injected.series.schema()));
  run.text("truth.json", ground_truth_to_json(sim.injected.truth));
  run.finish();
}

void cmd_represent(Run& run) {
  const Series raw = read_series_csv(run.require(run.cfg().input_path, "input"), run.schema());
  RepresentationConfig rep = run.cfg().representation;
  rep.kmeans_seed = run.cfg().stage_seed("kmeans");
  const Representation r = represent(raw, rep);
  run.csv("preprocessed.csv", r.preprocessed);
  run.text("symbolic.json", symbolic_to_json(r.symbolic));
  run.text("schema.json", schema_to_json(r.preprocessed.schema()));
  run.finish();
}

void write_motifs(Run& run, const MotifSet& set, const CollisionMatrix& collisions, bool dump) {
  run.text("motifs.json", motif_set_to_json(set));
  if (dump) run.text("collisions.csv", collisions_to_csv(collisions));
  std::cout << set.tentative.size() << " tentative motifs, " << set.classes.size() << " classes\n";
}

void cmd_extract(Run& run, const Options& opt) {
  if (!opt.symbolic.empty() || !opt.preprocessed.empty()) {
    if (opt.symbolic.empty() || opt.preprocessed.empty())
      throw ConfigError("--symbolic and --preprocessed must be given together");
    const SymbolicSeries sym = symbolic_from_json(read_text_file(opt.symbolic));
    const Series pre = read_series_csv(opt.preprocessed, sym.schema_ptr(), Stage::Normalized);
    const MiningResult mined = run_mining(pre, sym, run.cfg());
    write_motifs(run, mined.motifs, mined.collisions, opt.dump_collisions);
  } else {
    const Series raw = read_series_csv(run.require(run.cfg().input_path, "input"), run.schema());
    const ExtractionResult ex = run_extraction(raw, run.cfg());
    write_motifs(run, ex.motifs, ex.collisions, opt.dump_collisions);
  }
  run.finish();
}

void cmd_evaluate(Run& run) {
  const MotifSet set = motif_set_from_json(read_text_file(run.require(run.cfg().motifs_path, "motifs")));
  const GroundTruth gt = ground_truth_from_json(read_text_file(run.require(run.cfg().truth_path, "truth")));
  const EvalReport report = run_evaluation(set, gt);
  run.text("report.json", eval_report_to_json(report));
  run.text("report.csv", eval_report_csv_header() + "\n" + eval_report_csv_row(report));
  std::cout << eval_report_csv_header() << "\n" << eval_report_csv_row(report) << "\n";
  run.finish();
}

// Raw files are compared after min-max scaling against the schema bounds.
Series bound_normalized(const Series& raw) {
  const Schema& schema = raw.schema();
  std::vector<double> values = raw.values();
  const std::size_t p = schema.size();
  for (std::size_t i = 0; i < raw.size(); ++i)
    for (std::size_t k = 0; k < p; ++k)
      if (schema[k].kind == ParameterKind::Quantitative)
        values[i * p + k] = normalize(values[i * p + k], schema[k]);
  return Series(raw.schema_ptr(), raw.timestamps(), std::move(values), Stage::Normalized);
}

void cmd_distance(Run& run, const Options& opt) {
  const SchemaPtr schema = run.schema();
  const Series a = bound_normalized(read_series_csv(opt.file_a, schema));
  const Series b = bound_normalized(read_series_csv(opt.file_b, schema));
  const LcssParams lcss = run.cfg().lcss_params(*schema);
  std::cout << "lcss " << format_double(lcss_distance(a, b, lcss)) << "\n"
            << "dtw " << format_double(dtw_distance(a, b)) << "\n";
}

void print_error(const std::string& kind, const std::string& message) {
  std::cerr << json{{"error", kind}, {"message", message}}.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Motif discovery in heterogeneous multivariate time series"};
  app.require_subcommand(1);
  Options opt;

  const auto common = [&](CLI::App* sub) {
    sub->add_option("--config", opt.config, "JSON run configuration")->check(CLI::ExistingFile);
    sub->add_option("--seed", opt.seed, "Global seed; overrides the config");
    sub->add_option("--out-dir", opt.out_dir, "Output directory");
    sub->add_option("--threads", opt.threads, "Worker threads");
  };

  auto* simulate = app.add_subcommand("simulate", "Generate a data set with injected motif instances");
  common(simulate);

  auto* represent_cmd = app.add_subcommand("represent", "Preprocess and symbolize a raw series");
  common(represent_cmd);
  represent_cmd->add_option("--input", opt.input, "Raw series CSV");
  represent_cmd->add_option("--schema", opt.schema, "Schema JSON");

  auto* extract = app.add_subcommand("extract", "Mine tentative motifs and cluster them");
  common(extract);
  extract->add_option("--input", opt.input, "Raw series CSV");
  extract->add_option("--schema", opt.schema, "Schema JSON");
  extract->add_option("--symbolic", opt.symbolic, "Symbolic series JSON from `represent`");
  extract->add_option("--preprocessed", opt.preprocessed, "Preprocessed CSV from `represent`");
  extract->add_flag("--dump-collisions", opt.dump_collisions, "Write the sparse collision matrix");

  auto* evaluate = app.add_subcommand("evaluate", "Score a motif set against ground truth");
  common(evaluate);
  evaluate->add_option("--motifs", opt.motifs, "Motif set JSON");
  evaluate->add_option("--truth", opt.truth, "Ground-truth JSON");

  auto* distance = app.add_subcommand("distance", "Print LCSS and DTW distances of two raw series");
  common(distance);
  distance->add_option("a", opt.file_a, "First series CSV")->required()->check(CLI::ExistingFile);
  distance->add_option("b", opt.file_b, "Second series CSV")->required()->check(CLI::ExistingFile);
  distance->add_option("--schema", opt.schema, "Schema JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    print_error("usage", e.what());
    return 2;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    Run run(opt, sub->get_name());
    if (sub == simulate) cmd_simulate(run);
    else if (sub == represent_cmd) cmd_represent(run);
    else if (sub == extract) cmd_extract(run, opt);
    else if (sub == evaluate) cmd_evaluate(run);
    else cmd_distance(run, opt);
  } catch (const Error& e) {
    print_error(e.kind(), e.what());
    return 1;
  } catch (const std::exception& e) {
    print_error("internal", e.what());
    return 1;
  }
  return 0;
}
