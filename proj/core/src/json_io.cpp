#include "motifminer/json_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "motifminer/series_io.hpp"

namespace motifminer {

using nlohmann::json;

namespace {

json parse(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw IoError(std::string(what) + " is not valid JSON: " + e.what());
  }
}

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw IoError(std::string("malformed ") + what + ": " + e.what());
  }
}

json span_json(const Span& s) {
  return {{"start", s.start_index}, {"end", s.end_index}, {"start_time", s.start_time},
          {"end_time", s.end_time}};
}

Span span_from(const json& j) {
  return Span{j.at("start").get<std::size_t>(), j.at("end").get<std::size_t>(),
              j.at("start_time").get<double>(), j.at("end_time").get<double>()};
}

json schema_json(const Schema& schema) {
  json arr = json::array();
  for (const auto& p : schema) {
    json e = {{"name", p.name}, {"kind", to_string(p.kind)}};
    if (p.is_quantitative()) {
      e["min"] = p.min_bound;
      e["max"] = p.max_bound;
      if (!p.breakpoints.empty()) e["breakpoints"] = p.breakpoints;
    } else {
      e["cardinality"] = p.cardinality;
      if (!p.labels.empty()) e["labels"] = p.labels;
    }
    arr.push_back(std::move(e));
  }
  return {{"parameters", arr}};
}

Schema schema_from(const json& j) {
  Schema out;
  for (const auto& e : j.at("parameters")) {
    const auto kind = parameter_kind_from_string(e.at("kind").get<std::string>());
    const auto name = e.at("name").get<std::string>();
    if (kind == ParameterKind::Quantitative) {
      out.push_back(ParameterSchema::quantitative(
          name, e.at("min").get<double>(), e.at("max").get<double>(),
          e.value("breakpoints", std::vector<double>{})));
    } else {
      const int v = e.at("cardinality").get<int>();
      auto labels = e.value("labels", std::vector<std::string>{});
      out.push_back(kind == ParameterKind::OrderedQualitative
                        ? ParameterSchema::ordered(name, v, std::move(labels))
                        : ParameterSchema::unordered(name, v, std::move(labels)));
    }
  }
  validate_schema(out);
  return out;
}

json series_rows(const Series& s) {
  json rows = json::array();
  for (std::size_t i = 0; i < s.size(); ++i) {
    json row = json::array({s.timestamps()[i]});
    for (std::size_t k = 0; k < s.dims(); ++k) {
      if (s.schema()[k].is_qualitative())
        row.push_back(static_cast<long long>(s.at(i, k)));
      else
        row.push_back(s.at(i, k));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Series series_from_rows(const json& rows, const SchemaPtr& schema, Stage stage) {
  std::vector<double> ts, values;
  for (const auto& row : rows) {
    if (row.size() != schema->size() + 1) throw IoError("representative row has the wrong width");
    ts.push_back(row[0].get<double>());
    for (std::size_t k = 0; k < schema->size(); ++k) values.push_back(row[k + 1].get<double>());
  }
  return Series(schema, std::move(ts), std::move(values), stage);
}

json tentative_json(const TentativeMotif& t) {
  return {{"span", span_json(t.span)}, {"symbols", span_json(t.symbol_span)}, {"support", t.support}};
}

TentativeMotif tentative_from(const json& j) {
  TentativeMotif t;
  t.span = span_from(j.at("span"));
  t.symbol_span = span_from(j.at("symbols"));
  t.support = j.at("support").get<std::vector<std::size_t>>();
  return t;
}

}  // namespace

std::vector<Span> MotifSet::tentative_spans() const {
  std::vector<Span> out;
  for (const auto& t : tentative) out.push_back(t.span);
  return out;
}

std::vector<std::vector<Span>> MotifSet::class_spans() const {
  std::vector<std::vector<Span>> out;
  for (const auto& c : classes) {
    out.emplace_back();
    for (const auto& m : c.members) out.back().push_back(m.span);
  }
  return out;
}

std::string schema_to_json(const Schema& schema) { return schema_json(schema).dump(2); }

Schema schema_from_json(const std::string& text) {
  const json j = parse(text, "schema");
  return guarded("schema", [&] { return schema_from(j); });
}

Schema read_schema(const std::filesystem::path& path) { return schema_from_json(read_text_file(path)); }

std::string symbolic_to_json(const SymbolicSeries& sym) {
  json symbols = json::array();
  for (const auto& s : sym.symbols())
    symbols.push_back({{"codes", s.codes},
                       {"start", s.start_time},
                       {"duration", s.duration},
                       {"source", {s.source.start_index, s.source.end_index}},
                       {"source_time", {s.source.start_time, s.source.end_time}}});
  json j = {{"schema", schema_json(sym.schema())}, {"symbols", symbols}};
  return j.dump(2);
}

SymbolicSeries symbolic_from_json(const std::string& text) {
  const json j = parse(text, "symbolic series");
  return guarded("symbolic series", [&] {
    auto schema = make_schema(schema_from(j.at("schema")));
    std::vector<Symbol> symbols;
    for (const auto& e : j.at("symbols")) {
      Symbol s;
      s.codes = e.at("codes").get<std::vector<Code>>();
      if (s.codes.size() != schema->size()) throw IoError("symbol width differs from the schema");
      s.start_time = e.at("start").get<double>();
      s.duration = e.at("duration").get<double>();
      s.source.start_index = e.at("source").at(0).get<std::size_t>();
      s.source.end_index = e.at("source").at(1).get<std::size_t>();
      s.source.start_time = e.at("source_time").at(0).get<double>();
      s.source.end_time = e.at("source_time").at(1).get<double>();
      symbols.push_back(std::move(s));
    }
    return SymbolicSeries(schema, std::move(symbols));
  });
}

std::string motif_set_to_json(const MotifSet& set) {
  json pairs = json::array();
  for (const auto& g : set.pairs)
    pairs.push_back({{"first", span_json(g.first)},
                     {"second", span_json(g.second)},
                     {"first_symbols", span_json(g.first_symbols)},
                     {"second_symbols", span_json(g.second_symbols)},
                     {"distance", g.distance},
                     {"seed", {g.seed_i, g.seed_j}},
                     {"seed_count", g.seed_count}});
  json tentative = json::array();
  for (const auto& t : set.tentative) tentative.push_back(tentative_json(t));
  json classes = json::array();
  for (const auto& c : set.classes) {
    json members = json::array();
    for (const auto& m : c.members) members.push_back(tentative_json(m));
    classes.push_back({{"member_ids", c.member_ids},
                       {"members", members},
                       {"reference_member", c.reference_member},
                       {"representative", series_rows(c.representative)}});
  }
  json trace = json::array();
  for (const auto& s : set.trace)
    trace.push_back({{"left", s.left}, {"right", s.right}, {"distance", s.distance}, {"size", s.size}});
  json j = {{"schema", schema_json(*set.schema)},
            {"series_length", set.series_length},
            {"reduction_factor", set.reduction_factor},
            {"pairs", pairs},
            {"tentative_motifs", tentative},
            {"classes", classes},
            {"linkage", trace}};
  return j.dump(2);
}

MotifSet motif_set_from_json(const std::string& text) {
  const json j = parse(text, "motif set");
  return guarded("motif set", [&] {
    MotifSet set;
    set.schema = make_schema(schema_from(j.at("schema")));
    set.series_length = j.at("series_length").get<std::size_t>();
    set.reduction_factor = j.at("reduction_factor").get<std::size_t>();
    for (const auto& e : j.at("pairs")) {
      GrownPair g;
      g.first = span_from(e.at("first"));
      g.second = span_from(e.at("second"));
      g.first_symbols = span_from(e.at("first_symbols"));
      g.second_symbols = span_from(e.at("second_symbols"));
      g.distance = e.at("distance").get<double>();
      g.seed_i = e.at("seed").at(0).get<std::size_t>();
      g.seed_j = e.at("seed").at(1).get<std::size_t>();
      g.seed_count = e.at("seed_count").get<std::uint32_t>();
      set.pairs.push_back(g);
    }
    for (const auto& e : j.at("tentative_motifs")) set.tentative.push_back(tentative_from(e));
    for (const auto& e : j.at("classes")) {
      MotifClass c;
      c.member_ids = e.at("member_ids").get<std::vector<std::size_t>>();
      for (const auto& m : e.at("members")) c.members.push_back(tentative_from(m));
      c.reference_member = e.at("reference_member").get<std::size_t>();
      c.representative = series_from_rows(e.at("representative"), set.schema, Stage::Normalized);
      set.classes.push_back(std::move(c));
    }
    for (const auto& e : j.at("linkage"))
      set.trace.push_back({e.at("left").get<std::size_t>(), e.at("right").get<std::size_t>(),
                           e.at("distance").get<double>(), e.at("size").get<std::size_t>()});
    return set;
  });
}

std::string ground_truth_to_json(const GroundTruth& gt) {
  json motifs = json::array();
  for (const auto& m : gt.motifs) {
    json inst = json::array();
    for (const auto& i : m.instances)
      inst.push_back({{"span", span_json(i.span)},
                      {"heart_rate_inflation", i.heart_rate_inflation},
                      {"stretch", i.stretch}});
    motifs.push_back({{"motif_id", m.motif_id}, {"instances", inst}});
  }
  return json{{"series_length", gt.series_length}, {"motifs", motifs}}.dump(2);
}

GroundTruth ground_truth_from_json(const std::string& text) {
  const json j = parse(text, "ground truth");
  return guarded("ground truth", [&] {
    GroundTruth gt;
    gt.series_length = j.at("series_length").get<std::size_t>();
    for (const auto& m : j.at("motifs")) {
      GroundTruthMotif gm;
      gm.motif_id = m.at("motif_id").get<int>();
      for (const auto& i : m.at("instances"))
        gm.instances.push_back({span_from(i.at("span")), i.value("heart_rate_inflation", 0.0),
                                i.value("stretch", 1.0)});
      gt.motifs.push_back(std::move(gm));
    }
    gt.validate();
    return gt;
  });
}

std::string eval_report_to_json(const EvalReport& r) {
  const auto& c = r.confusion;
  json j;
  j["identification"] = {{"se", r.identification.sensitivity},
                         {"sp", r.identification.specificity},
                         {"tp", r.identification.tp},
                         {"fp", r.identification.fp},
                         {"tn", r.identification.tn},
                         {"fn", r.identification.fn}};
  j["classification"] = {{"se", r.classification.mean_se},
                         {"sp", r.classification.mean_sp},
                         {"se_per_motif", r.classification.se},
                         {"sp_per_class", r.classification.sp},
                         {"rho_e", r.classification.rho_e},
                         {"rho_p", r.classification.rho_p}};
  j["segmentation"] = {{"lambda", r.segmentation.lambda},
                       {"skipped_cells", r.segmentation.skipped_cells}};
  j["confusion"] = {{"motifs", c.motifs},       {"classes", c.classes},
                    {"c", c.c},                 {"c_split", c.c_split},
                    {"eta", c.eta},             {"missed", c.missed},
                    {"spurious", c.spurious},   {"instance_counts", c.instance_counts},
                    {"class_sizes", c.class_sizes}};
  j["perfect"] = r.perfect();
  return j.dump(2);
}

std::string eval_report_csv_header() {
  return "identification_se,identification_sp,classification_se,classification_sp,lambda,classes,"
         "perfect";
}

std::string eval_report_csv_row(const EvalReport& r) {
  std::ostringstream os;
  os << format_double(r.identification.sensitivity) << ',' << format_double(r.identification.specificity)
     << ',' << format_double(r.classification.mean_se) << ','
     << format_double(r.classification.mean_sp) << ',' << format_double(r.segmentation.lambda) << ','
     << r.confusion.classes << ',' << (r.perfect() ? 1 : 0);
  return os.str();
}

std::string collisions_to_csv(const CollisionMatrix& m) {
  std::ostringstream os;
  os << "i,j,count\n";
  for (const auto& c : m.sorted_cells()) os << c.i << ',' << c.j << ',' << c.count << '\n';
  return os.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << text;
  if (text.empty() || text.back() != '\n') out << '\n';
}

}  // namespace motifminer
