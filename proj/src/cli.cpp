// Copyright 2026 The mlopsrec Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mlopsrec/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mlopsrec/catalogue.hpp"
#include "mlopsrec/classifiers.hpp"
#include "mlopsrec/dataset.hpp"
#include "mlopsrec/evaluation.hpp"
#include "mlopsrec/pipeline.hpp"
#include "mlopsrec/rules.hpp"

namespace mlopsrec::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

// Everything a command may read. Filled from defaults, then the --config
// file, then explicit flags.
struct RunConfig {
  TrainingConfig training;
  std::string approach = "all";
  std::string data;
  std::string rules;
  std::string catalogue;
  std::string model_dir = "models";
  std::string format = "text";
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFile(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::kIo, "cannot write '" + path.string() + "'");
  out << content;
  if (!out) throw Error(ErrorKind::kIo, "failed writing '" + path.string() + "'");
}

void ApplyConfigFile(const std::string& path, RunConfig& config) {
  json doc;
  try {
    doc = json::parse(ReadFile(path));
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::kParse, path + ": " + e.what());
  }
  if (!doc.is_object()) {
    throw Error(ErrorKind::kValidation, path + ": config must be a JSON object");
  }
  try {
    for (const auto& [key, value] : doc.items()) {
      TrainingConfig& t = config.training;
      if (key == "seed") t.seed = value.get<std::uint64_t>();
      else if (key == "ratio") t.ratio = ParseRatio(value.is_string() ? value.get<std::string>() : value.dump());
      else if (key == "strategy") t.strategy = ParseExtractionStrategy(value.get<std::string>());
      else if (key == "k") t.k = value.get<std::size_t>();
      else if (key == "n_trees") t.n_trees = value.get<std::size_t>();
      else if (key == "max_depth") t.max_depth = value.is_null() ? std::nullopt : std::optional(value.get<std::size_t>());
      else if (key == "min_leaf_size") t.min_leaf_size = value.get<std::size_t>();
      else if (key == "full_vocabulary") t.full_vocabulary = value.get<bool>();
      else if (key == "threads") t.threads = value.get<unsigned>();
      else if (key == "approach") config.approach = value.get<std::string>();
      else if (key == "data") config.data = value.get<std::string>();
      else if (key == "rules") config.rules = value.get<std::string>();
      else if (key == "catalogue") config.catalogue = value.get<std::string>();
      else if (key == "model_dir") config.model_dir = value.get<std::string>();
      else if (key == "format") config.format = value.get<std::string>();
      else throw Error(ErrorKind::kValidation, path + ": unknown config key '" + key + "'");
    }
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kValidation, path + ": " + e.what());
  }
}

std::vector<Approach> SelectedApproaches(const std::string& selector) {
  if (NormalizeLabel(selector) == "all") {
    return {kAllApproaches.begin(), kAllApproaches.end()};
  }
  std::vector<Approach> out;
  for (const auto& name : SplitLabels(selector)) {
    try {
      out.push_back(ParseApproach(name));
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }
  if (out.empty()) throw UsageError("no approach selected");
  // Report order follows the canonical approach order.
  std::sort(out.begin(), out.end());
  return out;
}

fs::path ArtifactPath(const RunConfig& config, Approach approach) {
  return fs::path(config.model_dir) / (std::string(ToString(approach)) + ".json");
}

fs::path RulesPath(const RunConfig& config) {
  return config.rules.empty() ? ArtifactPath(config, Approach::kRuleBased)
                              : fs::path(config.rules);
}

Predictor LoadPredictor(const RunConfig& config, Approach approach) {
  const fs::path path = approach == Approach::kRuleBased
                            ? RulesPath(config)
                            : ArtifactPath(config, approach);
  if (!fs::exists(path)) {
    throw Error(ErrorKind::kIo, "missing " + std::string(ToString(approach)) +
                                    " artifact '" + path.string() +
                                    "'; run `mlopsrec train` first");
  }
  if (approach == Approach::kRuleBased) return LoadRulesFile(path.string());
  TrainedModel model = LoadModelFile(path.string());
  if (model.approach() != approach) {
    throw Error(ErrorKind::kValidation,
                path.string() + ": holds a " +
                    std::string(ToString(model.approach())) + " model");
  }
  return model;
}

void RequirePath(const std::string& value, const char* flag) {
  if (value.empty()) throw UsageError(std::string(flag) + " is required");
}

std::string Banner(const RunConfig& c) {
  const TrainingConfig& t = c.training;
  std::ostringstream out;
  out << "effective config: seed=" << t.seed << " ratio=" << ToString(t.ratio)
      << " approach=" << c.approach << " strategy=" << ToString(t.strategy)
      << " k=" << t.k << " n_trees=" << t.n_trees << " max_depth="
      << (t.max_depth ? std::to_string(*t.max_depth) : "unlimited")
      << " min_leaf_size=" << t.min_leaf_size
      << " vocabulary=" << (t.full_vocabulary ? "full" : "observed")
      << " data=" << (c.data.empty() ? "-" : c.data)
      << " rules=" << (c.rules.empty() ? "-" : c.rules)
      << " catalogue=" << (c.catalogue.empty() ? "-" : c.catalogue)
      << " model_dir=" << c.model_dir << " format=" << c.format << '\n';
  return out.str();
}

int CmdSynth(const RunConfig& config, std::size_t n, const std::string& spec_path,
             const std::string& out_path, const std::string& dump_spec,
             std::ostream& out) {
  const SynthSpec spec =
      spec_path.empty() ? DefaultSynthSpec() : ParseSynthSpec(ReadFile(spec_path));
  if (!dump_spec.empty()) WriteFile(dump_spec, SerializeSynthSpec(spec));
  const auto records = SynthDataset(spec, n, config.training.seed);
  if (out_path.empty()) {
    out << SerializeRecords(records, RecordFormat::kCsv);
  } else {
    WriteFile(out_path, SerializeRecords(records, FormatForPath(out_path)));
    out << "wrote " << records.size() << " records to " << out_path << '\n';
  }
  return kExitOk;
}

int CmdTrain(const RunConfig& config, std::ostream& out) {
  RequirePath(config.data, "--data");
  const auto approaches = SelectedApproaches(config.approach);
  const PreparedData data = PrepareData(LoadRecords(config.data), config.training);
  if (data.train.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "empty training set");
  }
  for (Approach approach : approaches) {
    const Predictor predictor = TrainApproach(approach, data.train, config.training);
    const fs::path path = ArtifactPath(config, approach);
    if (const auto* rules = std::get_if<RuleSet>(&predictor)) {
      WriteFile(path, SerializeRules(*rules));
    } else {
      WriteFile(path, SerializeModel(std::get<TrainedModel>(predictor)));
    }
    out << "trained " << ToString(approach) << " on " << data.train.size()
        << " records -> " << path.string() << '\n';
  }
  return kExitOk;
}

int CmdEvaluate(const RunConfig& config, const std::string& on,
                const std::string& out_dir_flag, std::ostream& out) {
  RequirePath(config.data, "--data");
  const auto approaches = SelectedApproaches(config.approach);
  const PreparedData data = PrepareData(LoadRecords(config.data), config.training);
  const std::vector<FeatureView>& views =
      on == "train" ? data.train : on == "all" ? data.views : data.test;
  if (views.empty()) {
    throw Error(ErrorKind::kInvalidArgument,
                on == "test" ? "empty test set" : "empty " + on + " set");
  }

  std::vector<EvaluationReport> reports;
  for (Approach approach : approaches) {
    reports.push_back(EvaluatePredictor(LoadPredictor(config, approach), views));
  }
  const Comparison comparison = CompareApproaches(std::move(reports));

  const std::map<std::string, std::string> metadata = {
      {"seed", std::to_string(config.training.seed)},
      {"ratio", ToString(config.training.ratio)},
      {"evaluated_on", on},
      {"records", std::to_string(views.size())},
      {"data", config.data},
  };
  const std::string report_json = ComparisonJson(comparison, metadata);
  const fs::path out_dir = out_dir_flag.empty() ? fs::path(config.model_dir)
                                                : fs::path(out_dir_flag);
  WriteFile(out_dir / "evaluation.json", report_json);
  WriteFile(out_dir / "evaluation_bars.csv", BarsCsv(comparison));

  json best;
  best["approach"] = comparison.best().approach;
  best["f_measure"] = comparison.best().f_measure();
  best["seed"] = config.training.seed;
  WriteFile(fs::path(config.model_dir) / "best.json", best.dump(2) + "\n");

  if (config.format == "json") {
    out << report_json;
  } else {
    out << "seed " << config.training.seed << ", evaluated on " << on << " ("
        << views.size() << " records)\n";
    out << RenderTable(comparison);
    for (const auto& r : comparison.ranked) {
      if (r.unanswered) {
        out << "note: " << r.approach << " could not answer " << r.unanswered
            << " record(s); scored as empty predictions\n";
      }
    }
  }
  return kExitOk;
}

Approach ResolveRecommendApproach(const RunConfig& config, bool approach_flag) {
  if (approach_flag || NormalizeLabel(config.approach) != "all") {
    const auto selected = SelectedApproaches(config.approach);
    if (selected.size() != 1) {
      throw UsageError("recommend needs a single --approach");
    }
    return selected.front();
  }
  const fs::path best = fs::path(config.model_dir) / "best.json";
  if (fs::exists(best)) {
    try {
      return ParseApproach(json::parse(ReadFile(best.string())).at("approach").get<std::string>());
    } catch (const json::exception& e) {
      throw Error(ErrorKind::kValidation, best.string() + ": " + e.what());
    }
  }
  if (!config.rules.empty()) return Approach::kRuleBased;
  throw UsageError("no best model recorded in '" + config.model_dir +
                   "'; run `mlopsrec evaluate` or pass --approach");
}

int CmdRecommend(const RunConfig& config, bool approach_flag,
                 const std::string& nature, const std::string& type,
                 std::ostream& out) {
  RequirePath(config.catalogue, "--catalogue");
  const Context inputs{ParseDataNature(nature), ParseDataType(type)};
  const Approach approach = ResolveRecommendApproach(config, approach_flag);
  const Predictor predictor = LoadPredictor(config, approach);
  const ToolCatalogue catalogue = LoadCatalogueFile(config.catalogue);

  Recommendation rec;
  try {
    rec = Recommend(inputs, predictor, catalogue);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kNoMatch) {
      throw Error(e.kind(), std::string(e.what()) +
                                "; add a rule covering these inputs or choose "
                                "a learned model with --approach");
    }
    throw;
  }
  if (config.format == "json") {
    json doc = json::parse(RecommendationJson(rec));
    doc["seed"] = config.training.seed;
    out << doc.dump(2) << '\n';
  } else {
    out << RenderRecommendation(rec);
  }
  return kExitOk;
}

int CmdRulesExtract(const RunConfig& config, const std::string& out_path,
                    std::ostream& out) {
  RequirePath(config.data, "--data");
  const auto views = ProjectFeatures(FilterAi(LoadRecords(config.data)));
  if (views.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "no AI projects after filtering");
  }
  const RuleSet rules = ExtractRules(views, config.training.strategy);
  WriteFile(out_path, SerializeRules(rules));
  out << "extracted " << rules.rules.size() << " rules from " << views.size()
      << " records (" << ToString(config.training.strategy) << ") -> "
      << out_path << '\n';
  return kExitOk;
}

int CmdCatalogueValidate(const RunConfig& config, const std::string& path_arg,
                         std::ostream& out, std::ostream& err) {
  const std::string path = path_arg.empty() ? config.catalogue : path_arg;
  RequirePath(path, "catalogue path");
  const ToolCatalogue catalogue = LoadCatalogueFile(path);
  std::map<Phase, std::size_t> coverage;
  for (const auto& tool : catalogue.tools) {
    for (Phase p : tool.phases) ++coverage[p];
  }
  out << path << ": " << catalogue.tools.size() << " tools valid\n";
  for (Phase p : kAllPhases) {
    out << "  " << ToString(p) << ": " << coverage[p] << " tools\n";
  }
  for (const auto& w : catalogue.warnings) err << "warning: " << w << '\n';
  return kExitOk;
}

int ExitCodeFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse:
    case ErrorKind::kValidation:
    case ErrorKind::kDuplicateId:
    case ErrorKind::kUnknownCategory:
      return kExitValidation;
    default:
      return kExitRuntime;
  }
}

// CLI11 validator that defers to a library parser for the allowed values.
template <typename Parse>
CLI::Validator Domain(Parse parse, std::string description) {
  return CLI::Validator(
      [parse](std::string& value) -> std::string {
        try {
          parse(value);
          return {};
        } catch (const Error& e) {
          return e.what();
        }
      },
      std::move(description));
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Recommend an MLOps toolchain from a project's data nature and type"};
  app.name("mlopsrec");
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t seed = 0;
  std::string config_path, data, rules, catalogue, model_dir, format;
  app.add_option("--seed", seed, "Seed for every random choice");
  app.add_option("--config", config_path, "JSON config file (flags override it)");
  app.add_option("--data", data, "Project records (.csv or .json)");
  app.add_option("--rules", rules, "Rule file");
  app.add_option("--catalogue", catalogue, "MLOps tool catalogue");
  app.add_option("--model-dir", model_dir, "Directory of trained artifacts");
  app.add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"text", "json"}));

  // Options shared by train and evaluate.
  std::string approach, ratio, strategy;
  std::size_t k = 0, n_trees = 0, max_depth = 0, min_leaf_size = 0;
  unsigned threads = 0;
  bool observed_vocabulary = false;
  const auto add_training_options = [&](CLI::App* sub) {
    sub->add_option("--approach", approach,
                    "rule_based|decision_tree|random_forest|knn|all");
    sub->add_option("--ratio", ratio, "Train fraction, e.g. 8/10 or 0.8");
    sub->add_option("--strategy", strategy, "Rule extraction: union|majority")
        ->check(CLI::IsMember({"union", "majority"}));
    sub->add_option("--k", k, "KNN neighbours")->check(CLI::PositiveNumber);
    sub->add_option("--n-trees", n_trees, "Forest size")->check(CLI::PositiveNumber);
    sub->add_option("--max-depth", max_depth, "Tree depth limit");
    sub->add_option("--min-leaf-size", min_leaf_size, "Minimum records per leaf")
        ->check(CLI::PositiveNumber);
    sub->add_option("--threads", threads, "Forest training threads (0 = all cores)");
    sub->add_flag("--observed-vocabulary", observed_vocabulary,
                  "Encode only categories seen in training");
  };

  CLI::App* synth = app.add_subcommand("synth", "Generate a synthetic dataset");
  std::size_t synth_n = 0;
  std::string synth_spec, synth_out, dump_spec;
  synth->add_option("--n", synth_n, "Number of records")->required();
  synth->add_option("--spec", synth_spec, "Generator spec (default: built-in noisy spec)");
  synth->add_option("--out", synth_out, "Output file (.csv or .json); stdout if omitted");
  synth->add_option("--dump-spec", dump_spec, "Also write the generator spec here");

  CLI::App* train = app.add_subcommand("train", "Train the selected approaches");
  add_training_options(train);

  CLI::App* evaluate = app.add_subcommand("evaluate", "Score trained approaches");
  add_training_options(evaluate);
  std::string on = "test", out_dir;
  evaluate->add_option("--on", on, "Records to score")
      ->check(CLI::IsMember({"test", "train", "all"}));
  evaluate->add_option("--out-dir", out_dir, "Report directory (default: model dir)");

  CLI::App* recommend = app.add_subcommand("recommend", "Recommend an MLOps toolchain");
  std::string nature, type;
  recommend->add_option("--nature", nature, "structured|unstructured|semi_structured")
      ->required()
      ->check(Domain(ParseDataNature, "DATA_NATURE"));
  recommend->add_option("--type", type, "numerical|textual|image|video")
      ->required()
      ->check(Domain(ParseDataType, "DATA_TYPE"));
  recommend->add_option("--approach", approach,
                        "rule_based|decision_tree|random_forest|knn (default: best)");

  CLI::App* rules_cmd = app.add_subcommand("rules", "Rule file tools");
  rules_cmd->require_subcommand(1);
  CLI::App* extract = rules_cmd->add_subcommand("extract", "Extract rules from data");
  std::string extract_out;
  extract->add_option("--strategy", strategy, "union|majority")
      ->check(CLI::IsMember({"union", "majority"}));
  extract->add_option("--out", extract_out, "Rule file to write")->required();

  CLI::App* catalogue_cmd = app.add_subcommand("catalogue", "Catalogue tools");
  catalogue_cmd->require_subcommand(1);
  CLI::App* validate = catalogue_cmd->add_subcommand("validate", "Validate a catalogue");
  std::string validate_path;
  validate->add_option("path", validate_path, "Catalogue file");

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.push_back("mlopsrec");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  const auto given = [](const CLI::App* sub, const char* name) {
    const CLI::Option* opt = sub->get_option_no_throw(name);
    return opt != nullptr && opt->count() > 0;
  };

  try {
    RunConfig config;
    if (given(&app, "--config")) ApplyConfigFile(config_path, config);
    TrainingConfig& t = config.training;
    if (given(&app, "--seed")) t.seed = seed;
    if (given(&app, "--data")) config.data = data;
    if (given(&app, "--rules")) config.rules = rules;
    if (given(&app, "--catalogue")) config.catalogue = catalogue;
    if (given(&app, "--model-dir")) config.model_dir = model_dir;
    if (given(&app, "--format")) config.format = format;

    bool approach_flag = false;
    for (CLI::App* sub : {train, evaluate, recommend}) {
      if (!sub->parsed()) continue;
      if (given(sub, "--approach")) {
        config.approach = approach;
        approach_flag = true;
      }
      if (sub == recommend) continue;
      if (given(sub, "--ratio")) {
        try {
          t.ratio = ParseRatio(ratio);
        } catch (const Error& e) {
          throw UsageError(e.what());
        }
      }
      if (given(sub, "--strategy")) t.strategy = ParseExtractionStrategy(strategy);
      if (given(sub, "--k")) t.k = k;
      if (given(sub, "--n-trees")) t.n_trees = n_trees;
      if (given(sub, "--max-depth")) t.max_depth = max_depth;
      if (given(sub, "--min-leaf-size")) t.min_leaf_size = min_leaf_size;
      if (given(sub, "--threads")) t.threads = threads;
      if (given(sub, "--observed-vocabulary")) t.full_vocabulary = !observed_vocabulary;
    }
    if (extract->parsed() && given(extract, "--strategy")) {
      t.strategy = ParseExtractionStrategy(strategy);
    }
    if (config.format != "text" && config.format != "json") {
      throw UsageError("--format must be text or json");
    }

    err << Banner(config);

    if (synth->parsed()) {
      return CmdSynth(config, synth_n, synth_spec, synth_out, dump_spec, out);
    }
    if (train->parsed()) return CmdTrain(config, out);
    if (evaluate->parsed()) return CmdEvaluate(config, on, out_dir, out);
    if (recommend->parsed()) {
      return CmdRecommend(config, approach_flag, nature, type, out);
    }
    if (extract->parsed()) return CmdRulesExtract(config, extract_out, out);
    if (validate->parsed()) {
      return CmdCatalogueValidate(config, validate_path, out, err);
    }
    err << "usage error: no command\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return ExitCodeFor(e.kind());
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
}

}  // namespace mlopsrec::cli
