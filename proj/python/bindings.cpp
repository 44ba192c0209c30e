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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "mlopsrec/catalogue.hpp"
#include "mlopsrec/cli.hpp"
#include "mlopsrec/pipeline.hpp"

namespace py = pybind11;
using namespace mlopsrec;

namespace {

py::object JsonLoads(const std::string& text) {
  return py::module_::import("json").attr("loads")(text);
}

std::string JsonDumps(const py::object& value) {
  return py::module_::import("json").attr("dumps")(value).cast<std::string>();
}

// Incoming records (a list of dicts or JSON text) go through the JSON file
// reader, so they get the same validation as files.
std::vector<ProjectRecord> RecordsFrom(const py::object& records) {
  if (py::isinstance<py::str>(records)) {
    return ParseRecords(records.cast<std::string>(), RecordFormat::kJson);
  }
  return ParseRecords(JsonDumps(records), RecordFormat::kJson);
}

py::list ToList(const LabelSet& labels) {
  py::list items;
  for (const auto& label : labels) items.append(label);
  return items;
}

// Records as dicts keyed by the file column names; set-valued fields become
// sorted lists.
py::list RecordsToPy(const std::vector<ProjectRecord>& records) {
  py::list out;
  for (const auto& r : records) {
    py::dict d;
    d["name"] = r.name;
    d["description"] = r.description;
    d["project_category"] = std::string(ToString(r.project_category));
    d["data_nature"] = std::string(ToString(r.data_nature));
    d["data_type"] = std::string(ToString(r.data_type));
    d["preprocessing_tools"] = ToList(r.preprocessing_tools);
    d["project_type"] = r.project_type;
    d["technique"] = r.technique;
    d["evaluation_metrics"] = ToList(r.evaluation_metrics);
    d["model_tools"] = ToList(r.model_tools);
    out.append(std::move(d));
  }
  return out;
}

py::dict LabelsDict(const OutputLabels& labels) {
  py::dict d;
  for (OutputField f : kAllOutputFields) {
    d[py::str(std::string(ToString(f)))] = ToList(labels[f]);
  }
  return d;
}

OutputLabels LabelsFrom(const py::dict& d) {
  OutputLabels o;
  for (const auto& [key, value] : d) {
    const OutputField f = ParseOutputField(key.cast<std::string>());
    if (py::isinstance<py::str>(value)) {
      o[f] = SplitLabels(value.cast<std::string>());
    } else {
      for (const auto& item : value) o[f].insert(NormalizeLabel(item.cast<std::string>()));
    }
  }
  return o;
}

py::dict ScoreDict(const FieldScore& s) {
  py::dict d;
  d["tp"] = s.counts.tp;
  d["fp"] = s.counts.fp;
  d["fn"] = s.counts.fn;
  d["precision"] = s.precision.value;
  d["recall"] = s.recall.value;
  d["f_measure"] = s.f_measure;
  d["precision_degenerate"] = s.precision.degenerate;
  d["recall_degenerate"] = s.recall.degenerate;
  return d;
}

TrainingConfig Config(std::uint64_t seed, const std::string& ratio,
                      const std::string& strategy, std::size_t k, std::size_t n_trees,
                      std::optional<std::size_t> max_depth, std::size_t min_leaf_size) {
  TrainingConfig c;
  c.seed = seed;
  c.ratio = ParseRatio(ratio);
  c.strategy = ParseExtractionStrategy(strategy);
  c.k = k;
  c.n_trees = n_trees;
  c.max_depth = max_depth;
  c.min_leaf_size = min_leaf_size;
  return c;
}

// A trained model or rule set behind one handle.
struct Model {
  Predictor predictor;

  std::string approach() const { return std::string(ToString(ApproachOf(predictor))); }

  py::dict Predict(const std::string& nature, const std::string& type) const {
    return LabelsDict(
        mlopsrec::Predict(predictor, {ParseDataNature(nature), ParseDataType(type)}));
  }

  std::string ToJson() const {
    if (const auto* rules = std::get_if<RuleSet>(&predictor)) return SerializeRules(*rules);
    return SerializeModel(std::get<TrainedModel>(predictor));
  }
};

Model LoadModelText(const std::string& text) {
  const py::object doc = JsonLoads(text);
  if (py::isinstance<py::dict>(doc) && doc.cast<py::dict>().contains("rules")) {
    return {LoadRules(text)};
  }
  return {LoadModel(text)};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "MLOps toolchain recommender: dataset handling, four approaches, "
            "micro-averaged evaluation and catalogue matching.";

  // Library errors map onto Python's ValueError (bad input) and
  // RuntimeError (everything else), keeping the message.
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      const std::string msg =
          std::string(ErrorKindName(e.kind())) + ": " + e.what();
      switch (e.kind()) {
        case ErrorKind::kNoMatch:
        case ErrorKind::kIo:
          PyErr_SetString(PyExc_RuntimeError, msg.c_str());
          break;
        default:
          PyErr_SetString(PyExc_ValueError, msg.c_str());
      }
    }
  });

  m.def("parse_records",
        [](const std::string& text, const std::string& format) {
          return RecordsToPy(ParseRecords(text, ParseRecordFormat(format)));
        },
        py::arg("text"), py::arg("format") = "csv",
        "Parse CSV or JSON records into normalized dicts.");

  m.def("filter_ai",
        [](const py::object& records) {
          return RecordsToPy(FilterAi(RecordsFrom(records)));
        },
        py::arg("records"));

  m.def("synth_dataset",
        [](std::size_t n, std::uint64_t seed, std::optional<std::string> spec) {
          const SynthSpec s = spec ? ParseSynthSpec(*spec) : DefaultSynthSpec();
          return RecordsToPy(SynthDataset(s, n, seed));
        },
        py::arg("n"), py::arg("seed") = 0, py::arg("spec") = py::none(),
        "n synthetic AI records; spec is generator JSON (built-in noisy spec by default).");

  m.def("default_synth_spec", [] { return SerializeSynthSpec(DefaultSynthSpec()); });

  m.def("encode",
        [](const std::string& nature, const std::string& type) {
          return Encode({ParseDataNature(nature), ParseDataType(type)}, Vocabulary::Full())
              .ToString();
        },
        py::arg("nature"), py::arg("type"),
        "One-hot bits over the full vocabulary, nature block first.");

  m.def("split_train_test",
        [](std::size_t n, const std::string& ratio, std::uint64_t seed) {
          const SplitResult s = SplitTrainTest(n, ParseRatio(ratio), seed);
          return py::make_tuple(s.train, s.test);
        },
        py::arg("n"), py::arg("ratio") = "8/10", py::arg("seed") = 0);

  m.def("f_measure", &FMeasure, py::arg("precision"), py::arg("recall"));

  m.def("score_predictions",
        [](const std::vector<py::dict>& gold, const std::vector<py::dict>& predicted) {
          std::vector<OutputLabels> g, p;
          for (const auto& d : gold) g.push_back(LabelsFrom(d));
          for (const auto& d : predicted) p.push_back(LabelsFrom(d));
          return ScoreDict(MakeFieldScore(ScorePredictions(g, p)));
        },
        py::arg("gold"), py::arg("predicted"),
        "Micro-averaged counts and scores over (record, field, label).");

  py::class_<Model>(m, "Model")
      .def_property_readonly("approach", &Model::approach)
      .def("predict", &Model::Predict, py::arg("nature"), py::arg("type"))
      .def("to_json", &Model::ToJson)
      .def("__repr__", [](const Model& model) { return "<mlopsrec.Model " + model.approach() + ">"; });

  m.def("load_model", &LoadModelText, py::arg("text"),
        "Load a rule file or a trained model file.");

  m.def("extract_rules",
        [](const py::object& records, const std::string& strategy) {
          return Model{ExtractRules(ProjectFeatures(FilterAi(RecordsFrom(records))),
                                    ParseExtractionStrategy(strategy))};
        },
        py::arg("records"), py::arg("strategy") = "union");

  m.def("train",
        [](const py::object& records, const std::string& approach, std::uint64_t seed,
           const std::string& ratio, const std::string& strategy, std::size_t k,
           std::size_t n_trees, std::optional<std::size_t> max_depth,
           std::size_t min_leaf_size) {
          const TrainingConfig c =
              Config(seed, ratio, strategy, k, n_trees, max_depth, min_leaf_size);
          const PreparedData data = PrepareData(RecordsFrom(records), c);
          py::gil_scoped_release release;
          return Model{TrainApproach(ParseApproach(approach), data.train, c)};
        },
        py::arg("records"), py::arg("approach"), py::arg("seed") = 0,
        py::arg("ratio") = "8/10", py::arg("strategy") = "union", py::arg("k") = 5,
        py::arg("n_trees") = 100, py::arg("max_depth") = py::none(),
        py::arg("min_leaf_size") = 1,
        "Fit one approach on the training split of the AI records.");

  m.def("evaluate",
        [](const Model& model, const py::object& records, std::uint64_t seed,
           const std::string& ratio, const std::string& on) {
          TrainingConfig c;
          c.seed = seed;
          c.ratio = ParseRatio(ratio);
          const PreparedData data = PrepareData(RecordsFrom(records), c);
          const auto& views = on == "train" ? data.train : on == "all" ? data.views : data.test;
          const EvaluationReport r = EvaluatePredictor(model.predictor, views);
          py::dict d = ScoreDict(r.overall);
          d["approach"] = r.approach;
          d["records"] = r.records;
          d["unanswered"] = r.unanswered;
          return d;
        },
        py::arg("model"), py::arg("records"), py::arg("seed") = 0,
        py::arg("ratio") = "8/10", py::arg("on") = "test");

  m.def("recommend",
        [](const std::string& nature, const std::string& type, const Model& model,
           const std::string& catalogue) {
          return JsonLoads(RecommendationJson(
              Recommend(nature, type, model.predictor, LoadCatalogue(catalogue))));
        },
        py::arg("nature"), py::arg("type"), py::arg("model"), py::arg("catalogue"),
        "Predict the four outputs and match them against a catalogue (JSON text).");

  m.def("run_cli",
        [](const std::vector<std::string>& args) {
          std::ostringstream out, err;
          const int code = cli::Run(args, out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run the command-line tool in process: (exit code, stdout, stderr).");
}
