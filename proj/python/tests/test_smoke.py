# Copyright 2026 The mlopsrec Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import json
import os
import pathlib

import pytest

import mlopsrec

DATA = pathlib.Path(os.environ.get("MLOPSREC_DATA_DIR", pathlib.Path(__file__).parents[2] / "data"))


def test_published_f_measures():
    rows = [
        (0.683871, 0.582418, 0.629080),
        (0.705521, 0.631868, 0.666667),
        (0.674556, 0.626374, 0.649573),
        (0.498423, 0.868132, 0.633267),
    ]
    for p, r, f in rows:
        assert mlopsrec.f_measure(p, r) == pytest.approx(f, abs=1e-4)


def test_split_and_encoding():
    train, test = mlopsrec.split_train_test(10, "8/10", seed=3)
    assert len(train) == 8 and len(test) == 2
    assert sorted(train + test) == list(range(10))
    assert mlopsrec.encode("unstructured", "textual") == "0010010"


def test_records_and_scoring():
    records = mlopsrec.synth_dataset(30, seed=7)
    assert len(records) == 30
    assert records == mlopsrec.synth_dataset(30, seed=7)
    assert mlopsrec.filter_ai(records) == records
    csv_text = "\n".join([
        "name,description,project_category,data_nature,data_type,preprocessing_tools,"
        "project_type,technique,evaluation_metrics,model_tools",
        "p,d,AI,Unstructured,Textual ,pandas; NumPy,classification,lstm,accuracy,keras",
    ])
    parsed = mlopsrec.parse_records(csv_text, "csv")
    assert parsed[0]["data_type"] == "textual"
    assert parsed[0]["preprocessing_tools"] == ["numpy", "pandas"]

    score = mlopsrec.score_predictions(
        [{"model_tools": ["a", "b"]}, {"model_tools": ["c"]}],
        [{"model_tools": ["a"]}, {"model_tools": ["c", "d"]}],
    )
    assert (score["tp"], score["fp"], score["fn"]) == (2, 1, 1)


def test_train_predict_recommend_round_trip():
    records = mlopsrec.synth_dataset(150, seed=5)
    catalogue = (DATA / "catalogue.json").read_text()
    for approach in ["rule_based", "decision_tree", "random_forest", "knn"]:
        model = mlopsrec.train(records, approach, seed=5, n_trees=20)
        assert model.approach == approach
        again = mlopsrec.load_model(model.to_json())
        assert again.to_json() == model.to_json()
        assert again.predict("unstructured", "image") == model.predict("unstructured", "image")
        report = mlopsrec.evaluate(model, records, seed=5)
        assert 0.0 <= report["precision"] <= 1.0
        rec = mlopsrec.recommend("unstructured", "image", model, catalogue)
        assert rec["approach"] == approach
        for match in rec["mlops_tools"]:
            assert match["matched_via"]


def test_union_rules_have_full_training_recall():
    records = mlopsrec.synth_dataset(80, seed=2)
    rules = mlopsrec.extract_rules(records, "union")
    report = mlopsrec.evaluate(rules, records, seed=2, on="all")
    assert report["recall"] == 1.0


def test_errors_surface_as_python_exceptions():
    with pytest.raises(ValueError, match="numerical\\|textual\\|image\\|video"):
        mlopsrec.encode("structured", "audio")
    rules = mlopsrec.load_model((DATA / "rules.json").read_text())
    with pytest.raises(ValueError):
        mlopsrec.f_measure(1.5, 0.2)
    sample = json.loads(rules.to_json())
    assert len(sample["rules"]) == 12


def test_cli_in_process():
    code, out, err = mlopsrec.run_cli([
        "--rules", str(DATA / "rules.json"), "--catalogue", str(DATA / "catalogue.json"),
        "--format", "json", "recommend", "--nature", "unstructured", "--type", "image",
        "--approach", "rule_based",
    ])
    assert code == 0, err
    assert any(t["name"] == "zenml" for t in json.loads(out)["mlops_tools"])
    code, _, err = mlopsrec.run_cli(["recommend", "--nature", "structured", "--type", "audio"])
    assert code == 2
