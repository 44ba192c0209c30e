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

"""MLOps toolchain recommender."""

from ._core import (
    Model,
    default_synth_spec,
    encode,
    evaluate,
    extract_rules,
    f_measure,
    filter_ai,
    load_model,
    parse_records,
    recommend,
    run_cli,
    score_predictions,
    split_train_test,
    synth_dataset,
    train,
)

__all__ = [
    "Model",
    "default_synth_spec",
    "encode",
    "evaluate",
    "extract_rules",
    "f_measure",
    "filter_ai",
    "load_model",
    "parse_records",
    "recommend",
    "run_cli",
    "score_predictions",
    "split_train_test",
    "synth_dataset",
    "train",
]
