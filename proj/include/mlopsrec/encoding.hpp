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

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mlopsrec/common.hpp"
#include "mlopsrec/dataset.hpp"

namespace mlopsrec {

// The two categorical input features, in one-hot block order.
enum class InputFeature { kNature = 0, kType = 1 };
inline constexpr std::size_t kNumInputFeatures = 2;

std::string_view ToString(InputFeature feature);

// Per-feature category lists, each sorted by category name. The one-hot
// layout is the nature block followed by the type block.
class Vocabulary {
 public:
  Vocabulary() = default;
  Vocabulary(std::vector<DataNature> natures, std::vector<DataType> types);

  // Every category of both closed domains (width 3 + 4).
  static Vocabulary Full();

  const std::vector<DataNature>& natures() const { return natures_; }
  const std::vector<DataType>& types() const { return types_; }

  std::size_t width() const { return natures_.size() + types_.size(); }
  std::size_t block_size(InputFeature f) const {
    return f == InputFeature::kNature ? natures_.size() : types_.size();
  }
  std::size_t block_offset(InputFeature f) const {
    return f == InputFeature::kNature ? 0 : natures_.size();
  }

  // Index of a category within its block; throws kUnknownCategory.
  std::size_t IndexOf(DataNature n) const;
  std::size_t IndexOf(DataType t) const;

  bool Contains(const Context& c) const;

  friend bool operator==(const Vocabulary&, const Vocabulary&) = default;

 private:
  std::vector<DataNature> natures_;
  std::vector<DataType> types_;
};

// One bit per vocabulary slot.
class FeatureVector {
 public:
  FeatureVector() = default;
  explicit FeatureVector(std::vector<std::uint8_t> bits)
      : bits_(std::move(bits)) {}

  std::size_t size() const { return bits_.size(); }
  bool operator[](std::size_t i) const { return bits_[i] != 0; }
  std::span<const std::uint8_t> bits() const { return bits_; }
  std::size_t popcount() const;

  std::string ToString() const;  // e.g. "0010010"

  friend bool operator==(const FeatureVector&, const FeatureVector&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

// Categories actually observed in views, sorted. Throws kInvalidArgument on
// empty input.
Vocabulary BuildVocabulary(const std::vector<FeatureView>& views);

// Throws kUnknownCategory naming the feature and value when a category is
// missing from the vocabulary.
FeatureVector Encode(const Context& inputs, const Vocabulary& vocab);

// Block-local category index of feature f. Throws kInvalidArgument unless v
// has the vocabulary width and exactly one bit set in that block.
std::size_t DecodeBlock(const FeatureVector& v, const Vocabulary& vocab,
                        InputFeature f);
Context Decode(const FeatureVector& v, const Vocabulary& vocab);

std::size_t HammingDistance(const FeatureVector& a, const FeatureVector& b);

struct Ratio {
  std::uint64_t numerator = 8;
  std::uint64_t denominator = 10;
};

// "8/10", "4/5" or a decimal such as "0.8" (converted to thousandths).
Ratio ParseRatio(std::string_view text);
std::string ToString(const Ratio& r);

struct SplitResult {
  std::vector<std::size_t> train;
  std::vector<std::size_t> test;
  std::uint64_t seed = 0;
  Ratio ratio;
};

// Shuffles 0..n-1 with Rng(seed) (Fisher-Yates) and takes the first
// floor(ratio * n) indices as train, the rest as test. Each list keeps the
// shuffled order.
SplitResult SplitTrainTest(std::size_t n, Ratio ratio, std::uint64_t seed);

}  // namespace mlopsrec
