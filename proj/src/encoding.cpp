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

#include "mlopsrec/encoding.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "mlopsrec/rng.hpp"

namespace mlopsrec {
namespace {

template <typename Enum>
void SortByName(std::vector<Enum>& values) {
  std::sort(values.begin(), values.end(), [](Enum a, Enum b) {
    return ToString(a) < ToString(b);
  });
  values.erase(std::unique(values.begin(), values.end()), values.end());
}

template <typename Enum>
std::size_t FindIndex(const std::vector<Enum>& values, Enum v,
                      InputFeature feature) {
  const auto it = std::find(values.begin(), values.end(), v);
  if (it == values.end()) {
    throw Error(ErrorKind::kUnknownCategory,
                "unknown category for " + std::string(ToString(feature)) +
                    ": '" + std::string(ToString(v)) +
                    "' is not in the vocabulary");
  }
  return static_cast<std::size_t>(it - values.begin());
}

std::uint64_t ParseUnsigned(std::string_view text) {
  std::uint64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw Error(ErrorKind::kInvalidArgument,
                "invalid ratio component '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

std::string_view ToString(InputFeature feature) {
  return feature == InputFeature::kNature ? "data_nature" : "data_type";
}

Vocabulary::Vocabulary(std::vector<DataNature> natures,
                       std::vector<DataType> types)
    : natures_(std::move(natures)), types_(std::move(types)) {
  SortByName(natures_);
  SortByName(types_);
}

Vocabulary Vocabulary::Full() {
  return Vocabulary({kAllNatures.begin(), kAllNatures.end()},
                    {kAllTypes.begin(), kAllTypes.end()});
}

std::size_t Vocabulary::IndexOf(DataNature n) const {
  return FindIndex(natures_, n, InputFeature::kNature);
}

std::size_t Vocabulary::IndexOf(DataType t) const {
  return FindIndex(types_, t, InputFeature::kType);
}

bool Vocabulary::Contains(const Context& c) const {
  return std::find(natures_.begin(), natures_.end(), c.nature) !=
             natures_.end() &&
         std::find(types_.begin(), types_.end(), c.type) != types_.end();
}

std::size_t FeatureVector::popcount() const {
  return static_cast<std::size_t>(
      std::count_if(bits_.begin(), bits_.end(), [](auto b) { return b != 0; }));
}

std::string FeatureVector::ToString() const {
  std::string out;
  for (auto b : bits_) out += b ? '1' : '0';
  return out;
}

Vocabulary BuildVocabulary(const std::vector<FeatureView>& views) {
  if (views.empty()) {
    throw Error(ErrorKind::kInvalidArgument,
                "cannot build a vocabulary from zero records");
  }
  std::vector<DataNature> natures;
  std::vector<DataType> types;
  for (const auto& v : views) {
    natures.push_back(v.inputs.nature);
    types.push_back(v.inputs.type);
  }
  return Vocabulary(std::move(natures), std::move(types));
}

FeatureVector Encode(const Context& inputs, const Vocabulary& vocab) {
  std::vector<std::uint8_t> bits(vocab.width(), 0);
  bits[vocab.block_offset(InputFeature::kNature) + vocab.IndexOf(inputs.nature)] = 1;
  bits[vocab.block_offset(InputFeature::kType) + vocab.IndexOf(inputs.type)] = 1;
  return FeatureVector(std::move(bits));
}

std::size_t DecodeBlock(const FeatureVector& v, const Vocabulary& vocab,
                        InputFeature f) {
  if (v.size() != vocab.width()) {
    throw Error(ErrorKind::kInvalidArgument,
                "feature vector width " + std::to_string(v.size()) +
                    " does not match vocabulary width " +
                    std::to_string(vocab.width()));
  }
  const std::size_t offset = vocab.block_offset(f);
  std::size_t found = vocab.block_size(f);
  for (std::size_t i = 0; i < vocab.block_size(f); ++i) {
    if (!v[offset + i]) continue;
    if (found != vocab.block_size(f)) {
      throw Error(ErrorKind::kInvalidArgument,
                  "feature vector has several bits set in the " +
                      std::string(ToString(f)) + " block");
    }
    found = i;
  }
  if (found == vocab.block_size(f)) {
    throw Error(ErrorKind::kInvalidArgument,
                "feature vector has no bit set in the " +
                    std::string(ToString(f)) + " block");
  }
  return found;
}

Context Decode(const FeatureVector& v, const Vocabulary& vocab) {
  return {vocab.natures()[DecodeBlock(v, vocab, InputFeature::kNature)],
          vocab.types()[DecodeBlock(v, vocab, InputFeature::kType)]};
}

std::size_t HammingDistance(const FeatureVector& a, const FeatureVector& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::kInvalidArgument,
                "Hamming distance between vectors of different width");
  }
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

Ratio ParseRatio(std::string_view text) {
  Ratio r;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    r.numerator = ParseUnsigned(text.substr(0, slash));
    r.denominator = ParseUnsigned(text.substr(slash + 1));
  } else {
    double value = 0.0;
    const auto [ptr, ec] =
        std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      throw Error(ErrorKind::kInvalidArgument,
                  "invalid ratio '" + std::string(text) + "'");
    }
    if (!(value >= 0.0 && value <= 1.0)) {
      throw Error(ErrorKind::kInvalidArgument,
                  "ratio must lie in [0, 1], got '" + std::string(text) + "'");
    }
    r.numerator = static_cast<std::uint64_t>(value * 1000.0 + 0.5);
    r.denominator = 1000;
  }
  if (r.denominator == 0 || r.numerator > r.denominator) {
    throw Error(ErrorKind::kInvalidArgument,
                "ratio must lie in [0, 1], got '" + std::string(text) + "'");
  }
  const std::uint64_t g = std::gcd(r.numerator, r.denominator);
  if (g > 1) {
    r.numerator /= g;
    r.denominator /= g;
  }
  return r;
}

std::string ToString(const Ratio& r) {
  return std::to_string(r.numerator) + "/" + std::to_string(r.denominator);
}

SplitResult SplitTrainTest(std::size_t n, Ratio ratio, std::uint64_t seed) {
  if (ratio.denominator == 0 || ratio.numerator > ratio.denominator) {
    throw Error(ErrorKind::kInvalidArgument, "split ratio must lie in [0, 1]");
  }
  if (ratio.denominator > (std::uint64_t{1} << 32)) {
    throw Error(ErrorKind::kInvalidArgument, "split ratio denominator too large");
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(seed);
  rng.Shuffle(order);

  // floor(n * num / den) as q * num + floor(r * num / den) with n = q * den + r,
  // which stays in range while den <= 2^32.
  const std::uint64_t q = n / ratio.denominator;
  const std::uint64_t r = n % ratio.denominator;
  const auto train_size = static_cast<std::size_t>(
      q * ratio.numerator + r * ratio.numerator / ratio.denominator);

  SplitResult result;
  result.seed = seed;
  result.ratio = ratio;
  result.train.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(train_size));
  result.test.assign(order.begin() + static_cast<std::ptrdiff_t>(train_size), order.end());
  return result;
}

}  // namespace mlopsrec
