/*
 * Copyright 2026 The knnbv Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include "knnbv/bigint.hpp"
#include "knnbv/dataset.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace knnbv {

enum class WeightScheme { uniform, inverse_distance, rbf };

struct GameSpec {
  int k = 5;
  WeightScheme weight_scheme = WeightScheme::uniform;
  double scheme_param = 1.0;  // epsilon for inverse_distance, sigma for rbf
  Metric metric = Metric::euclidean;
  int bits = 7;  // discretization levels 2^bits
};

// A test-point-specific binary voting game. Points are handled in rank space:
// rank r in [1, n] is the r-th closest training point; order[r-1] maps rank
// back to the original point id. signed_weights[r-1] carries the discretized
// magnitude with sign +1 when the training label equals the test label, -1
// otherwise. Magnitudes are non-increasing in r because every weight scheme
// is a non-increasing function of distance.
struct PreparedGame {
  std::vector<int> order;
  std::vector<std::int64_t> signed_weights;
  int k = 0;
  int n = 0;
  std::int64_t W = 0;  // upper bound on any top-k magnitude sum
  int test_label = 0;

  std::int64_t weight_of_rank(int r) const { return signed_weights[r - 1]; }
  bool positive_rank(int r) const { return signed_weights[r - 1] >= 0; }
  bool is_unit_weighted() const {
    for (auto w : signed_weights)
      if (w != 1 && w != -1) return false;
    return true;
  }
  void validate() const;
};

// One binary one-vs-one slice of a multi-class game: points of the test
// label keep +magnitude, points of negative_class get -magnitude, all other
// points stay in the game with weight zero.
struct BinarySubgame {
  PreparedGame base;
  int negative_class = 0;
  std::vector<bool> zero_mask;  // by rank-1 index
};

// Exact per-point values as numerator / 2^denominator_log2, indexed by the
// original point id.
struct ExactValueVector {
  std::vector<BigInt> numerators;
  int denominator_log2 = 0;

  double value(int id) const { return ratio_to_double(numerators[id], denominator_log2); }
  BigRat rational(int id) const {
    return BigRat(numerators[id], pow2(static_cast<unsigned>(denominator_log2)));
  }
  std::vector<double> to_doubles() const {
    std::vector<double> v(numerators.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = value(static_cast<int>(i));
    return v;
  }
  bool operator==(const ExactValueVector& o) const = default;
};

// round(raw / max_raw * (2^bits - 1)); all zero when max_raw == 0.
std::vector<std::int64_t> discretize_weights(const std::vector<double>& raw, int bits);

// Raw (pre-discretization) scheme weights at the given distances.
std::vector<double> scheme_weights(const std::vector<double>& dists, WeightScheme scheme,
                                   double param);

PreparedGame prepare_game(const Dataset& train, const FeatureVector& test_features,
                          int test_label, const GameSpec& spec);

// Build a game directly from signed integer weights already sorted by
// distance rank (test construction path). W defaults to the top-k magnitude
// sum, or k+1 when every magnitude is 1.
PreparedGame game_from_signed_weights(const std::vector<std::int64_t>& signed_weights, int k);

std::vector<BinarySubgame> decompose_multiclass(const Dataset& train,
                                                const FeatureVector& test_features, int test_label,
                                                const GameSpec& spec);

// Elementwise mean in fixed index order.
std::vector<double> average_over_tests(const std::vector<std::vector<double>>& per_test);
std::vector<BigRat> average_over_tests(const std::vector<std::vector<BigRat>>& per_test);

// Accuracy of an unweighted kNN vote over test_set given the training subset
// (original ids). A strict plurality of the true label counts as correct;
// ties and the empty subset count as incorrect.
double evaluate_knn_accuracy(const Dataset& train, const std::vector<int>& train_subset,
                             const Dataset& test_set, const GameSpec& spec);

WeightScheme parse_weight_scheme(const std::string& s, double* param_out);
std::string weight_scheme_name(WeightScheme s, double param);

}  // namespace knnbv
