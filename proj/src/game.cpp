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
#include "knnbv/game.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace knnbv {

void PreparedGame::validate() const {
  if (n < 1) throw std::invalid_argument("game: empty");
  if (k < 1 || k > n) throw std::invalid_argument("game: k must be in [1, n]");
  if (static_cast<int>(order.size()) != n || static_cast<int>(signed_weights.size()) != n)
    throw std::invalid_argument("game: inconsistent sizes");
  for (int r = 2; r <= n; ++r)
    if (std::llabs(signed_weights[r - 1]) > std::llabs(signed_weights[r - 2]))
      throw std::invalid_argument("game: weight magnitudes must be non-increasing in rank");
  for (auto w : signed_weights)
    if (std::llabs(w) > W) throw std::invalid_argument("game: weight magnitude exceeds W");
}

std::vector<std::int64_t> discretize_weights(const std::vector<double>& raw, int bits) {
  if (raw.empty()) throw std::invalid_argument("discretize_weights: empty input");
  if (bits < 1) throw std::invalid_argument("discretize_weights: bits must be >= 1");
  double max_raw = 0.0;
  for (double v : raw) {
    if (!std::isfinite(v) || v < 0.0)
      throw std::invalid_argument("discretize_weights: raw weights must be finite and >= 0");
    max_raw = std::max(max_raw, v);
  }
  std::vector<std::int64_t> levels(raw.size(), 0);
  if (max_raw == 0.0) return levels;
  const double top = static_cast<double>((std::int64_t{1} << bits) - 1);
  for (std::size_t i = 0; i < raw.size(); ++i)
    levels[i] = static_cast<std::int64_t>(std::llround(raw[i] / max_raw * top));
  return levels;
}

std::vector<double> scheme_weights(const std::vector<double>& dists, WeightScheme scheme,
                                   double param) {
  std::vector<double> raw(dists.size());
  switch (scheme) {
    case WeightScheme::uniform:
      std::fill(raw.begin(), raw.end(), 1.0);
      break;
    case WeightScheme::inverse_distance:
      if (param <= 0.0) throw std::invalid_argument("inverse-distance epsilon must be > 0");
      for (std::size_t i = 0; i < dists.size(); ++i) raw[i] = 1.0 / (dists[i] + param);
      break;
    case WeightScheme::rbf:
      if (param <= 0.0) throw std::invalid_argument("rbf sigma must be > 0");
      for (std::size_t i = 0; i < dists.size(); ++i)
        raw[i] = std::exp(-(dists[i] * dists[i]) / (2.0 * param * param));
      break;
  }
  return raw;
}

namespace {

// Ranks points by (distance, id) and returns the game skeleton shared by the
// binary and multi-class paths: order + discretized magnitudes in rank space.
struct RankedWeights {
  std::vector<int> order;
  std::vector<std::int64_t> magnitudes;
};

RankedWeights rank_and_discretize(const Dataset& train, const FeatureVector& test_features,
                                  const GameSpec& spec) {
  if (train.n() == 0) throw std::invalid_argument("prepare_game: empty dataset");
  if (spec.k < 1 || spec.k > train.n())
    throw std::invalid_argument("prepare_game: k must be in [1, n]");
  if (test_features.size() != train.d())
    throw std::invalid_argument("prepare_game: test feature dimension mismatch");
  if (!test_features.allFinite() || !train.features.allFinite())
    throw std::invalid_argument("prepare_game: non-finite feature");

  const Eigen::VectorXd dists = pairwise_distances(train.features, test_features, spec.metric);
  for (Eigen::Index i = 0; i < dists.size(); ++i)
    if (!std::isfinite(dists[i])) throw std::invalid_argument("prepare_game: non-finite distance");

  RankedWeights rw;
  rw.order.resize(train.n());
  std::iota(rw.order.begin(), rw.order.end(), 0);
  std::sort(rw.order.begin(), rw.order.end(), [&](int a, int b) {
    if (dists[a] != dists[b]) return dists[a] < dists[b];
    return a < b;
  });

  // Uniform weights are exactly 1 by definition; discretization applies only
  // to the continuous schemes (any common rescaling would leave the game
  // unchanged but break the unit-weight representation downstream).
  if (spec.weight_scheme == WeightScheme::uniform) {
    rw.magnitudes.assign(static_cast<std::size_t>(train.n()), 1);
    return rw;
  }
  std::vector<double> sorted_dists(train.n());
  for (int r = 0; r < train.n(); ++r) sorted_dists[r] = dists[rw.order[r]];
  const std::vector<double> raw = scheme_weights(sorted_dists, spec.weight_scheme, spec.scheme_param);
  rw.magnitudes = discretize_weights(raw, spec.bits);
  return rw;
}

std::int64_t top_k_magnitude_sum(const std::vector<std::int64_t>& mags, int k) {
  std::int64_t w = 0;
  for (int r = 0; r < k && r < static_cast<int>(mags.size()); ++r) w += mags[r];
  return w;
}

PreparedGame assemble_game(const RankedWeights& rw, const std::vector<std::int64_t>& signed_w,
                           int k, int test_label, bool uniform) {
  PreparedGame g;
  g.order = rw.order;
  g.signed_weights = signed_w;
  g.k = k;
  g.n = static_cast<int>(signed_w.size());
  g.W = uniform ? k + 1 : top_k_magnitude_sum(rw.magnitudes, k);
  g.test_label = test_label;
  g.validate();
  return g;
}

}  // namespace

PreparedGame prepare_game(const Dataset& train, const FeatureVector& test_features, int test_label,
                          const GameSpec& spec) {
  if (train.num_classes > 2)
    throw std::invalid_argument("prepare_game: dataset is not binary; use decompose_multiclass");
  const RankedWeights rw = rank_and_discretize(train, test_features, spec);
  std::vector<std::int64_t> sw(rw.magnitudes.size());
  for (std::size_t r = 0; r < sw.size(); ++r) {
    const int label = train.labels[rw.order[r]];
    sw[r] = label == test_label ? rw.magnitudes[r] : -rw.magnitudes[r];
  }
  return assemble_game(rw, sw, spec.k, test_label, spec.weight_scheme == WeightScheme::uniform);
}

PreparedGame game_from_signed_weights(const std::vector<std::int64_t>& signed_weights, int k) {
  PreparedGame g;
  g.n = static_cast<int>(signed_weights.size());
  g.order.resize(g.n);
  std::iota(g.order.begin(), g.order.end(), 0);
  g.signed_weights = signed_weights;
  g.k = k;
  g.test_label = 0;
  bool uniform = true;
  std::vector<std::int64_t> mags(g.n);
  for (int r = 0; r < g.n; ++r) {
    mags[r] = std::llabs(signed_weights[r]);
    uniform = uniform && mags[r] == 1;
  }
  g.W = uniform ? k + 1 : top_k_magnitude_sum(mags, k);
  g.validate();
  return g;
}

std::vector<BinarySubgame> decompose_multiclass(const Dataset& train,
                                                const FeatureVector& test_features, int test_label,
                                                const GameSpec& spec) {
  if (train.num_classes < 2)
    throw std::invalid_argument("decompose_multiclass: need at least 2 classes");
  const RankedWeights rw = rank_and_discretize(train, test_features, spec);
  std::vector<BinarySubgame> out;
  for (int c = 0; c < train.num_classes; ++c) {
    if (c == test_label) continue;
    BinarySubgame sub;
    sub.negative_class = c;
    sub.zero_mask.resize(rw.order.size());
    std::vector<std::int64_t> sw(rw.order.size());
    std::vector<std::int64_t> mags(rw.order.size());
    for (std::size_t r = 0; r < sw.size(); ++r) {
      const int label = train.labels[rw.order[r]];
      if (label == test_label) {
        sw[r] = rw.magnitudes[r];
      } else if (label == c) {
        sw[r] = -rw.magnitudes[r];
      } else {
        sw[r] = 0;
        sub.zero_mask[r] = true;
      }
      mags[r] = std::llabs(sw[r]);
    }
    // Zero-masked points keep their rank slot, so magnitudes are
    // non-increasing only along the unmasked subsequence; W bounds every
    // top-k sum because masked points contribute nothing.
    std::sort(mags.begin(), mags.end(), std::greater<>());
    sub.base.order = rw.order;
    sub.base.signed_weights = std::move(sw);
    sub.base.k = spec.k;
    sub.base.n = static_cast<int>(rw.order.size());
    sub.base.test_label = test_label;
    const bool uniform = spec.weight_scheme == WeightScheme::uniform && train.num_classes == 2;
    sub.base.W = uniform ? spec.k + 1 : top_k_magnitude_sum(mags, spec.k);
    out.push_back(std::move(sub));
  }
  return out;
}

std::vector<double> average_over_tests(const std::vector<std::vector<double>>& per_test) {
  if (per_test.empty()) throw std::invalid_argument("average_over_tests: empty list");
  std::vector<double> mean(per_test.front().size(), 0.0);
  for (const auto& v : per_test) {
    if (v.size() != mean.size()) throw std::invalid_argument("average_over_tests: length mismatch");
    for (std::size_t i = 0; i < v.size(); ++i) mean[i] += v[i];
  }
  for (auto& m : mean) m /= static_cast<double>(per_test.size());
  return mean;
}

std::vector<BigRat> average_over_tests(const std::vector<std::vector<BigRat>>& per_test) {
  if (per_test.empty()) throw std::invalid_argument("average_over_tests: empty list");
  std::vector<BigRat> mean(per_test.front().size(), BigRat(0));
  for (const auto& v : per_test) {
    if (v.size() != mean.size()) throw std::invalid_argument("average_over_tests: length mismatch");
    for (std::size_t i = 0; i < v.size(); ++i) mean[i] += v[i];
  }
  const BigRat count(static_cast<long long>(per_test.size()));
  for (auto& m : mean) m /= count;
  return mean;
}

double evaluate_knn_accuracy(const Dataset& train, const std::vector<int>& train_subset,
                             const Dataset& test_set, const GameSpec& spec) {
  if (test_set.n() == 0) throw std::invalid_argument("evaluate_knn_accuracy: empty test set");
  if (train_subset.empty()) return 0.0;  // v(empty) = 0 for every test point

  FeatureMatrix sub(train_subset.size(), train.d());
  for (std::size_t j = 0; j < train_subset.size(); ++j)
    sub.row(j) = train.features.row(train_subset[j]);

  int correct = 0;
  std::vector<std::pair<double, int>> by_dist(train_subset.size());
  std::vector<int> votes;
  for (int t = 0; t < test_set.n(); ++t) {
    const Eigen::VectorXd d = pairwise_distances(sub, test_set.features.row(t), spec.metric);
    for (std::size_t j = 0; j < train_subset.size(); ++j)
      by_dist[j] = {d[static_cast<Eigen::Index>(j)], train_subset[j]};
    const int take = std::min<int>(spec.k, static_cast<int>(by_dist.size()));
    std::partial_sort(by_dist.begin(), by_dist.begin() + take, by_dist.end());
    votes.assign(train.num_classes, 0);
    for (int j = 0; j < take; ++j) ++votes[train.labels[by_dist[j].second]];
    const int truth = test_set.labels[t];
    bool strict = votes[truth] > 0;
    for (int c = 0; c < train.num_classes && strict; ++c)
      if (c != truth && votes[c] >= votes[truth]) strict = false;
    correct += strict ? 1 : 0;
  }
  return static_cast<double>(correct) / static_cast<double>(test_set.n());
}

WeightScheme parse_weight_scheme(const std::string& s, double* param_out) {
  const auto colon = s.find(':');
  const std::string name = s.substr(0, colon);
  double param = 0.0;
  bool has_param = colon != std::string::npos;
  if (has_param) {
    param = std::stod(s.substr(colon + 1));
    if (!(param > 0.0)) throw std::invalid_argument("weight scheme parameter must be > 0: " + s);
  }
  if (name == "uniform") {
    if (param_out) *param_out = 0.0;
    return WeightScheme::uniform;
  }
  if (name == "inverse" || name == "inverse-distance") {
    if (param_out) *param_out = has_param ? param : 1e-6;
    return WeightScheme::inverse_distance;
  }
  if (name == "rbf") {
    if (param_out) *param_out = has_param ? param : 1.0;
    return WeightScheme::rbf;
  }
  throw std::invalid_argument("unknown weight scheme: " + s);
}

std::string weight_scheme_name(WeightScheme s, double param) {
  switch (s) {
    case WeightScheme::uniform: return "uniform";
    case WeightScheme::inverse_distance: return "inverse:" + std::to_string(param);
    case WeightScheme::rbf: return "rbf:" + std::to_string(param);
  }
  return "uniform";
}

}  // namespace knnbv
