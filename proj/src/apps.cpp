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
#include "knnbv/apps.hpp"

#include "knnbv/errors.hpp"
#include "knnbv/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace knnbv {

namespace {

// Value ties always break by ascending id, so every ranking is deterministic.
std::vector<int> ids_by_descending_value(const std::vector<double>& values) {
  std::vector<int> ids(values.size());
  std::iota(ids.begin(), ids.end(), 0);
  std::sort(ids.begin(), ids.end(), [&](int a, int b) {
    if (values[a] != values[b]) return values[a] > values[b];
    return a < b;
  });
  return ids;
}

std::vector<int> ids_by_ascending_value(const std::vector<double>& values) {
  std::vector<int> ids(values.size());
  std::iota(ids.begin(), ids.end(), 0);
  std::sort(ids.begin(), ids.end(), [&](int a, int b) {
    if (values[a] != values[b]) return values[a] < values[b];
    return a < b;
  });
  return ids;
}

void check_curve_args(const char* who, int n, std::size_t values_len, int steps, int max_steps) {
  if (static_cast<int>(values_len) != n)
    throw std::invalid_argument(std::string(who) + ": values length does not match dataset size");
  if (steps < 0 || steps > max_steps)
    throw std::invalid_argument(std::string(who) + ": steps out of range");
}

std::vector<int> ids_where(const std::vector<bool>& keep) {
  std::vector<int> ids;
  for (int i = 0; i < static_cast<int>(keep.size()); ++i)
    if (keep[i]) ids.push_back(i);
  return ids;
}

}  // namespace

Curve point_removal_curve(const Dataset& train, const Dataset& test,
                          const std::vector<double>& values, const GameSpec& spec, int steps) {
  const int n = train.n();
  check_curve_args("point_removal_curve", n, values.size(), steps, n);
  const std::vector<int> order = ids_by_descending_value(values);

  Curve curve;
  curve.k = spec.k;
  std::vector<bool> keep(n, true);
  for (int t = 0; t <= steps; ++t) {
    if (t > 0) keep[order[t - 1]] = false;
    curve.x.push_back(t);
    curve.y.push_back(evaluate_knn_accuracy(train, ids_where(keep), test, spec));
  }
  return curve;
}

Curve data_selection_curve(const Dataset& train, const Dataset& test,
                           const std::vector<double>& values, const GameSpec& spec, int warmup,
                           int steps, std::uint64_t seed) {
  const int n = train.n();
  if (warmup < 1) throw std::invalid_argument("data_selection_curve: warmup must be >= 1");
  if (warmup > n) throw std::invalid_argument("data_selection_curve: warmup exceeds dataset size");
  check_curve_args("data_selection_curve", n, values.size(), steps, n - warmup);

  std::vector<int> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  SplitMix64 rng(seed);
  rng.shuffle(ids);
  std::vector<bool> selected(n, false);
  for (int i = 0; i < warmup; ++i) selected[ids[i]] = true;

  // Ranking covers only non-warmup points, so step n - warmup trains on all
  // of D.
  std::vector<int> pool;
  for (int id : ids_by_descending_value(values))
    if (!selected[id]) pool.push_back(id);

  Curve curve;
  curve.k = spec.k;
  curve.seed = seed;
  for (int t = 0; t <= steps; ++t) {
    if (t > 0) selected[pool[t - 1]] = true;
    curve.x.push_back(t);
    curve.y.push_back(evaluate_knn_accuracy(train, ids_where(selected), test, spec));
  }
  return curve;
}

std::pair<Dataset, NoiseMask> inject_label_noise(const Dataset& train, double rate,
                                                 std::uint64_t seed) {
  if (!(rate > 0.0 && rate < 1.0))
    throw std::invalid_argument("inject_label_noise: rate must be in (0, 1)");
  if (train.num_classes < 2)
    throw std::invalid_argument("inject_label_noise: need at least two classes");

  const int n = train.n();
  const int count = static_cast<int>(std::llround(rate * n));
  std::vector<int> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  SplitMix64 rng(seed);
  rng.shuffle(ids);
  ids.resize(count);
  std::sort(ids.begin(), ids.end());

  Dataset corrupted = train;
  for (int id : ids) {
    // Uniform over the other num_classes - 1 labels.
    const int offset = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(train.num_classes - 1)));
    corrupted.labels[id] = (corrupted.labels[id] + offset) % train.num_classes;
  }

  NoiseMask mask;
  mask.flipped_ids = std::move(ids);
  mask.rate = rate;
  mask.seed = seed;
  return {std::move(corrupted), std::move(mask)};
}

DetectionScores mislabel_detection_scores(const std::vector<double>& values,
                                          const NoiseMask& mask, double rate) {
  const int n = static_cast<int>(values.size());
  std::vector<bool> flipped(n, false);
  for (int id : mask.flipped_ids) {
    if (id < 0 || id >= n)
      throw std::invalid_argument("mislabel_detection_scores: mask id out of range");
    flipped[id] = true;
  }
  const int positives = static_cast<int>(mask.flipped_ids.size());

  int predicted = static_cast<int>(std::llround(rate * n));
  predicted = std::max(0, std::min(predicted, n));
  const std::vector<int> suspects = ids_by_ascending_value(values);
  int tp = 0;
  for (int i = 0; i < predicted; ++i) tp += flipped[suspects[i]] ? 1 : 0;

  DetectionScores s;
  s.precision = predicted > 0 ? static_cast<double>(tp) / predicted : 0.0;
  s.recall = positives > 0 ? static_cast<double>(tp) / positives : 0.0;
  s.f1 = s.precision + s.recall > 0.0 ? 2.0 * s.precision * s.recall / (s.precision + s.recall)
                                      : 0.0;

  // Mann-Whitney AUC of the flipped indicator against -value: suspicion
  // grows as value falls, ties count half via midranks.
  const int negatives = n - positives;
  if (positives == 0 || negatives == 0) {
    s.auc_roc = 0.5;
    return s;
  }
  std::vector<int> by_suspicion(n);
  std::iota(by_suspicion.begin(), by_suspicion.end(), 0);
  std::sort(by_suspicion.begin(), by_suspicion.end(), [&](int a, int b) {
    return values[a] > values[b];  // least suspect first
  });
  double positive_rank_sum = 0.0;
  int i = 0;
  while (i < n) {
    int j = i;
    while (j < n && values[by_suspicion[j]] == values[by_suspicion[i]]) ++j;
    const double midrank = 0.5 * static_cast<double>(i + 1 + j);  // ranks are 1-based
    for (int q = i; q < j; ++q)
      if (flipped[by_suspicion[q]]) positive_rank_sum += midrank;
    i = j;
  }
  s.auc_roc = (positive_rank_sum - 0.5 * positives * (positives + 1.0)) /
              (static_cast<double>(positives) * negatives);
  return s;
}

Curve label_flip_repair_curve(const Dataset& train_corrupted, const Dataset& test,
                              const std::vector<double>& values, const GameSpec& spec, int steps) {
  if (train_corrupted.num_classes != 2)
    throw KnnbvError(ErrorCategory::unsupported,
                     "label_flip_repair_curve: binary labels required");
  const int n = train_corrupted.n();
  check_curve_args("label_flip_repair_curve", n, values.size(), steps, n);
  const std::vector<int> order = ids_by_ascending_value(values);

  std::vector<int> all_ids(n);
  std::iota(all_ids.begin(), all_ids.end(), 0);
  Dataset repaired = train_corrupted;

  Curve curve;
  curve.k = spec.k;
  for (int t = 0; t <= steps; ++t) {
    if (t > 0) {
      const int id = order[t - 1];
      repaired.labels[id] = 1 - repaired.labels[id];
    }
    curve.x.push_back(t);
    curve.y.push_back(evaluate_knn_accuracy(repaired, all_ids, test, spec));
  }
  return curve;
}

}  // namespace knnbv
