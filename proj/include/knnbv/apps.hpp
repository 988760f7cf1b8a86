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

#include "knnbv/dataset.hpp"
#include "knnbv/game.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace knnbv {

// Accuracy trajectory over a sequence of ranked dataset edits. x holds step
// counts (strictly increasing, starting at 0 = untouched baseline), y the
// unweighted kNN test accuracy after each step.
struct Curve {
  std::vector<int> x;
  std::vector<double> y;
  std::string algorithm;  // id of the engine that produced the values
  std::uint64_t seed = 0;
  int k = 0;
};

// Ground truth of a label-noise injection: which points were flipped.
struct NoiseMask {
  std::vector<int> flipped_ids;  // ascending
  double rate = 0.05;
  std::uint64_t seed = 0;
};

struct DetectionScores {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  double auc_roc = 0.0;
};

// Removes the t highest-valued training points at step t (ties broken by
// ascending id) and records accuracy on the remainder, for t = 0..steps.
// Accuracy always uses the unweighted kNN vote, whatever scheme produced the
// values. Throws std::invalid_argument when steps exceeds n or values has the
// wrong length.
Curve point_removal_curve(const Dataset& train, const Dataset& test,
                          const std::vector<double>& values, const GameSpec& spec, int steps);

// Starts from `warmup` random points (drawn with the given seed) and at step
// t trains on warmup plus the t highest-valued remaining points, so step
// n - warmup trains on the full dataset. warmup must be >= 1 and
// warmup + steps <= n.
Curve data_selection_curve(const Dataset& train, const Dataset& test,
                           const std::vector<double>& values, const GameSpec& spec, int warmup,
                           int steps, std::uint64_t seed);

// Picks round(rate * n) points uniformly at random and gives each a uniformly
// random different label. Requires 0 < rate < 1. Returns the corrupted copy
// and the mask of flipped ids.
std::pair<Dataset, NoiseMask> inject_label_noise(const Dataset& train, double rate,
                                                 std::uint64_t seed);

// Flags the round(rate * n) lowest-valued points (ties broken by ascending
// id) as suspected mislabels and scores them against the mask. F1 is 0 when
// precision + recall is 0. auc_roc ranks points by ascending value (lower
// value = more suspect) with ties counted half, and is 0.5 when either class
// is empty.
DetectionScores mislabel_detection_scores(const std::vector<double>& values,
                                          const NoiseMask& mask, double rate);

// Flips the labels of the t lowest-valued points at step t (ties broken by
// ascending id) and records accuracy of the modified training set, for
// t = 0..steps. Binary datasets only; flipping is the label involution.
Curve label_flip_repair_curve(const Dataset& train_corrupted, const Dataset& test,
                              const std::vector<double>& values, const GameSpec& spec, int steps);

}  // namespace knnbv
