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

#include "knnbv/io.hpp"

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace knnbv {

// Values of one test point against the training set, indexed by point id.
// Exact engines fill rationals (and doubles rounded from them); Monte Carlo
// fills doubles only.
struct TestPointValues {
  std::vector<BigRat> rationals;
  std::vector<double> doubles;
  bool exact = false;
};

// Binary datasets run a single game; multi-class datasets average the
// one-vs-one decomposition, which multiplies exact denominators by
// num_classes - 1. stream_id feeds the per-test Monte Carlo substream so
// results do not depend on evaluation order.
TestPointValues value_test_point(const Dataset& train, const FeatureVector& test_features,
                                 int test_label, const RunConfig& config, std::uint64_t stream_id);

// Deterministic fraction split: ids shuffled by seed, round(fraction * n)
// rows (at least 1, at most n - 1) become the test set, both halves keep
// ascending original row order and the parent's class count.
std::pair<Dataset, Dataset> split_train_test(const Dataset& all, double fraction,
                                             std::uint64_t seed);

// Loads the training set from config.train_path and the test set from
// config.test_path, or carves it out via the fraction split when no test
// file is given.
std::pair<Dataset, Dataset> load_train_test(const RunConfig& config);

// Full pipeline on preloaded datasets: per-test games valued (in parallel
// across test points), averaged in fixed index order, report assembled.
ValuationReport run_value_on(const RunConfig& config, const Dataset& train, const Dataset& test);

// Same, loading the train set from config.train_path and the test set from
// config.test_path or the fraction split; writes out_path / csv_path when
// set.
ValuationReport run_value(const RunConfig& config);

// Times the configured engine end-to-end (game preparation plus solve) on a
// synthetic 32-dimensional Gaussian dataset of each size with one fixed test
// point, single-threaded. A row whose run exceeds budget_secs is marked
// timed out and larger sizes are skipped (also marked). The slope is the
// log-log least-squares fit over completed rows (valid when there are at
// least two).
BenchResult run_bench(const RunConfig& config, const std::vector<int>& sizes);

// Least-squares slope of log y against log x. Needs >= 2 points; y is
// clamped to 1e-12 to keep the logs finite.
double fit_loglog_slope(const std::vector<std::pair<double, double>>& points);

// Static chunking over [begin, end); thread count 0 means hardware
// concurrency. The body must write only to slots owned by its index. The
// first exception thrown by any body is rethrown after all threads join.
void parallel_for(int begin, int end, int threads, const std::function<void(int)>& body);

}  // namespace knnbv
