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
#include "knnbv/synthetic.hpp"

#include "knnbv/rng.hpp"

#include <stdexcept>
#include <vector>

namespace knnbv {

Dataset make_two_gaussians(int n, int d, double sep, std::uint64_t seed) {
  if (n <= 0 || d <= 0) throw std::invalid_argument("make_two_gaussians: n and d must be positive");
  SplitMix64 rng(seed);
  FeatureMatrix x(n, d);
  std::vector<int> labels(static_cast<std::size_t>(n));
  double half = sep / 2.0;
  for (int i = 0; i < n; ++i) {
    int label = i % 2;  // balanced classes regardless of n
    double mean = (label == 0) ? -half : half;
    for (int j = 0; j < d; ++j) x(i, j) = mean + rng.normal();
    labels[static_cast<std::size_t>(i)] = label;
  }
  return make_dataset(std::move(x), std::move(labels));
}

Dataset make_gaussian_blob(int n, int d, std::uint64_t seed) {
  if (n <= 0 || d <= 0) throw std::invalid_argument("make_gaussian_blob: n and d must be positive");
  SplitMix64 rng(seed);
  FeatureMatrix x(n, d);
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < d; ++j) x(i, j) = rng.normal();
    labels[static_cast<std::size_t>(i)] = rng.coin() ? 1 : 0;
  }
  // Degenerate single-class draws break downstream binary games; force one flip.
  bool seen0 = false, seen1 = false;
  for (int v : labels) (v == 0 ? seen0 : seen1) = true;
  if (!seen0) labels[0] = 0;
  if (!seen1) labels[0] = 1;
  return make_dataset(std::move(x), std::move(labels));
}

FeatureVector make_gaussian_test_point(int d, std::uint64_t seed) {
  if (d <= 0) throw std::invalid_argument("make_gaussian_test_point: d must be positive");
  SplitMix64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  FeatureVector t(d);
  for (int j = 0; j < d; ++j) t(j) = rng.normal();
  return t;
}

}  // namespace knnbv
