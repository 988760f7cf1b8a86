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

#include <cstdint>

namespace knnbv {

// Two isotropic Gaussians at -sep/2 and +sep/2 along every axis, one per
// class, labels balanced by alternating draws. Fully determined by seed.
Dataset make_two_gaussians(int n, int d, double sep, std::uint64_t seed);

// Standard-normal features with fair-coin binary labels; the benchmark
// workload (32-dimensional by convention).
Dataset make_gaussian_blob(int n, int d, std::uint64_t seed);

// A single standard-normal test point matching the blob distribution.
FeatureVector make_gaussian_test_point(int d, std::uint64_t seed);

}  // namespace knnbv
