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
#include "knnbv/game.hpp"

#include <cstdint>
#include <vector>

namespace knnbv {

// Full-enumeration exact reference engine. Exponential in n; every faster
// engine is tested against it. Guarded by a subset-count cap.

inline constexpr int kDefaultEnumerationCap = 20;

// Number of subsets S of the points excluding z_i whose prediction flips when
// z_i joins. The Banzhaf value equals sign * count / 2^(n-1); the sign is
// fixed by the label (a point matching the test label can only flip 0 -> 1,
// a mismatched point only 1 -> 0).
struct PivotalCount {
  int id = 0;
  BigInt count;
  int sign = 1;
};

// v(S) with S a bitmask over rank positions: bit r-1 set iff the rank-r point
// (r = 1 closest) is in S. Value is 1 iff the top-min(|S|,k) signed weights
// sum strictly positive; empty S and exact ties give 0.
int value_function(std::uint32_t rank_mask, const PreparedGame& game);

// v(S) with S given by original point ids.
int value_function(const std::vector<int>& ids, const PreparedGame& game);

// Dense table of v over all 2^n rank masks, indexed by mask.
std::vector<std::uint8_t> build_value_table(const PreparedGame& game,
                                            int cap = kDefaultEnumerationCap);

// Exact Banzhaf values by enumerating all 2^(n-1) coalitions per point.
ExactValueVector banzhaf_exact_bruteforce(const PreparedGame& game,
                                          int cap = kDefaultEnumerationCap);

// Exact Shapley values (coalition form: marginals weighted by 1/(n*C(n-1,s))),
// indexed by original id. Efficiency holds exactly: the values sum to v(D).
std::vector<BigRat> shapley_exact_bruteforce(const PreparedGame& game,
                                             int cap = kDefaultEnumerationCap);

PivotalCount pivotal_count(const PreparedGame& game, int id,
                           int cap = kDefaultEnumerationCap);

// Exact Banzhaf values for a multi-class dataset under the one-vs-all value
// function v(S) = (1/(|Y|-1)) * sum_c v_c(S), enumerated directly (no
// per-class decomposition). Indexed by original id.
std::vector<BigRat> banzhaf_exact_multiclass_bruteforce(
    const Dataset& train, const FeatureVector& test_features, int test_label,
    const GameSpec& spec, int cap = kDefaultEnumerationCap);

}  // namespace knnbv
