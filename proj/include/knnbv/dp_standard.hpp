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

// Subset-count table excluding rank i. f(w, s, m) is the number of subsets
// S of the other n-1 points with |S| = s whose top-min(s,k) signed-weight
// sum is w and whose min(s,k)-th nearest member has rank m (m = 0 only for
// the empty set). Counts for s <= k are materialized densely over
// w in [-W, W]; for s > k they factor as f(w, k, m) times a binomial tail
// and are produced on demand, never stored (rows with m <= i are never
// needed by the value aggregation at all).
struct FTable {
  int n = 0;
  int k = 0;
  int i = 0;  // excluded rank, 1-based
  std::int64_t W = 0;
  int s_dense = 0;  // dense size range [0, s_dense] = [0, min(k, n-1)]
  std::vector<BigInt> dense;

  // Dense accessor, s <= s_dense; out-of-range w reads as 0.
  const BigInt& dense_at(std::int64_t w, int s, int m) const;

  // Full f semantics for any s in [0, n-1], computing the binomial tail for
  // s > k on demand (tail members must be farther than m and must dodge i,
  // hence C(n-m, s-k) for m > i but C(n-m-1, s-k) for m < i).
  BigInt entry(std::int64_t w, int s, int m) const;
};

FTable build_f_table(const PreparedGame& game, int i);

// Exact Banzhaf values in O(W n^4): per point, the count of coalitions it
// flips 0 -> 1 minus the count it flips 1 -> 0, over 2^(n-1). For a point
// with nonzero weight one of the two counts is identically zero (a matched-
// label point never demotes a win and vice versa), recovering the signed
// single-branch formulas; zero-weight points (multi-class masking) can flip
// both ways by displacing the k-th neighbor, so both branches contribute.
ExactValueVector banzhaf_dp_standard(const PreparedGame& game);

}  // namespace knnbv
