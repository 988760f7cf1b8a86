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

#include <vector>

namespace knnbv {

// g[m] = sum of C(n-m, j) for j in [0, n-k-1]: the number of ways to extend
// a top-k block ending at rank m to any coalition size in [k, n-1]. 1-based;
// g[0] is unused. All zeros when k = n (no tail sizes exist).
using GVector = std::vector<BigInt>;

// O(n) big-integer operations total: seeds g[n] = 1 and walks m downward
// with g(m) = 2 g(m+1) - C(n-m-1, n-k-1), updating the correction binomial
// by a ratio identity (it vanishes for m > k, so at most k+1 terms differ
// from plain doubling).
GVector compute_g(int n, int k);

// Table count representation: a 62-bit unsigned fast path when the largest
// possible table entry provably fits, otherwise arbitrary precision. The
// force modes exist so tests can exercise both instantiations on the same
// small game.
enum class CountMode { autodetect, force_u64, force_big };

// Exact Banzhaf values in O(Wkn^2): same output contract as
// banzhaf_dp_standard (upward-flip count minus downward-flip count over
// 2^(n-1)). The s <= k phase keeps only two rolling prefix-sum layers
// M(w, s, m) = sum_{m'<m, m' != i} f(w, s, m'); the s > k tail aggregates
// f(w, k, m) * g(m) per rank without materializing any size-indexed table.
// Weight values are enumerated from per-layer reachable-sum sets rather
// than the full [-W, W] range.
ExactValueVector banzhaf_dp_efficient(const PreparedGame& game,
                                      CountMode mode = CountMode::autodetect);

}  // namespace knnbv
