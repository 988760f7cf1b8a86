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
#include <utility>
#include <vector>

namespace knnbv {

// Count tables for the unit-weight engine, materialized per rank so tests
// can probe individual entries. W = k + 1 throughout; all entries are
// arbitrary precision because the signed tables hold 2^(n-i)-scale counts.
//
// f[i] (valid i in [0, n]): subsets of the i nearest points keyed by
// (top-min(size, k) signed sum, size), size in [0, k].
// b[i] (valid i in [1, n+1]): same key over subsets of the points from rank
// i outward. B[i] is the prefix of b[i] over sizes 0..t.
struct ForwardBackwardTables {
  int n = 0;
  int k = 0;
  std::int64_t W = 0;
  std::vector<std::vector<BigInt>> f, b, B;

  const BigInt& f_at(int i, std::int64_t w, int s) const;
  const BigInt& b_at(int i, std::int64_t w, int s) const;
  const BigInt& B_at(int i, std::int64_t w, int t) const;
};

// plus[i](w, t) (valid i in [1, n+1]): subsets of the points from rank i
// outward whose t-th nearest member has the test label and whose top-t
// signed sum is w; membership beyond the t-th member is unconstrained, so
// entries reach 2^(n-i) scale. minus[i] mirrors for the opposite label.
// The (w=0, t=0) entries are pure recurrence seeds with no t-th member to
// carry a sign; no update or aggregation ever reads them.
struct SignedBackwardTables {
  int n = 0;
  int k = 0;
  std::int64_t W = 0;
  std::vector<std::vector<BigInt>> plus, minus;

  const BigInt& plus_at(int i, std::int64_t w, int t) const;
  const BigInt& minus_at(int i, std::int64_t w, int t) const;
};

// Fills every rank layer of all four table families (forward rank 1..n,
// backward rank n..1, signed backward per t). Requires a unit-weight game.
std::pair<ForwardBackwardTables, SignedBackwardTables> build_shared_tables(
    const PreparedGame& game);

// Which signed table supplies the displaced k-th neighbor in the tail count
// for a negatively labeled insertion. A negative point can only turn a win
// into a loss when the neighbor it ejects from the top k carries the test
// label, so matching_label is correct; opposite_label mirrors the positive
// case's table choice onto the negative case, fails exhaustive comparison
// against brute force, and exists only as a regression witness.
enum class NegativeTailTable { matching_label, opposite_label };

// Exact Banzhaf values for unit-weight games in O(n k^2) table operations:
// one shared pass over rolling table layers serves all n points, combining
// the forward layer below each rank with the backward layers above it. Big
// integers make the arithmetic itself grow with n, so end-to-end cost is
// superlinear even though the table-operation count is linear. Output
// contract matches the other exact engines. Throws unsupported for
// non-unit weights.
ExactValueVector banzhaf_dp_unweighted(
    const PreparedGame& game,
    NegativeTailTable tail = NegativeTailTable::matching_label);

}  // namespace knnbv
