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

#include "knnbv/game.hpp"

#include <cstdint>
#include <vector>

namespace knnbv {

enum class McMethod { coalition, permutation };

const char* mc_method_name(McMethod m);
McMethod parse_mc_method(const std::string& s);

// Sampling estimate of the per-point values, indexed by point id.
// Deterministic given (game, samples, seed, method): every round draws from
// its own substream of the seed, so round order and thread layout cannot
// change the output.
struct EstimateVector {
  std::vector<double> values;
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
  McMethod method = McMethod::coalition;
};

// The closest sampled members of one coalition, by game rank. Holds at most
// `capacity` ranks ascending plus the total coalition size, and keeps the
// signed sum of the top min(k, size) weights. Capacity k suffices for
// insertion marginals; removal marginals need capacity k + 1 to see which
// member is promoted into the top k.
struct TopKWindow {
  int k = 0;
  int capacity = 0;
  std::vector<int> ranks;
  std::int64_t topk_sum = 0;
  std::int64_t coalition_size = 0;

  void reset(int k_, int capacity_);
  // Adds a member; keeps only the `capacity` closest in the buffer.
  void insert(const PreparedGame& game, int rank);
  // v(S u {rank}) - v(S) for rank outside S: joins the top k when fewer
  // than k members exist or when it is closer than the current k-th.
  int marginal_as_outsider(const PreparedGame& game, int rank) const;
  // v(S) - v(S \ {rank}) for rank inside S: zero unless rank sits in the
  // top k, in which case the (k+1)-th member (if any) is promoted.
  // Requires capacity >= k + 1.
  int marginal_as_member(const PreparedGame& game, int rank) const;
};

// One shared coalition per round (each point in with probability 1/2)
// yields every player's marginal at once: a player inside the coalition is
// scored by removal, outside by insertion. Mean of marginals is unbiased
// for the exact value because the coalition restricted to the other n-1
// players is uniform.
EstimateVector banzhaf_mc_coalition(const PreparedGame& game, std::int64_t m,
                                    std::uint64_t seed);

// Sampled-permutation weight n * C(n-1, s) / 2^(n-1) for a predecessor set
// of size s, tracked as (mantissa, exponent) so the endpoint values far
// below double range degrade to zero instead of poisoning the running
// product. Bounded by O(sqrt(n)) at s near n/2.
double permutation_sample_weight(int n, int s);

// One uniform permutation per round, traversed with a growing top-k
// window; each player's insertion marginal is weighted by
// permutation_sample_weight(n, predecessors). The sample mean over rounds
// is unbiased for the exact value (each size-s predecessor set is drawn
// with probability 1 / (n * C(n-1, s))).
EstimateVector banzhaf_mc_permutation(const PreparedGame& game, std::int64_t m,
                                      std::uint64_t seed);

// max_i |est_i - exact_i| / max_i |exact_i|; 0 when both sides are all
// zero, +infinity when the exact values are all zero but the estimate is
// not.
double deviation(const EstimateVector& estimate, const ExactValueVector& exact);

}  // namespace knnbv
