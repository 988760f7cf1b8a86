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
#include "knnbv/bruteforce.hpp"

#include "knnbv/errors.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace knnbv {

namespace {

void check_cap(int n, int cap, const char* op) {
  if (n < 1) throw KnnbvError(ErrorCategory::invalid_argument, std::string(op) + ": empty game");
  // 30 is the hard mask-width ceiling; beyond it the table cannot be built
  // regardless of any user override.
  if (n > cap || n > 30)
    throw KnnbvError(ErrorCategory::cap_exceeded,
                     std::string(op) + ": n=" + std::to_string(n) +
                         " exceeds enumeration cap " + std::to_string(std::min(cap, 30)));
}

// Sum of the signed weights of the min(popcount, k) lowest set bits. Bit r-1
// carries rank r, so ascending bit order is ascending distance.
std::int64_t top_k_sum(std::uint32_t mask, int k, const std::vector<std::int64_t>& weights_by_rank) {
  std::int64_t sum = 0;
  int taken = 0;
  for (std::uint32_t bits = mask; bits != 0 && taken < k; bits &= bits - 1) {
    sum += weights_by_rank[static_cast<std::size_t>(std::countr_zero(bits))];
    ++taken;
  }
  return sum;
}

}  // namespace

int value_function(std::uint32_t rank_mask, const PreparedGame& game) {
  if (game.n < 31 && rank_mask >= (std::uint32_t{1} << game.n))
    throw KnnbvError(ErrorCategory::invalid_argument, "value_function: mask has bits beyond n");
  return top_k_sum(rank_mask, game.k, game.signed_weights) > 0 ? 1 : 0;
}

int value_function(const std::vector<int>& ids, const PreparedGame& game) {
  std::vector<int> rank_of_id(static_cast<std::size_t>(game.n), 0);
  for (int r = 1; r <= game.n; ++r) rank_of_id[static_cast<std::size_t>(game.order[r - 1])] = r;
  std::vector<int> ranks;
  ranks.reserve(ids.size());
  std::vector<bool> seen(static_cast<std::size_t>(game.n), false);
  for (int id : ids) {
    if (id < 0 || id >= game.n)
      throw KnnbvError(ErrorCategory::invalid_argument, "value_function: id out of range");
    if (seen[static_cast<std::size_t>(id)])
      throw KnnbvError(ErrorCategory::invalid_argument, "value_function: duplicate id");
    seen[static_cast<std::size_t>(id)] = true;
    ranks.push_back(rank_of_id[static_cast<std::size_t>(id)]);
  }
  std::sort(ranks.begin(), ranks.end());
  std::int64_t sum = 0;
  const int take = std::min<int>(game.k, static_cast<int>(ranks.size()));
  for (int j = 0; j < take; ++j) sum += game.weight_of_rank(ranks[static_cast<std::size_t>(j)]);
  return sum > 0 ? 1 : 0;
}

std::vector<std::uint8_t> build_value_table(const PreparedGame& game, int cap) {
  check_cap(game.n, cap, "build_value_table");
  const std::size_t size = std::size_t{1} << game.n;
  std::vector<std::uint8_t> table(size);
  for (std::size_t mask = 0; mask < size; ++mask)
    table[mask] =
        top_k_sum(static_cast<std::uint32_t>(mask), game.k, game.signed_weights) > 0 ? 1 : 0;
  return table;
}

ExactValueVector banzhaf_exact_bruteforce(const PreparedGame& game, int cap) {
  const auto table = build_value_table(game, cap);
  const std::size_t size = table.size();
  ExactValueVector out;
  out.numerators.assign(static_cast<std::size_t>(game.n), BigInt(0));
  out.denominator_log2 = game.n - 1;
  for (int b = 0; b < game.n; ++b) {
    const std::size_t bit = std::size_t{1} << b;
    std::int64_t acc = 0;
    for (std::size_t mask = 0; mask < size; ++mask) {
      if (mask & bit) continue;
      acc += static_cast<int>(table[mask | bit]) - static_cast<int>(table[mask]);
    }
    out.numerators[static_cast<std::size_t>(game.order[static_cast<std::size_t>(b)])] = acc;
  }
  return out;
}

std::vector<BigRat> shapley_exact_bruteforce(const PreparedGame& game, int cap) {
  const auto table = build_value_table(game, cap);
  const std::size_t size = table.size();
  const auto binom = binomial_table(game.n);
  std::vector<BigRat> out(static_cast<std::size_t>(game.n), BigRat(0));
  std::vector<std::int64_t> delta_by_size(static_cast<std::size_t>(game.n));
  for (int b = 0; b < game.n; ++b) {
    const std::size_t bit = std::size_t{1} << b;
    std::fill(delta_by_size.begin(), delta_by_size.end(), 0);
    for (std::size_t mask = 0; mask < size; ++mask) {
      if (mask & bit) continue;
      const int d = static_cast<int>(table[mask | bit]) - static_cast<int>(table[mask]);
      if (d != 0) delta_by_size[static_cast<std::size_t>(std::popcount(mask))] += d;
    }
    // phi_i = sum_s delta_s / (n * C(n-1, s)): marginals grouped by |S|.
    BigRat phi(0);
    for (int s = 0; s < game.n; ++s) {
      if (delta_by_size[static_cast<std::size_t>(s)] == 0) continue;
      phi += BigRat(BigInt(delta_by_size[static_cast<std::size_t>(s)]),
                    BigInt(game.n) * binom[static_cast<std::size_t>(game.n - 1)]
                                          [static_cast<std::size_t>(s)]);
    }
    out[static_cast<std::size_t>(game.order[static_cast<std::size_t>(b)])] = phi;
  }
  return out;
}

PivotalCount pivotal_count(const PreparedGame& game, int id, int cap) {
  if (id < 0 || id >= game.n)
    throw KnnbvError(ErrorCategory::invalid_argument, "pivotal_count: id out of range");
  const auto table = build_value_table(game, cap);
  const std::size_t size = table.size();
  int b = 0;
  while (game.order[static_cast<std::size_t>(b)] != id) ++b;
  const std::size_t bit = std::size_t{1} << b;
  std::int64_t flips = 0;
  for (std::size_t mask = 0; mask < size; ++mask) {
    if (mask & bit) continue;
    if (table[mask | bit] != table[mask]) ++flips;
  }
  PivotalCount pc;
  pc.id = id;
  pc.count = flips;
  pc.sign = game.positive_rank(b + 1) ? 1 : -1;
  return pc;
}

std::vector<BigRat> banzhaf_exact_multiclass_bruteforce(const Dataset& train,
                                                        const FeatureVector& test_features,
                                                        int test_label, const GameSpec& spec,
                                                        int cap) {
  const int n = train.n();
  check_cap(n, cap, "banzhaf_exact_multiclass_bruteforce");
  if (test_label < 0 || test_label >= train.num_classes)
    throw KnnbvError(ErrorCategory::invalid_argument,
                     "banzhaf_exact_multiclass_bruteforce: test label out of range");
  if (spec.k < 1 || spec.k > n)
    throw KnnbvError(ErrorCategory::invalid_argument,
                     "banzhaf_exact_multiclass_bruteforce: k must be in [1, n]");

  // Rank by distance and discretize the shared magnitudes exactly as the
  // production pipeline does, but from public primitives only: this oracle
  // must not depend on the decomposition it is used to test.
  const Eigen::VectorXd dists = pairwise_distances(train.features, test_features, spec.metric);
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (dists[a] != dists[b]) return dists[a] < dists[b];
    return a < b;
  });
  std::vector<std::int64_t> mags;
  if (spec.weight_scheme == WeightScheme::uniform) {
    mags.assign(static_cast<std::size_t>(n), 1);  // unit by definition
  } else {
    std::vector<double> sorted_dists(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) sorted_dists[static_cast<std::size_t>(r)] = dists[order[r]];
    mags = discretize_weights(scheme_weights(sorted_dists, spec.weight_scheme, spec.scheme_param),
                              spec.bits);
  }

  // Per-rank signed weight under each one-vs-all slice c != test_label:
  // +mag for the test label, -mag for class c, 0 otherwise. Zero-weight
  // points still occupy top-k slots (selection is by distance, not weight).
  std::vector<std::vector<std::int64_t>> class_weights;
  for (int c = 0; c < train.num_classes; ++c) {
    if (c == test_label) continue;
    std::vector<std::int64_t> w(static_cast<std::size_t>(n), 0);
    for (int r = 0; r < n; ++r) {
      const int label = train.labels[order[static_cast<std::size_t>(r)]];
      if (label == test_label) w[static_cast<std::size_t>(r)] = mags[static_cast<std::size_t>(r)];
      else if (label == c) w[static_cast<std::size_t>(r)] = -mags[static_cast<std::size_t>(r)];
    }
    class_weights.push_back(std::move(w));
  }
  const int slices = static_cast<int>(class_weights.size());

  // v(S) summed over slices, per mask; each entry is in [0, slices].
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::int32_t> vsum(size);
  std::vector<int> top_ranks(static_cast<std::size_t>(spec.k));
  for (std::size_t mask = 0; mask < size; ++mask) {
    int taken = 0;
    for (std::uint32_t bits = static_cast<std::uint32_t>(mask); bits != 0 && taken < spec.k;
         bits &= bits - 1)
      top_ranks[static_cast<std::size_t>(taken++)] = std::countr_zero(bits);
    int v = 0;
    for (const auto& w : class_weights) {
      std::int64_t sum = 0;
      for (int j = 0; j < taken; ++j) sum += w[static_cast<std::size_t>(top_ranks[static_cast<std::size_t>(j)])];
      v += sum > 0 ? 1 : 0;
    }
    vsum[mask] = v;
  }

  const BigInt denom = BigInt(slices) * pow2(static_cast<unsigned>(n - 1));
  std::vector<BigRat> out(static_cast<std::size_t>(n), BigRat(0));
  for (int b = 0; b < n; ++b) {
    const std::size_t bit = std::size_t{1} << b;
    std::int64_t acc = 0;
    for (std::size_t mask = 0; mask < size; ++mask) {
      if (mask & bit) continue;
      acc += vsum[mask | bit] - vsum[mask];
    }
    out[static_cast<std::size_t>(order[static_cast<std::size_t>(b)])] = BigRat(BigInt(acc), denom);
  }
  return out;
}

}  // namespace knnbv
