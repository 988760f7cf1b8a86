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
#include "knnbv/dp_standard.hpp"

#include <algorithm>
#include <stdexcept>

namespace knnbv {

namespace {

const BigInt kZero(0);

}  // namespace

const BigInt& FTable::dense_at(std::int64_t w, int s, int m) const {
  if (w < -W || w > W) return kZero;
  const std::size_t widx = static_cast<std::size_t>(w + W);
  const std::size_t stride_m = static_cast<std::size_t>(n + 1);
  const std::size_t stride_w = static_cast<std::size_t>(2 * W + 1) * stride_m;
  return dense[static_cast<std::size_t>(s) * stride_w + widx * stride_m +
               static_cast<std::size_t>(m)];
}

BigInt FTable::entry(std::int64_t w, int s, int m) const {
  if (w < -W || w > W || s < 0 || s > n - 1 || m < 0 || m > n || m == i) return kZero;
  if (s <= s_dense) return dense_at(w, s, m);
  // s > k here: the top-k block ends at rank m, the other s-k members are
  // any subset of the ranks beyond m (minus i when i lies beyond m).
  if (m == 0) return kZero;
  const long long beyond = m > i ? n - m : n - m - 1;
  return dense_at(w, k, m) * binomial(beyond, s - k);
}

FTable build_f_table(const PreparedGame& game, int i) {
  if (i < 1 || i > game.n) throw std::invalid_argument("build_f_table: rank out of range");
  FTable t;
  t.n = game.n;
  t.k = game.k;
  t.i = i;
  t.W = game.W;
  t.s_dense = std::min(game.k, game.n - 1);
  const std::size_t stride_m = static_cast<std::size_t>(t.n + 1);
  const std::size_t stride_w = static_cast<std::size_t>(2 * t.W + 1) * stride_m;
  t.dense.assign(static_cast<std::size_t>(t.s_dense + 1) * stride_w, BigInt(0));

  auto at = [&](std::int64_t w, int s, int m) -> BigInt& {
    return t.dense[static_cast<std::size_t>(s) * stride_w +
                   static_cast<std::size_t>(w + t.W) * stride_m + static_cast<std::size_t>(m)];
  };

  at(0, 0, 0) = 1;  // the empty set
  if (t.s_dense >= 1)
    for (int m = 1; m <= t.n; ++m)
      if (m != i) at(game.weight_of_rank(m), 1, m) = 1;

  // f(w, s, m) = sum over the possible ranks m' < m of the (s-1)-th nearest
  // member, at the weight left after removing z_m from the top block.
  for (int s = 2; s <= t.s_dense; ++s) {
    for (int m = s; m <= t.n; ++m) {
      if (m == i) continue;
      const std::int64_t wm = game.weight_of_rank(m);
      for (std::int64_t w = -t.W; w <= t.W; ++w) {
        const std::int64_t prev = w - wm;
        if (prev < -t.W || prev > t.W) continue;
        BigInt acc(0);
        for (int mp = s - 1; mp < m; ++mp) {
          if (mp == i) continue;
          acc += t.dense_at(prev, s - 1, mp);
        }
        if (!acc.is_zero()) at(w, s, m) = std::move(acc);
      }
    }
  }
  return t;
}

namespace {

// Number of coalitions the point at rank i flips upward (0 -> 1): sizes
// below k need the sum to land in (-w_i, 0]; sizes >= k displace the k-th
// nearest member z_m (necessarily with m > i) and need (w(z_m) - w_i, 0].
BigInt count_upward(const PreparedGame& game, const FTable& t, int i) {
  const std::int64_t wi = game.weight_of_rank(i);
  BigInt total(0);
  const int s_hi = std::min(game.k - 1, game.n - 1);
  for (std::int64_t w = std::max(-game.W, -wi + 1); w <= 0; ++w)
    for (int s = 0; s <= s_hi; ++s)
      for (int m = 0; m <= game.n; ++m)
        if (m != i) total += t.dense_at(w, s, m);
  for (int m = i + 1; m <= game.n; ++m) {
    const std::int64_t lo = game.weight_of_rank(m) - wi;  // exclusive
    for (std::int64_t w = std::max(-game.W, lo + 1); w <= 0; ++w)
      for (int s = game.k; s <= game.n - 1; ++s) total += t.entry(w, s, m);
  }
  return total;
}

// Downward flips (1 -> 0): mirrored ranges on the positive side, with the
// empty set excluded (m starts at 1).
BigInt count_downward(const PreparedGame& game, const FTable& t, int i) {
  const std::int64_t wi = game.weight_of_rank(i);
  BigInt total(0);
  const int s_hi = std::min(game.k - 1, game.n - 1);
  for (std::int64_t w = 1; w <= std::min(game.W, -wi); ++w)
    for (int s = 0; s <= s_hi; ++s)
      for (int m = 1; m <= game.n; ++m)
        if (m != i) total += t.dense_at(w, s, m);
  for (int m = i + 1; m <= game.n; ++m) {
    const std::int64_t hi = -wi + game.weight_of_rank(m);  // inclusive
    for (std::int64_t w = 1; w <= std::min(game.W, hi); ++w)
      for (int s = game.k; s <= game.n - 1; ++s) total += t.entry(w, s, m);
  }
  return total;
}

}  // namespace

ExactValueVector banzhaf_dp_standard(const PreparedGame& game) {
  if (game.n < 1 || game.k < 1 || game.k > game.n ||
      static_cast<int>(game.signed_weights.size()) != game.n)
    throw std::invalid_argument("banzhaf_dp_standard: malformed game");
  ExactValueVector out;
  out.numerators.assign(static_cast<std::size_t>(game.n), BigInt(0));
  out.denominator_log2 = game.n - 1;
  for (int i = 1; i <= game.n; ++i) {
    const FTable t = build_f_table(game, i);
    const std::int64_t wi = game.weight_of_rank(i);
    BigInt numer;
    if (wi > 0) {
      numer = count_upward(game, t, i);
    } else if (wi < 0) {
      numer = -count_downward(game, t, i);
    } else {
      // Zero-weight points (multi-class masking) genuinely flip both ways.
      numer = count_upward(game, t, i) - count_downward(game, t, i);
    }
    out.numerators[static_cast<std::size_t>(game.order[static_cast<std::size_t>(i - 1)])] =
        std::move(numer);
  }
  return out;
}

}  // namespace knnbv
