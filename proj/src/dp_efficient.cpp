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
#include "knnbv/dp_efficient.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace knnbv {

GVector compute_g(int n, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("compute_g: k must be in [1, n]");
  GVector g(static_cast<std::size_t>(n) + 1, BigInt(0));
  if (k == n) return g;  // j ranges over the empty set
  g[static_cast<std::size_t>(n)] = 1;
  BigInt corr(0);  // C(n-m-1, n-k-1) for the current m
  for (int m = n - 1; m >= 1; --m) {
    if (m > k) corr = 0;
    else if (m == k) corr = 1;
    else corr = corr * (n - m - 1) / (k - m);  // exact: ratio of adjacent binomials
    g[static_cast<std::size_t>(m)] =
        2 * g[static_cast<std::size_t>(m) + 1] - corr;
  }
  return g;
}

namespace {

// Largest value any M entry can take: subset counts conserve to C(n-1, s)
// per layer, s capped at min(k, n-1).
BigInt table_entry_bound(int n, int k) {
  const long long N = n - 1;
  const long long cap = std::min<long long>(k, N);
  return binomial(N, std::min(cap, N / 2));
}

// Sorted distinct weight sums reachable with at most `layers` points, one
// vector per layer, clipped to [-W, W].
std::vector<std::vector<std::int64_t>> reachable_sums(const PreparedGame& game, int layers) {
  std::vector<std::int64_t> levels(game.signed_weights);
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  std::vector<std::vector<std::int64_t>> active(static_cast<std::size_t>(layers));
  active[0] = {0};
  for (int s = 1; s < layers; ++s) {
    std::vector<std::int64_t> next;
    next.reserve(active[static_cast<std::size_t>(s - 1)].size() * levels.size());
    for (std::int64_t a : active[static_cast<std::size_t>(s - 1)])
      for (std::int64_t l : levels) {
        const std::int64_t v = a + l;
        if (v >= -game.W && v <= game.W) next.push_back(v);
      }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    active[static_cast<std::size_t>(s)] = std::move(next);
  }
  return active;
}

template <typename CountT>
void run_engine(const PreparedGame& game, const GVector& g, ExactValueVector& out) {
  const int n = game.n;
  const int k = game.k;
  const std::int64_t W = game.W;
  const std::size_t width = static_cast<std::size_t>(2 * W + 1);

  const auto active = reachable_sums(game, k);

  // Two rolling prefix-sum layers, m-major so each rank's weight row is
  // contiguous. Invariant: any buffer not currently holding a layer is
  // all-zero (touched cells are re-zeroed instead of wholesale clearing).
  std::vector<CountT> mprev((static_cast<std::size_t>(n) + 2) * width, CountT(0));
  std::vector<CountT> mcur((static_cast<std::size_t>(n) + 2) * width, CountT(0));
  auto idx = [&](int m, std::int64_t w) {
    return static_cast<std::size_t>(m) * width + static_cast<std::size_t>(w + W);
  };
  auto zero_layer = [&](std::vector<CountT>& buf, const std::vector<std::int64_t>& ws) {
    for (int m = 1; m <= n + 1; ++m)
      for (std::int64_t w : ws) buf[idx(m, w)] = 0;
  };
  // Sum of buf[m][w] over active w in (lo, hi].
  auto window_sum = [&](const std::vector<CountT>& buf, const std::vector<std::int64_t>& ws,
                        int m, std::int64_t lo, std::int64_t hi) {
    CountT acc(0);
    for (auto it = std::upper_bound(ws.begin(), ws.end(), lo); it != ws.end() && *it <= hi; ++it)
      acc += buf[idx(m, *it)];
    return acc;
  };

  for (int i = 1; i <= n; ++i) {
    const std::int64_t wi = game.weight_of_rank(i);
    BigInt c_up(0), c_down(0);

    // Layer s = 0: only the empty set, at weight 0, counted before every m.
    for (int m = 1; m <= n + 1; ++m) mprev[idx(m, 0)] = CountT(1);
    if (wi > 0) c_up += 1;  // w = 0 lies in (-w_i, 0]; the down-window excludes it

    for (int s = 1; s <= k - 1; ++s) {
      const auto& ws = active[static_cast<std::size_t>(s)];
      // M(w, s, m+1) = M(w, s, m) + f(w, s, m), f(w, s, m) = M(w - w_m, s-1, m).
      for (int m = 1; m <= n; ++m) {
        const std::int64_t wm = game.weight_of_rank(m);
        const CountT* prev_row = mprev.data() + idx(m, -W);
        const CountT* cur_row = mcur.data() + idx(m, -W);
        CountT* next_row = mcur.data() + idx(m + 1, -W);
        if (m == i) {
          for (std::int64_t w : ws) next_row[w + W] = cur_row[w + W];
        } else {
          for (std::int64_t w : ws) {
            const std::int64_t p = w - wm;
            CountT v = cur_row[w + W];
            if (p >= -W && p <= W) v += prev_row[p + W];
            next_row[w + W] = v;
          }
        }
      }
      if (wi > 0) c_up += BigInt(window_sum(mcur, ws, n + 1, -wi, 0));
      else if (wi < 0) c_down += BigInt(window_sum(mcur, ws, n + 1, 0, -wi));
      zero_layer(mprev, active[static_cast<std::size_t>(s - 1)]);
      std::swap(mprev, mcur);
    }

    // Tail sizes s in [k, n-1]: inserting z_i displaces the k-th nearest
    // member z_m (m > i), so aggregate f(w, k, m) = M(w - w_m, k-1, m) over
    // the pivotal windows, scaled by the g(m) size extensions.
    const auto& wk = active[static_cast<std::size_t>(k - 1)];
    for (int m = i + 1; m <= n; ++m) {
      const BigInt& gm = g[static_cast<std::size_t>(m)];
      if (gm.is_zero()) continue;
      const std::int64_t wm = game.weight_of_rank(m);
      // Upward flips: top-k sum w in (w_m - w_i, 0], i.e. v = w - w_m in
      // (-w_i, -w_m]; downward flips mirror to v in (-w_m, -w_i].
      if (wm < wi) {
        const CountT acc = window_sum(mprev, wk, m, -wi, -wm);
        if (acc != CountT(0)) c_up += BigInt(acc) * gm;
      } else if (wm > wi) {
        const CountT acc = window_sum(mprev, wk, m, -wm, -wi);
        if (acc != CountT(0)) c_down += BigInt(acc) * gm;
      }
    }
    zero_layer(mprev, wk);

    out.numerators[static_cast<std::size_t>(game.order[static_cast<std::size_t>(i - 1)])] =
        c_up - c_down;
  }
}

}  // namespace

ExactValueVector banzhaf_dp_efficient(const PreparedGame& game, CountMode mode) {
  if (game.n < 1 || game.k < 1 || game.k > game.n ||
      static_cast<int>(game.signed_weights.size()) != game.n)
    throw std::invalid_argument("banzhaf_dp_efficient: malformed game");
  ExactValueVector out;
  out.numerators.assign(static_cast<std::size_t>(game.n), BigInt(0));
  out.denominator_log2 = game.n - 1;
  const GVector g = compute_g(game.n, game.k);
  bool use_u64 = mode != CountMode::force_big;
  if (mode == CountMode::autodetect)
    use_u64 = table_entry_bound(game.n, game.k) < (BigInt(1) << 62);
  if (use_u64)
    run_engine<std::uint64_t>(game, g, out);
  else
    run_engine<BigInt>(game, g, out);
  return out;
}

}  // namespace knnbv
