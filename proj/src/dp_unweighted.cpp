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
#include "knnbv/dp_unweighted.hpp"

#include "knnbv/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace knnbv {

namespace {

const BigInt kZero(0);

void check_unit_game(const PreparedGame& game, const char* who) {
  if (game.n < 1 || game.k < 1 || game.k > game.n ||
      static_cast<int>(game.signed_weights.size()) != game.n)
    throw std::invalid_argument(std::string(who) + ": malformed game");
  if (!game.is_unit_weighted())
    throw KnnbvError(ErrorCategory::unsupported,
                     std::string(who) + ": requires all signed weights in {-1, +1}");
}

}  // namespace

const BigInt& ForwardBackwardTables::f_at(int i, std::int64_t w, int s) const {
  if (i < 0 || i > n || w < -W || w > W || s < 0 || s > k) return kZero;
  return f[static_cast<std::size_t>(i)][static_cast<std::size_t>(s) *
                                            static_cast<std::size_t>(2 * W + 1) +
                                        static_cast<std::size_t>(w + W)];
}

const BigInt& ForwardBackwardTables::b_at(int i, std::int64_t w, int s) const {
  if (i < 1 || i > n + 1 || w < -W || w > W || s < 0 || s > k) return kZero;
  return b[static_cast<std::size_t>(i)][static_cast<std::size_t>(s) *
                                            static_cast<std::size_t>(2 * W + 1) +
                                        static_cast<std::size_t>(w + W)];
}

const BigInt& ForwardBackwardTables::B_at(int i, std::int64_t w, int t) const {
  if (i < 1 || i > n + 1 || w < -W || w > W || t < 0 || t > k) return kZero;
  return B[static_cast<std::size_t>(i)][static_cast<std::size_t>(t) *
                                            static_cast<std::size_t>(2 * W + 1) +
                                        static_cast<std::size_t>(w + W)];
}

const BigInt& SignedBackwardTables::plus_at(int i, std::int64_t w, int t) const {
  if (i < 1 || i > n + 1 || w < -W || w > W || t < 0 || t > k) return kZero;
  return plus[static_cast<std::size_t>(i)][static_cast<std::size_t>(t) *
                                               static_cast<std::size_t>(2 * W + 1) +
                                           static_cast<std::size_t>(w + W)];
}

const BigInt& SignedBackwardTables::minus_at(int i, std::int64_t w, int t) const {
  if (i < 1 || i > n + 1 || w < -W || w > W || t < 0 || t > k) return kZero;
  return minus[static_cast<std::size_t>(i)][static_cast<std::size_t>(t) *
                                                static_cast<std::size_t>(2 * W + 1) +
                                            static_cast<std::size_t>(w + W)];
}

std::pair<ForwardBackwardTables, SignedBackwardTables> build_shared_tables(
    const PreparedGame& game) {
  check_unit_game(game, "build_shared_tables");
  const int n = game.n;
  const int k = game.k;
  const std::int64_t W = k + 1;
  const std::size_t width = static_cast<std::size_t>(2 * W + 1);
  const std::size_t row = static_cast<std::size_t>(k + 1) * width;
  auto at = [&](std::vector<BigInt>& layer, std::int64_t w, int t) -> BigInt& {
    return layer[static_cast<std::size_t>(t) * width + static_cast<std::size_t>(w + W)];
  };

  ForwardBackwardTables fb;
  fb.n = n;
  fb.k = k;
  fb.W = W;
  fb.f.assign(static_cast<std::size_t>(n) + 2, {});
  fb.b.assign(static_cast<std::size_t>(n) + 2, {});
  fb.B.assign(static_cast<std::size_t>(n) + 2, {});

  // Forward: adding rank i either includes it (it is the farthest member,
  // but size stays <= k so the tracked sum gains w_i) or leaves the subset
  // untouched.
  fb.f[0].assign(row, BigInt(0));
  at(fb.f[0], 0, 0) = 1;
  for (int i = 1; i <= n; ++i) {
    const std::int64_t wi = game.weight_of_rank(i);
    fb.f[static_cast<std::size_t>(i)] = fb.f[static_cast<std::size_t>(i) - 1];
    for (int s = 1; s <= k; ++s)
      for (std::int64_t w = -W; w <= W; ++w) {
        const std::int64_t p = w - wi;
        if (p < -W || p > W) continue;
        const BigInt& add = fb.f[static_cast<std::size_t>(i) - 1]
                                [static_cast<std::size_t>(s - 1) * width +
                                 static_cast<std::size_t>(p + W)];
        if (!add.is_zero()) at(fb.f[static_cast<std::size_t>(i)], w, s) += add;
      }
  }

  // Backward: rank i is now the nearest member when included, so for sizes
  // <= k it always joins the tracked sum.
  fb.b[static_cast<std::size_t>(n) + 1].assign(row, BigInt(0));
  at(fb.b[static_cast<std::size_t>(n) + 1], 0, 0) = 1;
  for (int i = n; i >= 1; --i) {
    const std::int64_t wi = game.weight_of_rank(i);
    fb.b[static_cast<std::size_t>(i)] = fb.b[static_cast<std::size_t>(i) + 1];
    for (int s = 1; s <= k; ++s)
      for (std::int64_t w = -W; w <= W; ++w) {
        const std::int64_t p = w - wi;
        if (p < -W || p > W) continue;
        const BigInt& add = fb.b[static_cast<std::size_t>(i) + 1]
                                [static_cast<std::size_t>(s - 1) * width +
                                 static_cast<std::size_t>(p + W)];
        if (!add.is_zero()) at(fb.b[static_cast<std::size_t>(i)], w, s) += add;
      }
  }

  for (int i = 1; i <= n + 1; ++i) {
    auto& acc = fb.B[static_cast<std::size_t>(i)];
    acc.assign(row, BigInt(0));
    for (std::int64_t w = -W; w <= W; ++w) {
      BigInt run(0);
      for (int t = 0; t <= k; ++t) {
        run += fb.b[static_cast<std::size_t>(i)][static_cast<std::size_t>(t) * width +
                                                 static_cast<std::size_t>(w + W)];
        at(acc, w, t) = run;
      }
    }
  }

  SignedBackwardTables sb;
  sb.n = n;
  sb.k = k;
  sb.W = W;
  sb.plus.assign(static_cast<std::size_t>(n) + 2, {});
  sb.minus.assign(static_cast<std::size_t>(n) + 2, {});
  sb.plus[static_cast<std::size_t>(n) + 1].assign(row, BigInt(0));
  sb.minus[static_cast<std::size_t>(n) + 1].assign(row, BigInt(0));
  // Seeds only; no t-th member exists at t = 0 and nothing ever reads them.
  at(sb.plus[static_cast<std::size_t>(n) + 1], 0, 0) = 1;
  at(sb.minus[static_cast<std::size_t>(n) + 1], 0, 0) = 1;
  for (int i = n; i >= 1; --i) {
    const std::int64_t wi = game.weight_of_rank(i);
    sb.plus[static_cast<std::size_t>(i)] = sb.plus[static_cast<std::size_t>(i) + 1];
    sb.minus[static_cast<std::size_t>(i)] = sb.minus[static_cast<std::size_t>(i) + 1];
    for (int t = 2; t <= k; ++t)
      for (std::int64_t w = -W; w <= W; ++w) {
        const std::int64_t p = w - wi;
        if (p < -W || p > W) continue;
        const std::size_t from = static_cast<std::size_t>(t - 1) * width +
                                 static_cast<std::size_t>(p + W);
        const BigInt& ap = sb.plus[static_cast<std::size_t>(i) + 1][from];
        if (!ap.is_zero()) at(sb.plus[static_cast<std::size_t>(i)], w, t) += ap;
        const BigInt& am = sb.minus[static_cast<std::size_t>(i) + 1][from];
        if (!am.is_zero()) at(sb.minus[static_cast<std::size_t>(i)], w, t) += am;
      }
    // Including rank i at t = 1 makes it the nearest member, fixing the
    // subset's sign; every combination of farther points then qualifies.
    auto& matching = wi > 0 ? sb.plus[static_cast<std::size_t>(i)]
                            : sb.minus[static_cast<std::size_t>(i)];
    at(matching, wi, 1) += pow2(static_cast<unsigned>(n - i));
  }
  return {std::move(fb), std::move(sb)};
}

ExactValueVector banzhaf_dp_unweighted(const PreparedGame& game, NegativeTailTable tail) {
  check_unit_game(game, "banzhaf_dp_unweighted");
  const int n = game.n;
  const int k = game.k;
  const std::int64_t W = k + 1;
  const std::size_t width = static_cast<std::size_t>(2 * W + 1);

  // Rolling single layers: f holds sizes [0, k-1] (all the aggregation
  // reads), the backward families hold the layer for the rank below the
  // current point. Indexing is row-per-size: [s * width + (w + W)].
  std::vector<BigInt> f(static_cast<std::size_t>(k) * width, BigInt(0));
  std::vector<BigInt> b(static_cast<std::size_t>(k) * width, BigInt(0));
  std::vector<BigInt> pb(static_cast<std::size_t>(k) * width, BigInt(0));
  std::vector<BigInt> bp((static_cast<std::size_t>(k) + 1) * width, BigInt(0));
  std::vector<BigInt> bm((static_cast<std::size_t>(k) + 1) * width, BigInt(0));
  auto cell = [&](std::vector<BigInt>& v, int t, std::int64_t w) -> BigInt& {
    return v[static_cast<std::size_t>(t) * width + static_cast<std::size_t>(w + W)];
  };
  auto read = [&](const std::vector<BigInt>& v, int t, std::int64_t w) -> const BigInt& {
    if (w < -W || w > W) return kZero;
    return v[static_cast<std::size_t>(t) * width + static_cast<std::size_t>(w + W)];
  };

  // Forward sweep to the full-dataset layer; the main loop then peels one
  // rank per step via the inverted recurrence. Descending s keeps the
  // in-place update reading pre-insertion values.
  cell(f, 0, 0) = 1;
  for (int i = 1; i <= n; ++i) {
    const std::int64_t wi = game.weight_of_rank(i);
    for (int s = std::min(k - 1, i); s >= 1; --s)
      for (std::int64_t w = -W; w <= W; ++w) {
        const BigInt& add = read(f, s - 1, w - wi);
        if (!add.is_zero()) cell(f, s, w) += add;
      }
  }
  cell(b, 0, 0) = 1;
  cell(bp, 0, 0) = 1;  // seeds only; never read by updates or aggregation
  cell(bm, 0, 0) = 1;

  ExactValueVector out;
  out.numerators.assign(static_cast<std::size_t>(n), BigInt(0));
  out.denominator_log2 = n - 1;

  for (int i = n; i >= 1; --i) {
    const std::int64_t wi = game.weight_of_rank(i);

    // Peel rank i off the forward layer (ascending s reads already-peeled
    // smaller sizes).
    for (int s = 1; s <= std::min(k - 1, i); ++s)
      for (std::int64_t w = -W; w <= W; ++w) {
        const BigInt& sub = read(f, s - 1, w - wi);
        if (!sub.is_zero()) cell(f, s, w) -= sub;
      }

    // Prefix of the backward layer over sizes, for the below-k head count.
    for (std::int64_t w = -W; w <= W; ++w) {
      BigInt run(0);
      for (int t = 0; t <= k - 1; ++t) {
        run += read(b, t, w);
        cell(pb, t, w) = run;
      }
    }

    // Combine a near side S1 (size s < k, sum w) with a far side S2. Head:
    // |S| < k, so inserting z_i shifts the sum by w_i and flips exactly
    // when the total lands at 0 (positive insertion) or 1 (negative).
    // Tail: |S| >= k and z_i ejects S2's (k-s)-th member; a positive
    // insertion flips only if the ejected member is negative (net +2 on
    // the sum, so totals in [-1, 0] flip) and a negative insertion only if
    // it carries the test label (net -2, totals in [1, 2] flip).
    BigInt c_tail(0), c_head(0);
    const std::vector<BigInt>& neg_tail = tail == NegativeTailTable::matching_label ? bp : bm;
    for (int s = 0; s <= k - 1; ++s) {
      const int t = k - s;
      for (std::int64_t w = -W; w <= W; ++w) {
        const BigInt& fv = read(f, s, w);
        if (fv.is_zero()) continue;
        if (wi > 0) {
          const BigInt& e0 = read(bm, t, -w);
          const BigInt& e1 = read(bm, t, -w - 1);
          if (!e0.is_zero() || !e1.is_zero()) c_tail += fv * (e0 + e1);
          const BigInt& h = read(pb, k - 1 - s, -w);
          if (!h.is_zero()) c_head += fv * h;
        } else {
          const BigInt& e1 = read(neg_tail, t, 1 - w);
          const BigInt& e2 = read(neg_tail, t, 2 - w);
          if (!e1.is_zero() || !e2.is_zero()) c_tail += fv * (e1 + e2);
          const BigInt& h = read(pb, k - 1 - s, 1 - w);
          if (!h.is_zero()) c_head += fv * h;
        }
      }
    }
    BigInt numer = c_tail + c_head;
    if (wi < 0) numer = -numer;
    out.numerators[static_cast<std::size_t>(game.order[static_cast<std::size_t>(i - 1)])] =
        std::move(numer);

    // Advance the backward layers to include rank i (descending t reads
    // pre-update smaller sizes).
    for (int t = k - 1; t >= 1; --t)
      for (std::int64_t w = -W; w <= W; ++w) {
        const BigInt& add = read(b, t - 1, w - wi);
        if (!add.is_zero()) cell(b, t, w) += add;
      }
    for (int t = k; t >= 2; --t)
      for (std::int64_t w = -W; w <= W; ++w) {
        const BigInt& ap = read(bp, t - 1, w - wi);
        if (!ap.is_zero()) cell(bp, t, w) += ap;
        const BigInt& am = read(bm, t - 1, w - wi);
        if (!am.is_zero()) cell(bm, t, w) += am;
      }
    cell(wi > 0 ? bp : bm, 1, wi) += pow2(static_cast<unsigned>(n - i));
  }
  return out;
}

}  // namespace knnbv
