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
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "knnbv/bruteforce.hpp"
#include "knnbv/dp_efficient.hpp"
#include "knnbv/dp_standard.hpp"
#include "knnbv/game.hpp"
#include "knnbv/rng.hpp"
#include "test_util.hpp"

#include <utility>
#include <vector>

using namespace knnbv;

namespace {

// Independent definition of the size-extension count: the number of ways to
// grow a top-k block ending at rank m into a coalition of any size in
// [k, n-1], i.e. the sum of C(n-m, j) over j in [0, n-k-1].
GVector g_by_direct_summation(int n, int k) {
  GVector g(static_cast<std::size_t>(n) + 1, BigInt(0));
  for (int m = 1; m <= n; ++m) {
    BigInt acc(0);
    for (int j = 0; j <= n - k - 1; ++j) acc += binomial(n - m, j);
    g[static_cast<std::size_t>(m)] = acc;
  }
  return g;
}

}  // namespace

TEST_CASE("size-extension count goldens") {
  CHECK(compute_g(4, 2) == GVector{0, 4, 3, 2, 1});
  CHECK(compute_g(10, 9) == GVector{0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1});
  CHECK(compute_g(3, 3) == GVector{0, 0, 0, 0});
  CHECK(compute_g(1, 1) == GVector{0, 0});
  // With k = 1 all proper subset sizes extend the block: 2^(n-m) - C(n-m, n-m).
  CHECK(compute_g(200, 1)[1] == pow2(199) - 1);
  CHECK(compute_g(200, 1)[200] == 1);
}

TEST_CASE("size-extension recurrence matches direct binomial sums") {
  const std::vector<std::pair<int, int>> cases = {{1, 1},   {2, 1},    {2, 2},   {5, 3},
                                                  {7, 7},   {10, 9},   {10, 10}, {37, 7},
                                                  {64, 32}, {200, 150}, {200, 199}};
  for (auto [n, k] : cases) CHECK(compute_g(n, k) == g_by_direct_summation(n, k));
}

TEST_CASE("size-extension count rejects out-of-range k") {
  CHECK_THROWS_AS(compute_g(4, 0), std::invalid_argument);
  CHECK_THROWS_AS(compute_g(4, 5), std::invalid_argument);
}

TEST_CASE("golden vectors for both reference games") {
  auto w = banzhaf_dp_efficient(game_from_signed_weights({3, -2, 1, -1}, 2));
  CHECK(w.denominator_log2 == 3);
  CHECK(w.numerators == std::vector<BigInt>{7, -1, 1, -1});

  auto u = banzhaf_dp_efficient(game_from_signed_weights({1, -1, 1, -1}, 2));
  CHECK(u.numerators == std::vector<BigInt>{2, -4, 2, -2});
}

TEST_CASE("single-point games") {
  auto pos = banzhaf_dp_efficient(game_from_signed_weights({1}, 1));
  CHECK(pos.numerators == std::vector<BigInt>{1});
  CHECK(pos.denominator_log2 == 0);
  auto neg = banzhaf_dp_efficient(game_from_signed_weights({-1}, 1));
  CHECK(neg.numerators == std::vector<BigInt>{0});
}

TEST_CASE("zero-weight point flips wins by displacing the k-th neighbor") {
  PreparedGame g;
  g.n = 3;
  g.k = 2;
  g.order = {0, 1, 2};
  g.signed_weights = {0, 2, -2};
  g.W = 4;
  g.test_label = 0;
  auto v = banzhaf_dp_efficient(g);
  CHECK(v.numerators == std::vector<BigInt>{1, 3, -1});
}

TEST_CASE("matches brute force on random weighted games") {
  SplitMix64 rng(401);
  for (int rep = 0; rep < 150; ++rep) {
    auto g = testutil::random_weighted_game(rng, 1, 12, 5, 1, 8);
    CHECK(banzhaf_dp_efficient(g) == banzhaf_exact_bruteforce(g));
  }
}

TEST_CASE("matches brute force with wide magnitude spreads") {
  SplitMix64 rng(403);
  for (int rep = 0; rep < 60; ++rep) {
    auto g = testutil::random_weighted_game(rng, 1, 11, 6, 1, 100);
    CHECK(banzhaf_dp_efficient(g) == banzhaf_exact_bruteforce(g));
  }
}

TEST_CASE("matches brute force on random masked games") {
  SplitMix64 rng(409);
  for (int rep = 0; rep < 100; ++rep) {
    auto g = testutil::random_masked_game(rng, 1, 11, 5, 1, 7);
    CHECK(banzhaf_dp_efficient(g) == banzhaf_exact_bruteforce(g));
  }
}

TEST_CASE("matches brute force on random unit-weight games") {
  SplitMix64 rng(419);
  for (int rep = 0; rep < 100; ++rep) {
    auto g = testutil::random_unweighted_game(rng, 1, 12, 6);
    CHECK(banzhaf_dp_efficient(g) == banzhaf_exact_bruteforce(g));
  }
}

TEST_CASE("k equal to n leaves no tail sizes") {
  SplitMix64 rng(421);
  for (int rep = 0; rep < 20; ++rep) {
    const int n = 1 + static_cast<int>(rng.below(8));
    std::vector<std::int64_t> sw(static_cast<std::size_t>(n));
    for (auto& x : sw) x = rng.coin() ? 2 : -2;
    auto g = game_from_signed_weights(sw, n);
    CHECK(banzhaf_dp_efficient(g) == banzhaf_exact_bruteforce(g));
  }
}

TEST_CASE("agrees with the size-indexed table beyond brute-force reach") {
  SplitMix64 rng(431);
  for (int rep = 0; rep < 8; ++rep) {
    auto g = testutil::random_weighted_game(rng, 30, 48, 6, 1, 6);
    CHECK(banzhaf_dp_efficient(g) == banzhaf_dp_standard(g));
  }
  for (int rep = 0; rep < 6; ++rep) {
    auto g = testutil::random_masked_game(rng, 25, 40, 6, 1, 6);
    CHECK(banzhaf_dp_efficient(g) == banzhaf_dp_standard(g));
  }
  for (int rep = 0; rep < 3; ++rep) {
    auto g = testutil::random_weighted_game(rng, 55, 60, 4, 1, 5);
    CHECK(banzhaf_dp_efficient(g) == banzhaf_dp_standard(g));
  }
}

TEST_CASE("count representations agree") {
  SplitMix64 rng(433);
  for (int rep = 0; rep < 40; ++rep) {
    auto g = testutil::random_weighted_game(rng, 1, 25, 8, 1, 10);
    auto fast = banzhaf_dp_efficient(g, CountMode::force_u64);
    auto big = banzhaf_dp_efficient(g, CountMode::force_big);
    auto autod = banzhaf_dp_efficient(g, CountMode::autodetect);
    CHECK(fast == big);
    CHECK(fast == autod);
  }
}

TEST_CASE("rejects malformed games") {
  PreparedGame g;
  g.n = 2;
  g.k = 3;  // k > n
  g.order = {0, 1};
  g.signed_weights = {1, -1};
  g.W = 2;
  CHECK_THROWS_AS(banzhaf_dp_efficient(g), std::invalid_argument);
}
