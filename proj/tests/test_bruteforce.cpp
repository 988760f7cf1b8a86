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
#include "knnbv/errors.hpp"
#include "knnbv/game.hpp"
#include "knnbv/rng.hpp"
#include "test_util.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

using namespace knnbv;

namespace {

// Reference 4-point games used throughout the suite. Weights are in rank
// order (rank 1 nearest); ids coincide with ranks - 1.
PreparedGame weighted_reference() { return game_from_signed_weights({3, -2, 1, -1}, 2); }
PreparedGame unit_reference() { return game_from_signed_weights({1, -1, 1, -1}, 2); }

// Independent Shapley oracle: enumerate all n! orderings and average each
// point's marginal contribution exactly.
std::vector<BigRat> shapley_by_permutations(const PreparedGame& game) {
  const int n = game.n;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);  // entries are ranks - 1
  std::vector<BigRat> sum(static_cast<std::size_t>(n), BigRat(0));
  BigInt factorial = 1;
  for (int i = 2; i <= n; ++i) factorial *= i;
  do {
    std::vector<int> prefix_ids;
    int prev = 0;
    for (int b : perm) {
      prefix_ids.push_back(game.order[static_cast<std::size_t>(b)]);
      const int cur = value_function(prefix_ids, game);
      sum[static_cast<std::size_t>(game.order[static_cast<std::size_t>(b)])] +=
          BigRat(cur - prev);
      prev = cur;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (auto& s : sum) s /= BigRat(factorial);
  return sum;
}

}  // namespace

TEST_CASE("value function on the weighted reference game") {
  auto game = weighted_reference();
  // S = {ranks 2,3}: top-2 sum -2 + 1 = -1 -> 0.
  CHECK(value_function(std::vector<int>{1, 2}, game) == 0);
  // Empty coalition.
  CHECK(value_function(std::vector<int>{}, game) == 0);
  // Full set: top-2 = ranks 1,2 with sum +1 -> 1.
  CHECK(value_function(std::vector<int>{0, 1, 2, 3}, game) == 1);
  // {ranks 3,4}: sum 0, ties lose.
  CHECK(value_function(std::vector<int>{2, 3}, game) == 0);
  // {rank 1} alone: +3.
  CHECK(value_function(std::vector<int>{0}, game) == 1);

  // Mask form agrees: bit r-1 is rank r.
  CHECK(value_function(std::uint32_t{0b0110}, game) == 0);
  CHECK(value_function(std::uint32_t{0b1111}, game) == 1);
  CHECK(value_function(std::uint32_t{0}, game) == 0);
  CHECK_THROWS_AS(value_function(std::uint32_t{1u << 4}, game), KnnbvError);
  CHECK_THROWS_AS(value_function(std::vector<int>{0, 0}, game), KnnbvError);
  CHECK_THROWS_AS(value_function(std::vector<int>{4}, game), KnnbvError);
}

TEST_CASE("golden values for the weighted reference game") {
  auto v = banzhaf_exact_bruteforce(weighted_reference());
  CHECK(v.denominator_log2 == 3);
  CHECK(v.numerators == std::vector<BigInt>{7, -1, 1, -1});
  CHECK(v.to_doubles() == std::vector<double>{0.875, -0.125, 0.125, -0.125});
}

TEST_CASE("golden values for the unit-weight reference game") {
  // Hand enumeration of v over all 16 subsets (k = 2, weights +1,-1,+1,-1):
  // the winning coalitions are exactly {1}, {3}, {1,3}, {1,3,4}. Summing
  // marginals per point gives numerators (2, -4, 2, -2) over 2^3.
  auto v = banzhaf_exact_bruteforce(unit_reference());
  CHECK(v.denominator_log2 == 3);
  CHECK(v.numerators == std::vector<BigInt>{2, -4, 2, -2});
  CHECK(v.rational(2) == BigRat(1, 4));
  CHECK(v.to_doubles() == std::vector<double>{0.25, -0.5, 0.25, -0.25});
}

TEST_CASE("single positive point has value 1") {
  auto v = banzhaf_exact_bruteforce(game_from_signed_weights({1}, 1));
  CHECK(v.denominator_log2 == 0);
  CHECK(v.numerators == std::vector<BigInt>{1});
}

TEST_CASE("build_value_table matches the per-subset value function") {
  SplitMix64 rng(11);
  for (int rep = 0; rep < 20; ++rep) {
    auto game = testutil::random_weighted_game(rng, 1, 8, 4, 1, 6);
    auto table = build_value_table(game);
    REQUIRE(table.size() == (std::size_t{1} << game.n));
    CHECK(table[0] == 0);
    for (std::size_t mask = 0; mask < table.size(); ++mask) {
      std::vector<int> ids;
      for (int b = 0; b < game.n; ++b)
        if (mask & (std::size_t{1} << b))
          ids.push_back(game.order[static_cast<std::size_t>(b)]);
      CHECK(static_cast<int>(table[mask]) == value_function(ids, game));
    }
  }
}

TEST_CASE("pivotal counts match the golden values and the value vector") {
  auto game = weighted_reference();
  auto p0 = pivotal_count(game, 0);
  CHECK(p0.count == 7);
  CHECK(p0.sign == 1);
  auto p1 = pivotal_count(game, 1);
  CHECK(p1.count == 1);
  CHECK(p1.sign == -1);

  SplitMix64 rng(23);
  for (int rep = 0; rep < 30; ++rep) {
    auto g = testutil::random_weighted_game(rng, 1, 9, 4, 1, 7);
    auto v = banzhaf_exact_bruteforce(g);
    for (int id = 0; id < g.n; ++id) {
      auto pc = pivotal_count(g, id);
      CHECK(pc.count >= 0);
      CHECK(pc.count <= pow2(static_cast<unsigned>(g.n - 1)));
      CHECK(BigInt(pc.sign) * pc.count == v.numerators[static_cast<std::size_t>(id)]);
    }
  }
}

TEST_CASE("matched-label points never flip wins off, mismatched never on") {
  SplitMix64 rng(31);
  for (int rep = 0; rep < 40; ++rep) {
    auto g = testutil::random_weighted_game(rng, 1, 10, 5, 1, 8);
    auto table = build_value_table(g);
    for (int b = 0; b < g.n; ++b) {
      const std::size_t bit = std::size_t{1} << b;
      const bool positive = g.positive_rank(b + 1);
      for (std::size_t mask = 0; mask < table.size(); ++mask) {
        if (mask & bit) continue;
        const int d = static_cast<int>(table[mask | bit]) - static_cast<int>(table[mask]);
        if (positive) CHECK(d >= 0);
        else CHECK(d <= 0);
      }
    }
  }
}

TEST_CASE("value sign follows label agreement") {
  SplitMix64 rng(37);
  for (int rep = 0; rep < 40; ++rep) {
    auto g = testutil::random_weighted_game(rng, 1, 10, 5, 1, 8);
    auto v = banzhaf_exact_bruteforce(g);
    for (int r = 1; r <= g.n; ++r) {
      const int id = g.order[static_cast<std::size_t>(r - 1)];
      if (g.positive_rank(r)) CHECK(v.numerators[static_cast<std::size_t>(id)] >= 0);
      else CHECK(v.numerators[static_cast<std::size_t>(id)] <= 0);
    }
  }
}

TEST_CASE("adjacent points with equal signed weight share a value") {
  auto game = game_from_signed_weights({2, 2, -1}, 2);
  auto v = banzhaf_exact_bruteforce(game);
  CHECK(v.numerators[0] == v.numerators[1]);

  auto neg = game_from_signed_weights({3, -1, -1}, 1);
  auto vn = banzhaf_exact_bruteforce(neg);
  CHECK(vn.numerators[1] == vn.numerators[2]);
}

TEST_CASE("Shapley: efficiency, trivial case, and permutation cross-check") {
  auto single = shapley_exact_bruteforce(game_from_signed_weights({1}, 1));
  CHECK(single[0] == BigRat(1));

  SplitMix64 rng(41);
  for (int rep = 0; rep < 25; ++rep) {
    auto g = testutil::random_weighted_game(rng, 1, 9, 4, 1, 6);
    auto phi = shapley_exact_bruteforce(g);
    BigRat total(0);
    for (const auto& p : phi) total += p;
    std::vector<int> all_ids(static_cast<std::size_t>(g.n));
    std::iota(all_ids.begin(), all_ids.end(), 0);
    CHECK(total == BigRat(value_function(all_ids, g)));
  }

  for (int rep = 0; rep < 10; ++rep) {
    auto g = testutil::random_weighted_game(rng, 1, 6, 3, 1, 5);
    CHECK(shapley_exact_bruteforce(g) == shapley_by_permutations(g));
  }

  auto phi_ref = shapley_exact_bruteforce(weighted_reference());
  CHECK(phi_ref == shapley_by_permutations(weighted_reference()));
}

TEST_CASE("multi-class brute force reduces to binary for two classes") {
  SplitMix64 rng(47);
  for (int rep = 0; rep < 10; ++rep) {
    auto train = testutil::random_dataset(rng, 7, 2, 2);
    GameSpec spec;
    spec.k = 3;
    spec.weight_scheme = WeightScheme::inverse_distance;
    FeatureVector t(2);
    t << rng.normal(), rng.normal();
    const int y = static_cast<int>(rng.below(2));

    auto multi = banzhaf_exact_multiclass_bruteforce(train, t, y, spec);
    auto binary = banzhaf_exact_bruteforce(prepare_game(train, t, y, spec));
    for (int i = 0; i < train.n(); ++i)
      CHECK(multi[static_cast<std::size_t>(i)] == binary.rational(i));
  }
}

TEST_CASE("multi-class brute force: masked classes occupy top-k slots") {
  // 1-D layout: id 0 (class 2) nearest, id 1 (class 1) next, id 2 (class 0)
  // farthest; y_test = 0, k = 1. Slice c=1: the class-2 point has weight 0
  // yet shadows everyone whenever it is in S, so v_1({z0, ...}) = 0.
  FeatureMatrix x(3, 1);
  x << 1.0, 2.0, 3.0;
  auto train = make_dataset(std::move(x), {2, 1, 0});
  GameSpec spec;
  spec.k = 1;
  spec.weight_scheme = WeightScheme::uniform;
  FeatureVector t(1);
  t << 0.0;

  auto v = banzhaf_exact_multiclass_bruteforce(train, t, 0, spec);
  // Slice weights by id: c=1 -> (0, -1, +1), c=2 -> (-1, 0, +1). With k=1
  // a coalition wins iff its nearest member has weight strictly positive,
  // so each slice wins only on S = {z2}: any S containing z0 or z1 puts a
  // non-positive weight in the top slot (the masked point still occupies
  // it). Marginals over the 4 coalitions per point:
  //   z2: only the empty set flips (both slices) -> +2 over 2 * 2^2.
  //   z0: joining {z2} demotes the win in both slices -> -2 over 8.
  //   z1: same shadowing effect as z0 -> -2 over 8.
  CHECK(v[0] == BigRat(-2, 8));
  CHECK(v[1] == BigRat(-2, 8));
  CHECK(v[2] == BigRat(2, 8));
}

TEST_CASE("enumeration cap guards exponential blowup") {
  std::vector<std::int64_t> sw(21, 1);
  auto big = game_from_signed_weights(sw, 1);
  CHECK_THROWS_AS(banzhaf_exact_bruteforce(big), KnnbvError);
  try {
    banzhaf_exact_bruteforce(big);
  } catch (const KnnbvError& e) {
    CHECK(e.category() == ErrorCategory::cap_exceeded);
  }
  // Explicit override admits it.
  auto v = banzhaf_exact_bruteforce(big, 21);
  CHECK(v.numerators.size() == 21);
  CHECK(v.numerators[0] > 0);
}
