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
#include "knnbv/monte_carlo.hpp"

#include "knnbv/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace knnbv {

const char* mc_method_name(McMethod m) {
  return m == McMethod::coalition ? "coalition" : "permutation";
}

McMethod parse_mc_method(const std::string& s) {
  if (s == "coalition") return McMethod::coalition;
  if (s == "permutation") return McMethod::permutation;
  throw std::invalid_argument("unknown sampling method: " + s);
}

namespace {

void check_mc_args(const PreparedGame& game, std::int64_t m, const char* who) {
  if (game.n < 1 || game.k < 1 || game.k > game.n ||
      static_cast<int>(game.signed_weights.size()) != game.n)
    throw std::invalid_argument(std::string(who) + ": malformed game");
  if (m < 1) throw std::invalid_argument(std::string(who) + ": need at least one sample");
}

}  // namespace

void TopKWindow::reset(int k_, int capacity_) {
  k = k_;
  capacity = capacity_;
  ranks.clear();
  topk_sum = 0;
  coalition_size = 0;
}

void TopKWindow::insert(const PreparedGame& game, int rank) {
  ++coalition_size;
  auto it = std::lower_bound(ranks.begin(), ranks.end(), rank);
  if (static_cast<int>(ranks.size()) < capacity || it != ranks.end()) {
    ranks.insert(it, rank);
    if (static_cast<int>(ranks.size()) > capacity) ranks.pop_back();
  }
  topk_sum = 0;
  const int top = std::min<int>(k, static_cast<int>(ranks.size()));
  for (int j = 0; j < top; ++j) topk_sum += game.weight_of_rank(ranks[j]);
}

int TopKWindow::marginal_as_outsider(const PreparedGame& game, int rank) const {
  std::int64_t with;
  if (coalition_size < k) {
    with = topk_sum + game.weight_of_rank(rank);
  } else {
    const int kth = ranks[static_cast<std::size_t>(k) - 1];
    if (rank > kth) return 0;
    with = topk_sum + game.weight_of_rank(rank) - game.weight_of_rank(kth);
  }
  return (with > 0 ? 1 : 0) - (topk_sum > 0 ? 1 : 0);
}

int TopKWindow::marginal_as_member(const PreparedGame& game, int rank) const {
  if (static_cast<int>(ranks.size()) == capacity && rank > ranks.back()) return 0;
  const auto it = std::lower_bound(ranks.begin(), ranks.end(), rank);
  const int pos = static_cast<int>(it - ranks.begin());
  if (pos >= k) return 0;
  std::int64_t without = topk_sum - game.weight_of_rank(rank);
  if (static_cast<int>(ranks.size()) >= k + 1) without += game.weight_of_rank(ranks[static_cast<std::size_t>(k)]);
  return (topk_sum > 0 ? 1 : 0) - (without > 0 ? 1 : 0);
}

EstimateVector banzhaf_mc_coalition(const PreparedGame& game, std::int64_t m,
                                    std::uint64_t seed) {
  check_mc_args(game, m, "banzhaf_mc_coalition");
  const int n = game.n;
  std::vector<std::int64_t> acc(static_cast<std::size_t>(n), 0);
  std::vector<char> included(static_cast<std::size_t>(n) + 1, 0);
  TopKWindow window;
  for (std::int64_t round = 0; round < m; ++round) {
    SplitMix64 rng = substream(seed, static_cast<std::uint64_t>(round));
    window.reset(game.k, game.k + 1);
    for (int r = 1; r <= n; ++r) {
      included[static_cast<std::size_t>(r)] = rng.coin() ? 1 : 0;
      if (included[static_cast<std::size_t>(r)]) window.insert(game, r);
    }
    for (int r = 1; r <= n; ++r) {
      const int marg = included[static_cast<std::size_t>(r)]
                           ? window.marginal_as_member(game, r)
                           : window.marginal_as_outsider(game, r);
      acc[static_cast<std::size_t>(game.order[static_cast<std::size_t>(r - 1)])] += marg;
    }
  }
  EstimateVector out;
  out.samples = m;
  out.seed = seed;
  out.method = McMethod::coalition;
  out.values.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    out.values[static_cast<std::size_t>(i)] =
        static_cast<double>(acc[static_cast<std::size_t>(i)]) / static_cast<double>(m);
  return out;
}

namespace {

// Running weight u(s) = n * C(n-1, s) / 2^(n-1) split into mantissa and
// exponent; the plain double value underflows near the ends for large n.
struct ScaledWeight {
  double mant = 0.0;
  int ex = 0;

  void init(int n) {
    mant = static_cast<double>(n);
    ex = -(n - 1);
    normalize();
  }
  void step(int n, int s) {  // u(s) -> u(s+1)
    mant *= static_cast<double>(n - 1 - s) / static_cast<double>(s + 1);
    normalize();
  }
  void normalize() {
    int e = 0;
    mant = std::frexp(mant, &e);
    ex += e;
  }
  double value() const { return std::ldexp(mant, ex); }
};

}  // namespace

double permutation_sample_weight(int n, int s) {
  if (n < 1 || s < 0 || s > n - 1)
    throw std::invalid_argument("permutation_sample_weight: bad predecessor count");
  ScaledWeight u;
  u.init(n);
  for (int j = 0; j < s; ++j) u.step(n, j);
  return u.value();
}

EstimateVector banzhaf_mc_permutation(const PreparedGame& game, std::int64_t m,
                                      std::uint64_t seed) {
  check_mc_args(game, m, "banzhaf_mc_permutation");
  const int n = game.n;
  std::vector<double> acc(static_cast<std::size_t>(n), 0.0);
  std::vector<int> perm(static_cast<std::size_t>(n));
  TopKWindow window;
  for (std::int64_t round = 0; round < m; ++round) {
    SplitMix64 rng = substream(seed, static_cast<std::uint64_t>(round));
    std::iota(perm.begin(), perm.end(), 1);
    rng.shuffle(perm);
    window.reset(game.k, game.k);
    ScaledWeight u;
    u.init(n);
    for (int pos = 0; pos < n; ++pos) {
      const int r = perm[static_cast<std::size_t>(pos)];
      const int delta = window.marginal_as_outsider(game, r);
      if (delta != 0)
        acc[static_cast<std::size_t>(game.order[static_cast<std::size_t>(r - 1)])] +=
            static_cast<double>(delta) * u.value();
      window.insert(game, r);
      if (pos + 1 < n) u.step(n, pos);
    }
  }
  EstimateVector out;
  out.samples = m;
  out.seed = seed;
  out.method = McMethod::permutation;
  out.values.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    out.values[static_cast<std::size_t>(i)] =
        acc[static_cast<std::size_t>(i)] / static_cast<double>(m);
  return out;
}

double deviation(const EstimateVector& estimate, const ExactValueVector& exact) {
  if (estimate.values.size() != exact.numerators.size())
    throw std::invalid_argument("deviation: length mismatch");
  double max_err = 0.0, max_exact = 0.0;
  for (std::size_t i = 0; i < estimate.values.size(); ++i) {
    const double e = exact.value(static_cast<int>(i));
    max_err = std::max(max_err, std::abs(estimate.values[i] - e));
    max_exact = std::max(max_exact, std::abs(e));
  }
  if (max_exact == 0.0)
    return max_err == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return max_err / max_exact;
}

}  // namespace knnbv
