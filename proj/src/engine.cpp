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
#include "knnbv/engine.hpp"

#include "knnbv/bruteforce.hpp"
#include "knnbv/dp_efficient.hpp"
#include "knnbv/dp_standard.hpp"
#include "knnbv/dp_unweighted.hpp"
#include "knnbv/errors.hpp"
#include "knnbv/monte_carlo.hpp"
#include "knnbv/rng.hpp"
#include "knnbv/synthetic.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace knnbv {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

TestPointValues from_exact(const ExactValueVector& ev) {
  TestPointValues tv;
  tv.exact = true;
  const int n = static_cast<int>(ev.numerators.size());
  tv.rationals.reserve(n);
  tv.doubles.reserve(n);
  for (int id = 0; id < n; ++id) {
    tv.rationals.push_back(ev.rational(id));
    tv.doubles.push_back(ev.value(id));
  }
  return tv;
}

TestPointValues value_prepared(const PreparedGame& game, const RunConfig& config,
                               std::uint64_t mc_seed) {
  TestPointValues tv;
  switch (config.algo) {
    case Algo::bruteforce: {
      const int cap = config.cap_override > 0 ? config.cap_override : kDefaultEnumerationCap;
      return from_exact(banzhaf_exact_bruteforce(game, cap));
    }
    case Algo::standard:
      return from_exact(banzhaf_dp_standard(game));
    case Algo::efficient:
      return from_exact(banzhaf_dp_efficient(game));
    case Algo::unweighted:
      return from_exact(banzhaf_dp_unweighted(game));
    case Algo::mc_coalition:
      tv.doubles = banzhaf_mc_coalition(game, config.samples, mc_seed).values;
      return tv;
    case Algo::mc_permutation:
      tv.doubles = banzhaf_mc_permutation(game, config.samples, mc_seed).values;
      return tv;
  }
  throw std::invalid_argument("unknown algorithm");
}

}  // namespace

TestPointValues value_test_point(const Dataset& train, const FeatureVector& test_features,
                                 int test_label, const RunConfig& config,
                                 std::uint64_t stream_id) {
  const std::uint64_t per_test_seed = substream(config.seed, stream_id).next();
  if (train.num_classes <= 2) {
    const PreparedGame game = prepare_game(train, test_features, test_label, config.spec);
    return value_prepared(game, config, per_test_seed);
  }

  const std::vector<BinarySubgame> subs =
      decompose_multiclass(train, test_features, test_label, config.spec);
  std::vector<std::vector<BigRat>> sub_rats;
  std::vector<std::vector<double>> sub_vals;
  for (std::size_t c = 0; c < subs.size(); ++c) {
    const std::uint64_t sub_seed = substream(per_test_seed, c + 1).next();
    TestPointValues one = value_prepared(subs[c].base, config, sub_seed);
    if (one.exact)
      sub_rats.push_back(std::move(one.rationals));
    else
      sub_vals.push_back(std::move(one.doubles));
  }

  TestPointValues tv;
  if (!sub_rats.empty()) {
    tv.exact = true;
    tv.rationals = average_over_tests(sub_rats);
    tv.doubles.reserve(tv.rationals.size());
    for (const BigRat& r : tv.rationals) tv.doubles.push_back(rat_to_double(r));
  } else {
    tv.doubles = average_over_tests(sub_vals);
  }
  return tv;
}

std::pair<Dataset, Dataset> split_train_test(const Dataset& all, double fraction,
                                             std::uint64_t seed) {
  const int n = all.n();
  if (n < 2) throw std::invalid_argument("split_train_test: need at least 2 rows");
  if (!(fraction > 0.0 && fraction < 1.0))
    throw std::invalid_argument("split_train_test: fraction must be in (0, 1)");
  int test_count = static_cast<int>(std::llround(fraction * n));
  test_count = std::max(1, std::min(test_count, n - 1));

  std::vector<int> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  SplitMix64 rng(seed);
  rng.shuffle(ids);
  std::vector<bool> is_test(n, false);
  for (int i = 0; i < test_count; ++i) is_test[ids[i]] = true;

  const auto take = [&](bool want_test, int count) {
    Dataset out;
    out.features.resize(count, all.d());
    out.labels.reserve(count);
    out.num_classes = all.num_classes;  // split halves keep the parent label space
    int r = 0;
    for (int i = 0; i < n; ++i) {
      if (is_test[i] != want_test) continue;
      out.features.row(r++) = all.features.row(i);
      out.labels.push_back(all.labels[i]);
    }
    out.validate();
    return out;
  };
  return {take(false, n - test_count), take(true, test_count)};
}

ValuationReport run_value_on(const RunConfig& config, const Dataset& train, const Dataset& test) {
  config.validate();
  if (test.n() == 0) throw std::invalid_argument("run_value: empty test set");
  if (test.d() != train.d())
    throw std::invalid_argument("run_value: train/test feature dimension mismatch");
  for (int t = 0; t < test.n(); ++t)
    if (test.labels[t] < 0 || test.labels[t] >= train.num_classes)
      throw std::invalid_argument("run_value: test label outside the training label space");

  const auto start = Clock::now();
  const int num_tests = test.n();
  std::vector<TestPointValues> per_test(num_tests);
  parallel_for(0, num_tests, config.threads, [&](int t) {
    per_test[t] = value_test_point(train, test.features.row(t), test.labels[t], config,
                                   static_cast<std::uint64_t>(t));
  });

  ValuationReport report;
  report.config = config;
  report.n = train.n();
  report.num_tests = num_tests;
  report.num_classes = train.num_classes;
  if (per_test.front().exact) {
    std::vector<std::vector<BigRat>> rats(num_tests);
    for (int t = 0; t < num_tests; ++t) rats[t] = std::move(per_test[t].rationals);
    const std::vector<BigRat> mean = average_over_tests(rats);
    report.values.reserve(mean.size());
    report.exact.reserve(mean.size());
    for (const BigRat& r : mean) {
      report.values.push_back(rat_to_double(r));
      report.exact.emplace_back(boost::multiprecision::numerator(r).str(),
                                boost::multiprecision::denominator(r).str());
    }
  } else {
    std::vector<std::vector<double>> vals(num_tests);
    for (int t = 0; t < num_tests; ++t) vals[t] = std::move(per_test[t].doubles);
    report.values = average_over_tests(vals);
  }
  report.timings.push_back({"value", seconds_since(start)});
  return report;
}

std::pair<Dataset, Dataset> load_train_test(const RunConfig& config) {
  if (config.train_path.empty()) throw std::invalid_argument("run_value: no training file");
  Dataset train = load_csv_dataset(config.train_path);
  Dataset test;
  if (!config.test_path.empty()) {
    test = load_csv_dataset(config.test_path);
    test.num_classes = std::max(test.num_classes, train.num_classes);
  } else {
    auto halves = split_train_test(train, config.test_fraction, config.seed);
    train = std::move(halves.first);
    test = std::move(halves.second);
  }
  return {std::move(train), std::move(test)};
}

ValuationReport run_value(const RunConfig& config) {
  config.validate();

  const auto start_load = Clock::now();
  auto [train, test] = load_train_test(config);
  const double load_secs = seconds_since(start_load);

  ValuationReport report = run_value_on(config, train, test);
  report.timings.insert(report.timings.begin(), {"load", load_secs});
  double total = 0.0;
  for (const auto& t : report.timings) total += t.seconds;
  report.timings.push_back({"total", total});

  if (!config.out_path.empty()) write_text_file(config.out_path, report.to_json());
  if (!config.csv_path.empty()) write_text_file(config.csv_path, value_table_csv(report));
  return report;
}

BenchResult run_bench(const RunConfig& config, const std::vector<int>& sizes) {
  config.validate();
  if (sizes.empty()) throw std::invalid_argument("run_bench: no sizes");
  for (std::size_t i = 0; i + 1 < sizes.size(); ++i)
    if (sizes[i] >= sizes[i + 1]) throw std::invalid_argument("run_bench: sizes must ascend");
  if (sizes.front() < std::max(2, config.spec.k))
    throw std::invalid_argument("run_bench: smallest size must fit k");

  BenchResult result;
  result.algorithm = algo_name(config.algo);
  bool budget_blown = false;
  for (int n : sizes) {
    BenchRow row;
    row.n = n;
    if (budget_blown) {
      row.timed_out = true;
      result.rows.push_back(row);
      continue;
    }
    // Fixed seeds make every row reproducible; the run itself is
    // single-threaded because only one test point is valued.
    const Dataset train = make_two_gaussians(n, 32, 1.0, config.seed);
    const FeatureVector test_features = make_gaussian_test_point(32, config.seed + 1);
    const auto start = Clock::now();
    value_test_point(train, test_features, 0, config, 0);
    row.seconds = seconds_since(start);
    if (row.seconds > config.budget_secs) {
      row.timed_out = true;
      budget_blown = true;
    }
    result.rows.push_back(row);
  }

  std::vector<std::pair<double, double>> pts;
  for (const BenchRow& row : result.rows)
    if (!row.timed_out) pts.emplace_back(static_cast<double>(row.n), row.seconds);
  if (pts.size() >= 2) {
    result.slope = fit_loglog_slope(pts);
    result.slope_valid = true;
  }
  return result;
}

double fit_loglog_slope(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 2) throw std::invalid_argument("fit_loglog_slope: need >= 2 points");
  std::vector<double> lx, ly;
  for (const auto& [x, y] : points) {
    if (!(x > 0.0)) throw std::invalid_argument("fit_loglog_slope: x must be > 0");
    lx.push_back(std::log(x));
    ly.push_back(std::log(std::max(y, 1e-12)));
  }
  const double n = static_cast<double>(points.size());
  const double mx = std::accumulate(lx.begin(), lx.end(), 0.0) / n;
  const double my = std::accumulate(ly.begin(), ly.end(), 0.0) / n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("fit_loglog_slope: degenerate x values");
  return sxy / sxx;
}

void parallel_for(int begin, int end, int threads, const std::function<void(int)>& body) {
  const int count = end - begin;
  if (count <= 0) return;
  unsigned want = threads > 0 ? static_cast<unsigned>(threads)
                              : std::max(1u, std::thread::hardware_concurrency());
  want = std::min(want, static_cast<unsigned>(count));
  if (want <= 1) {
    for (int i = begin; i < end; ++i) body(i);
    return;
  }

  std::mutex err_mu;
  std::exception_ptr first_error;
  const auto run_chunk = [&](int lo, int hi) {
    try {
      for (int i = lo; i < hi; ++i) body(i);
    } catch (...) {
      const std::lock_guard<std::mutex> lock(err_mu);
      if (!first_error) first_error = std::current_exception();
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(want);
  for (unsigned t = 0; t < want; ++t) {
    const int lo = begin + static_cast<int>(static_cast<long long>(count) * t / want);
    const int hi = begin + static_cast<int>(static_cast<long long>(count) * (t + 1) / want);
    pool.emplace_back(run_chunk, lo, hi);
  }
  for (std::thread& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace knnbv
