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

#include "knnbv/apps.hpp"
#include "knnbv/bigint.hpp"
#include "knnbv/dataset.hpp"
#include "knnbv/game.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace knnbv {

enum class Algo { bruteforce, standard, efficient, unweighted, mc_coalition, mc_permutation };

Algo parse_algo(const std::string& s);
std::string algo_name(Algo a);

// Exact engines emit rationals; the Monte Carlo estimators emit floats only.
bool algo_is_exact(Algo a);
bool algo_is_mc(Algo a);

// One run, fully specified: echoing this struct reproduces the run
// bit-for-bit on the same build.
struct RunConfig {
  Algo algo = Algo::efficient;
  GameSpec spec;
  std::int64_t samples = 10000;  // Monte Carlo rounds
  std::uint64_t seed = 1;
  double test_fraction = 0.2;  // used only when test_path is empty
  std::string train_path;
  std::string test_path;
  std::string out_path;  // JSON report; empty = stdout
  std::string csv_path;  // optional per-point value table
  int threads = 0;       // 0 = hardware concurrency
  double budget_secs = 600.0;
  int cap_override = 0;  // raises the brute-force enumeration cap when > 0

  // Rejects inconsistent combinations (the unweighted engine requires the
  // uniform scheme, Monte Carlo needs samples >= 1, the fraction split needs
  // test_fraction in (0, 1)).
  void validate() const;
};

struct PhaseTiming {
  std::string phase;
  double seconds = 0.0;
};

// Per-point values averaged over the test points, with exact rationals as
// decimal (numerator, denominator) string pairs when the engine is exact.
// values[i] always equals the rational rounded to double.
struct ValuationReport {
  RunConfig config;
  int n = 0;
  int num_tests = 0;
  int num_classes = 0;
  std::vector<double> values;
  std::vector<std::pair<std::string, std::string>> exact;  // empty for Monte Carlo runs
  std::vector<PhaseTiming> timings;

  std::vector<BigRat> rationals() const;  // parsed back from the exact strings
  std::string to_json() const;
  static ValuationReport from_json(const std::string& text);
};

// CSV renderings (deterministic, round-trip double formatting).
std::string value_table_csv(const ValuationReport& report);
std::string curve_csv(const Curve& curve);

struct BenchRow {
  int n = 0;
  double seconds = 0.0;
  bool timed_out = false;
};

struct BenchResult {
  std::string algorithm;
  std::vector<BenchRow> rows;
  double slope = 0.0;  // log-log fit over completed rows
  bool slope_valid = false;
};

std::string bench_csv(const BenchResult& result);

// JSON report of a mislabel-detection run: the four scores plus the mask
// bookkeeping needed to reproduce it.
std::string detection_json(const DetectionScores& scores, const NoiseMask& mask,
                           int predicted_count, const std::string& algorithm);

// Header row with feature columns plus one `label` column of integer class
// ids; point ids are assigned by row order. Parse failures name the row and
// column. Throws KnnbvError(io_error) when the file cannot be read and
// KnnbvError(parse_error) on malformed content.
Dataset load_csv_dataset(const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace knnbv
