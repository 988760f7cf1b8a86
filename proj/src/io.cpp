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
#include "knnbv/io.hpp"

#include "knnbv/errors.hpp"

#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace knnbv {

namespace {

using nlohmann::json;

std::string fmt_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);  // shortest round-trip form
  return std::string(buf, res.ptr);
}

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') cells.push_back("");
  return cells;
}

std::string weight_scheme_base_name(WeightScheme s) {
  switch (s) {
    case WeightScheme::uniform: return "uniform";
    case WeightScheme::inverse_distance: return "inverse";
    case WeightScheme::rbf: return "rbf";
  }
  return "uniform";
}

WeightScheme weight_scheme_from_base_name(const std::string& s) {
  if (s == "uniform") return WeightScheme::uniform;
  if (s == "inverse") return WeightScheme::inverse_distance;
  if (s == "rbf") return WeightScheme::rbf;
  throw KnnbvError(ErrorCategory::parse_error, "unknown weight scheme in report: " + s);
}

json config_to_json(const RunConfig& c) {
  return json{{"algo", algo_name(c.algo)},
              {"k", c.spec.k},
              {"bits", c.spec.bits},
              {"weights", weight_scheme_base_name(c.spec.weight_scheme)},
              {"scheme_param", c.spec.scheme_param},
              {"metric", metric_name(c.spec.metric)},
              {"samples", c.samples},
              {"seed", c.seed},
              {"test_fraction", c.test_fraction},
              {"train", c.train_path},
              {"test", c.test_path},
              {"out", c.out_path},
              {"csv", c.csv_path},
              {"threads", c.threads},
              {"budget_secs", c.budget_secs},
              {"cap_override", c.cap_override}};
}

RunConfig config_from_json(const json& j) {
  RunConfig c;
  c.algo = parse_algo(j.at("algo").get<std::string>());
  c.spec.k = j.at("k").get<int>();
  c.spec.bits = j.at("bits").get<int>();
  c.spec.weight_scheme = weight_scheme_from_base_name(j.at("weights").get<std::string>());
  c.spec.scheme_param = j.at("scheme_param").get<double>();
  c.spec.metric = parse_metric(j.at("metric").get<std::string>());
  c.samples = j.at("samples").get<std::int64_t>();
  c.seed = j.at("seed").get<std::uint64_t>();
  c.test_fraction = j.at("test_fraction").get<double>();
  c.train_path = j.at("train").get<std::string>();
  c.test_path = j.at("test").get<std::string>();
  c.out_path = j.at("out").get<std::string>();
  c.csv_path = j.at("csv").get<std::string>();
  c.threads = j.at("threads").get<int>();
  c.budget_secs = j.at("budget_secs").get<double>();
  c.cap_override = j.at("cap_override").get<int>();
  return c;
}

}  // namespace

Algo parse_algo(const std::string& s) {
  if (s == "bruteforce") return Algo::bruteforce;
  if (s == "standard") return Algo::standard;
  if (s == "efficient") return Algo::efficient;
  if (s == "unweighted") return Algo::unweighted;
  if (s == "mc-coalition") return Algo::mc_coalition;
  if (s == "mc-permutation") return Algo::mc_permutation;
  throw std::invalid_argument("unknown algorithm: " + s);
}

std::string algo_name(Algo a) {
  switch (a) {
    case Algo::bruteforce: return "bruteforce";
    case Algo::standard: return "standard";
    case Algo::efficient: return "efficient";
    case Algo::unweighted: return "unweighted";
    case Algo::mc_coalition: return "mc-coalition";
    case Algo::mc_permutation: return "mc-permutation";
  }
  return "efficient";
}

bool algo_is_mc(Algo a) { return a == Algo::mc_coalition || a == Algo::mc_permutation; }
bool algo_is_exact(Algo a) { return !algo_is_mc(a); }

void RunConfig::validate() const {
  if (spec.k < 1) throw std::invalid_argument("config: k must be >= 1");
  if (spec.bits < 1) throw std::invalid_argument("config: bits must be >= 1");
  if (algo == Algo::unweighted && spec.weight_scheme != WeightScheme::uniform)
    throw std::invalid_argument("config: the unweighted engine requires the uniform scheme");
  if (algo_is_mc(algo) && samples < 1)
    throw std::invalid_argument("config: Monte Carlo needs samples >= 1");
  if (test_path.empty() && !(test_fraction > 0.0 && test_fraction < 1.0))
    throw std::invalid_argument("config: test_fraction must be in (0, 1)");
  if (threads < 0) throw std::invalid_argument("config: threads must be >= 0");
  if (!(budget_secs > 0.0)) throw std::invalid_argument("config: budget_secs must be > 0");
  if (cap_override < 0) throw std::invalid_argument("config: cap_override must be >= 0");
}

std::vector<BigRat> ValuationReport::rationals() const {
  std::vector<BigRat> out;
  out.reserve(exact.size());
  for (const auto& [num, den] : exact) out.emplace_back(BigInt(num), BigInt(den));
  return out;
}

std::string ValuationReport::to_json() const {
  json j;
  j["config"] = config_to_json(config);
  j["n"] = n;
  j["num_tests"] = num_tests;
  j["num_classes"] = num_classes;
  j["values"] = values;
  json ex = json::array();
  for (const auto& [num, den] : exact) ex.push_back(json::array({num, den}));
  j["exact"] = ex;
  json ts = json::array();
  for (const auto& t : timings) ts.push_back(json{{"phase", t.phase}, {"seconds", t.seconds}});
  j["timings"] = ts;
  return j.dump(2) + "\n";
}

ValuationReport ValuationReport::from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw KnnbvError(ErrorCategory::parse_error, std::string("report: ") + e.what());
  }
  try {
    ValuationReport r;
    r.config = config_from_json(j.at("config"));
    r.n = j.at("n").get<int>();
    r.num_tests = j.at("num_tests").get<int>();
    r.num_classes = j.at("num_classes").get<int>();
    r.values = j.at("values").get<std::vector<double>>();
    for (const auto& e : j.at("exact"))
      r.exact.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
    for (const auto& t : j.at("timings"))
      r.timings.push_back({t.at("phase").get<std::string>(), t.at("seconds").get<double>()});
    return r;
  } catch (const json::exception& e) {
    throw KnnbvError(ErrorCategory::parse_error, std::string("report: ") + e.what());
  }
}

std::string value_table_csv(const ValuationReport& report) {
  std::string out;
  const bool with_exact = !report.exact.empty();
  out += with_exact ? "id,value,numerator,denominator\n" : "id,value\n";
  for (std::size_t i = 0; i < report.values.size(); ++i) {
    out += std::to_string(i) + "," + fmt_double(report.values[i]);
    if (with_exact) out += "," + report.exact[i].first + "," + report.exact[i].second;
    out += "\n";
  }
  return out;
}

std::string curve_csv(const Curve& curve) {
  std::string out = "step,accuracy\n";
  for (std::size_t i = 0; i < curve.x.size(); ++i)
    out += std::to_string(curve.x[i]) + "," + fmt_double(curve.y[i]) + "\n";
  return out;
}

std::string bench_csv(const BenchResult& result) {
  std::string out = "n,seconds,timed_out\n";
  for (const BenchRow& row : result.rows)
    out += std::to_string(row.n) + "," + fmt_double(row.seconds) + "," +
           (row.timed_out ? "1" : "0") + "\n";
  if (result.slope_valid) out += "# loglog_slope " + fmt_double(result.slope) + "\n";
  return out;
}

std::string detection_json(const DetectionScores& scores, const NoiseMask& mask,
                           int predicted_count, const std::string& algorithm) {
  json j{{"precision", scores.precision},
         {"recall", scores.recall},
         {"f1", scores.f1},
         {"auc_roc", scores.auc_roc},
         {"flipped", mask.flipped_ids.size()},
         {"predicted", predicted_count},
         {"rate", mask.rate},
         {"seed", mask.seed},
         {"algo", algorithm}};
  return j.dump(2) + "\n";
}

Dataset load_csv_dataset(const std::string& path) {
  const std::string text = read_text_file(path);
  std::vector<std::string> lines;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
  if (lines.empty()) throw KnnbvError(ErrorCategory::parse_error, path + ": empty file");

  const std::vector<std::string> header = split_csv_line(lines[0]);
  int label_col = -1;
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (header[c] == "label") {
      if (label_col >= 0)
        throw KnnbvError(ErrorCategory::parse_error, path + ": duplicate label column");
      label_col = static_cast<int>(c);
    }
  }
  if (label_col < 0) throw KnnbvError(ErrorCategory::parse_error, path + ": missing label column");
  const int ncols = static_cast<int>(header.size());
  const int nfeat = ncols - 1;
  if (nfeat < 1) throw KnnbvError(ErrorCategory::parse_error, path + ": no feature columns");
  const int nrows = static_cast<int>(lines.size()) - 1;
  if (nrows < 1) throw KnnbvError(ErrorCategory::parse_error, path + ": no data rows");

  FeatureMatrix features(nrows, nfeat);
  std::vector<int> labels(nrows);
  for (int r = 0; r < nrows; ++r) {
    const std::string row_name = "row " + std::to_string(r + 2);  // 1-based file line
    const std::vector<std::string> cells = split_csv_line(lines[r + 1]);
    if (static_cast<int>(cells.size()) != ncols)
      throw KnnbvError(ErrorCategory::parse_error,
                       path + ": " + row_name + ": expected " + std::to_string(ncols) +
                           " columns, got " + std::to_string(cells.size()));
    int f = 0;
    for (int c = 0; c < ncols; ++c) {
      const std::string& cell = cells[c];
      const char* begin = cell.c_str();
      char* end = nullptr;
      if (c == label_col) {
        const long v = std::strtol(begin, &end, 10);
        if (cell.empty() || end != begin + cell.size() || v < 0)
          throw KnnbvError(ErrorCategory::parse_error,
                           path + ": " + row_name + ", column label: not a class id: '" + cell +
                               "'");
        labels[r] = static_cast<int>(v);
      } else {
        const double v = std::strtod(begin, &end);
        if (cell.empty() || end != begin + cell.size() || !std::isfinite(v))
          throw KnnbvError(ErrorCategory::parse_error,
                           path + ": " + row_name + ", column " + header[c] +
                               ": not a number: '" + cell + "'");
        features(r, f++) = v;
      }
    }
  }
  return make_dataset(std::move(features), std::move(labels));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw KnnbvError(ErrorCategory::io_error, "cannot open for reading: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw KnnbvError(ErrorCategory::io_error, "read failed: " + path);
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw KnnbvError(ErrorCategory::io_error, "cannot open for writing: " + path);
  out << content;
  out.flush();
  if (!out) throw KnnbvError(ErrorCategory::io_error, "write failed: " + path);
}

}  // namespace knnbv
