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
#include "CLI11.hpp"

#include "knnbv/engine.hpp"
#include "knnbv/errors.hpp"

#include <cmath>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace knnbv;

int exit_code_for(ErrorCategory c) {
  switch (c) {
    case ErrorCategory::invalid_argument: return 2;
    case ErrorCategory::cap_exceeded: return 3;
    case ErrorCategory::parse_error: return 4;
    case ErrorCategory::io_error: return 5;
    case ErrorCategory::budget_exceeded: return 6;
    case ErrorCategory::unsupported: return 7;
  }
  return 1;
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default: out += c;
    }
  }
  return out;
}

void emit_error(const std::string& category, const std::string& message) {
  std::cerr << "{\"error\": \"" << json_escape(category) << "\", \"message\": \""
            << json_escape(message) << "\"}\n";
}

// Options shared by every subcommand, parsed as strings where the config
// types are enums. A config file named by --config provides flat key=value
// defaults; explicit flags override it.
struct CliOptions {
  RunConfig config;
  std::string algo = "efficient";
  std::string weights = "uniform";
  std::string metric = "euclidean";
  int steps = -1;  // -1 = subcommand-specific default
  int warmup = 5;
  double rate = 0.05;
  std::vector<int> sizes;
};

void add_common(CLI::App* sub, CliOptions& o, bool needs_train) {
  auto* train = sub->add_option("--train", o.config.train_path,
                                "training CSV with feature columns and a label column");
  if (needs_train) train->required();
  sub->add_option("--algo", o.algo,
                  "bruteforce|standard|efficient|unweighted|mc-coalition|mc-permutation");
  sub->add_option("--k", o.config.spec.k, "number of neighbors");
  sub->add_option("--bits", o.config.spec.bits, "weight discretization bits");
  sub->add_option("--weights", o.weights, "uniform | inverse[:eps] | rbf[:sigma]");
  sub->add_option("--metric", o.metric, "euclidean|manhattan|cosine");
  sub->add_option("--samples", o.config.samples, "Monte Carlo rounds");
  sub->add_option("--seed", o.config.seed, "RNG seed");
  sub->add_option("--test-fraction", o.config.test_fraction,
                  "fraction of --train carved out as the test set");
  sub->add_option("--test-file", o.config.test_path, "explicit test CSV (overrides the split)");
  sub->add_option("--out", o.config.out_path, "output file (default stdout)");
  sub->add_option("--csv", o.config.csv_path, "also write the per-point value table CSV here");
  sub->add_option("--threads", o.config.threads, "worker threads over test points (0 = all cores)");
  sub->add_option("--budget-secs", o.config.budget_secs, "cooperative time budget");
  sub->add_option("--cap-override", o.config.cap_override,
                  "raise the brute-force enumeration cap");
  sub->set_config("--config", "", "flat key=value file mirroring these flags");
}

void finish_config(CliOptions& o) {
  o.config.algo = parse_algo(o.algo);
  double param = 0.0;
  o.config.spec.weight_scheme = parse_weight_scheme(o.weights, &param);
  if (o.config.spec.weight_scheme != WeightScheme::uniform) o.config.spec.scheme_param = param;
  o.config.spec.metric = parse_metric(o.metric);
  o.config.validate();
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty())
    std::cout << content;
  else
    write_text_file(out_path, content);
}

void run_value_command(CliOptions& o) {
  finish_config(o);
  const ValuationReport report = run_value(o.config);
  if (o.config.out_path.empty()) std::cout << report.to_json();
}

void run_bench_command(CliOptions& o) {
  finish_config(o);
  o.config.threads = 1;  // measurement rule: no algorithm-specific parallelism
  const BenchResult result = run_bench(o.config, o.sizes);
  emit(o.config.out_path, bench_csv(result));
}

// Shared head of the curve subcommands: load, value, hand back both halves.
struct AppContext {
  Dataset train;
  Dataset test;
  ValuationReport report;
};

AppContext value_for_apps(CliOptions& o, const Dataset& train, const Dataset& test) {
  AppContext ctx;
  ctx.report = run_value_on(o.config, train, test);
  ctx.train = train;
  ctx.test = test;
  return ctx;
}

void run_remove_command(CliOptions& o) {
  finish_config(o);
  auto [train, test] = load_train_test(o.config);
  AppContext ctx = value_for_apps(o, train, test);
  const int steps = o.steps < 0 ? ctx.train.n() : o.steps;
  Curve curve = point_removal_curve(ctx.train, ctx.test, ctx.report.values, o.config.spec, steps);
  curve.algorithm = algo_name(o.config.algo);
  curve.seed = o.config.seed;
  emit(o.config.out_path, curve_csv(curve));
}

void run_select_command(CliOptions& o) {
  finish_config(o);
  auto [train, test] = load_train_test(o.config);
  AppContext ctx = value_for_apps(o, train, test);
  const int steps = o.steps < 0 ? ctx.train.n() - o.warmup : o.steps;
  Curve curve = data_selection_curve(ctx.train, ctx.test, ctx.report.values, o.config.spec,
                                     o.warmup, steps, o.config.seed);
  curve.algorithm = algo_name(o.config.algo);
  emit(o.config.out_path, curve_csv(curve));
}

void run_mislabel_command(CliOptions& o) {
  finish_config(o);
  auto [train, test] = load_train_test(o.config);
  const auto [corrupted, mask] = inject_label_noise(train, o.rate, o.config.seed);
  AppContext ctx = value_for_apps(o, corrupted, test);
  const DetectionScores scores = mislabel_detection_scores(ctx.report.values, mask, o.rate);
  const int predicted =
      static_cast<int>(std::llround(o.rate * static_cast<double>(ctx.train.n())));
  emit(o.config.out_path, detection_json(scores, mask, predicted, algo_name(o.config.algo)));
  if (!o.config.csv_path.empty())
    write_text_file(o.config.csv_path, value_table_csv(ctx.report));
}

void run_flip_command(CliOptions& o) {
  finish_config(o);
  auto [train, test] = load_train_test(o.config);
  const auto [corrupted, mask] = inject_label_noise(train, o.rate, o.config.seed);
  AppContext ctx = value_for_apps(o, corrupted, test);
  const int flipped = static_cast<int>(mask.flipped_ids.size());
  const int steps = o.steps < 0 ? std::min(ctx.train.n(), 2 * flipped) : o.steps;
  Curve curve =
      label_flip_repair_curve(corrupted, ctx.test, ctx.report.values, o.config.spec, steps);
  curve.algorithm = algo_name(o.config.algo);
  curve.seed = o.config.seed;
  emit(o.config.out_path, curve_csv(curve));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact and approximate Banzhaf data values for k-nearest-neighbor classifiers"};
  app.require_subcommand(1);

  CliOptions value_o, oracle_o, mc_o, bench_o, remove_o, select_o, mislabel_o, flip_o;

  CLI::App* value = app.add_subcommand("value", "per-point values averaged over the test set");
  add_common(value, value_o, true);
  value->callback([&] { run_value_command(value_o); });

  CLI::App* oracle =
      app.add_subcommand("oracle", "exact values by full enumeration (small n only)");
  add_common(oracle, oracle_o, true);
  oracle->callback([&] {
    oracle_o.algo = "bruteforce";
    run_value_command(oracle_o);
  });

  CLI::App* mc = app.add_subcommand("mc", "Monte Carlo estimates of the values");
  mc_o.algo = "mc-coalition";
  std::string mc_method;
  add_common(mc, mc_o, true);
  mc->add_option("--method", mc_method, "coalition|permutation (alias for --algo mc-<method>)");
  mc->callback([&] {
    if (!mc_method.empty()) mc_o.algo = "mc-" + mc_method;
    if (!algo_is_mc(parse_algo(mc_o.algo)))
      throw std::invalid_argument("mc: --method must be coalition or permutation");
    run_value_command(mc_o);
  });

  CLI::App* bench = app.add_subcommand("bench", "time one engine across synthetic sizes");
  add_common(bench, bench_o, false);
  bench->add_option("--sizes", bench_o.sizes, "ascending dataset sizes")
      ->required()
      ->delimiter(',');
  bench->callback([&] { run_bench_command(bench_o); });

  CLI::App* remove =
      app.add_subcommand("remove", "accuracy curve while removing the highest-valued points");
  add_common(remove, remove_o, true);
  remove->add_option("--steps", remove_o.steps, "removal steps (default n)");
  remove->callback([&] { run_remove_command(remove_o); });

  CLI::App* select =
      app.add_subcommand("select", "accuracy curve while adding the highest-valued points");
  add_common(select, select_o, true);
  select->add_option("--steps", select_o.steps, "selection steps (default n - warmup)");
  select->add_option("--warmup", select_o.warmup, "random starter points");
  select->callback([&] { run_select_command(select_o); });

  CLI::App* mislabel =
      app.add_subcommand("mislabel", "inject label noise and score its detection by low value");
  add_common(mislabel, mislabel_o, true);
  mislabel->add_option("--rate", mislabel_o.rate, "fraction of labels to flip");
  mislabel->callback([&] { run_mislabel_command(mislabel_o); });

  CLI::App* flip = app.add_subcommand(
      "flip", "inject label noise, then repair lowest-valued labels and track accuracy");
  add_common(flip, flip_o, true);
  flip->add_option("--rate", flip_o.rate, "fraction of labels to flip");
  flip->add_option("--steps", flip_o.steps, "repair steps (default 2x the flipped count)");
  flip->callback([&] { run_flip_command(flip_o); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() != 0) emit_error("invalid_argument", e.what());
    return app.exit(e);
  } catch (const KnnbvError& e) {
    emit_error(error_category_name(e.category()), e.what());
    return exit_code_for(e.category());
  } catch (const std::invalid_argument& e) {
    emit_error("invalid_argument", e.what());
    return 2;
  } catch (const std::exception& e) {
    emit_error("internal", e.what());
    return 1;
  }
  return 0;
}
