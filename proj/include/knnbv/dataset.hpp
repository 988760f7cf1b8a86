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

#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace knnbv {

using FeatureMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using FeatureVector = Eigen::RowVectorXd;

enum class Metric { euclidean, manhattan, cosine };

struct LabeledPoint {
  int id = 0;
  FeatureVector features;
  int label = 0;
};

// Training points in columnar form: one feature row per point, labels aligned
// by row. ids are implicit row indices 0..n-1.
struct Dataset {
  FeatureMatrix features;  // n x d
  std::vector<int> labels;
  int num_classes = 0;

  int n() const { return static_cast<int>(features.rows()); }
  int d() const { return static_cast<int>(features.cols()); }

  LabeledPoint point(int id) const { return LabeledPoint{id, features.row(id), labels[id]}; }

  void validate() const {
    if (static_cast<int>(labels.size()) != n())
      throw std::invalid_argument("dataset: labels/features row mismatch");
    for (int i = 0; i < n(); ++i)
      if (labels[i] < 0 || labels[i] >= num_classes)
        throw std::invalid_argument("dataset: label out of range at row " + std::to_string(i));
  }
};

inline Dataset make_dataset(FeatureMatrix features, std::vector<int> labels) {
  Dataset ds;
  ds.features = std::move(features);
  ds.labels = std::move(labels);
  int maxl = 1;
  for (int l : ds.labels) maxl = l > maxl ? l : maxl;
  ds.num_classes = maxl + 1;
  ds.validate();
  return ds;
}

// Distance from every row of X to the single point t. Expression-friendly:
// accepts any Eigen dense expressions of matching shapes.
template <typename DerivedX, typename DerivedT>
Eigen::VectorXd pairwise_distances(const Eigen::MatrixBase<DerivedX>& X,
                                   const Eigen::MatrixBase<DerivedT>& t, Metric metric) {
  const Eigen::Index n = X.rows();
  Eigen::VectorXd out(n);
  switch (metric) {
    case Metric::euclidean:
      out = (X.rowwise() - t.row(0)).rowwise().norm();
      break;
    case Metric::manhattan:
      out = (X.rowwise() - t.row(0)).cwiseAbs().rowwise().sum();
      break;
    case Metric::cosine: {
      const double tn = t.row(0).norm();
      for (Eigen::Index i = 0; i < n; ++i) {
        const double xn = X.row(i).norm();
        if (xn == 0.0 && tn == 0.0)
          out[i] = 0.0;  // identical zero vectors
        else if (xn == 0.0 || tn == 0.0)
          out[i] = 1.0;  // undefined similarity treated as orthogonal
        else
          out[i] = 1.0 - X.row(i).dot(t.row(0)) / (xn * tn);
      }
      break;
    }
  }
  return out;
}

inline Metric parse_metric(const std::string& s) {
  if (s == "euclidean") return Metric::euclidean;
  if (s == "manhattan") return Metric::manhattan;
  if (s == "cosine") return Metric::cosine;
  throw std::invalid_argument("unknown metric: " + s);
}

inline std::string metric_name(Metric m) {
  switch (m) {
    case Metric::euclidean: return "euclidean";
    case Metric::manhattan: return "manhattan";
    case Metric::cosine: return "cosine";
  }
  return "euclidean";
}

}  // namespace knnbv
