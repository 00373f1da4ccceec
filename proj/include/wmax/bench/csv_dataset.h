// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WMAX_BENCH_CSV_DATASET_H_
#define WMAX_BENCH_CSV_DATASET_H_

#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace wmax {

enum class Task { kRegression, kClassification };

Task ParseTask(const std::string& name);

struct CsvDataset {
  Eigen::MatrixXd features;  // standardized, constant columns removed
  Eigen::VectorXd target;    // centered (regression) or in {-1, +1}
  std::vector<std::string> feature_names;
  std::vector<std::string> warnings;
};

// Reads a rectangular comma-separated table with a header row. The target is
// the column named `target_column`; every other column is a feature. With
// polynomial_degree 2 the squares and then the pairwise products (i < j) are
// appended after the linear columns. Every feature is standardized to mean 0
// and unit variance; columns that are constant are dropped with a warning.
// Regression targets are centered. Classification targets must take exactly
// two values; the smaller maps to -1 and the larger to +1.
//
// Throws ParseError (with 1-based line and column) on non-numeric cells or
// ragged rows, and DomainError on an unknown target or bad degree.
CsvDataset ReadCsvDataset(std::istream& in, const std::string& target_column,
                          Task task, int polynomial_degree);
CsvDataset IngestCsvDataset(const std::string& path,
                            const std::string& target_column, Task task,
                            int polynomial_degree);

}  // namespace wmax

#endif  // WMAX_BENCH_CSV_DATASET_H_
