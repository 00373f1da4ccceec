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

#ifndef WMAX_BENCH_EXPERIMENT_H_
#define WMAX_BENCH_EXPERIMENT_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace wmax {

inline constexpr char kResultsHeader[] =
    "trial,algorithm,m,k,oracle_evals,train_loss,test_loss,objective,score,"
    "wallclock_ms,error";

// One `[algo]` block.
struct AlgoSpec {
  std::string name;
  int m = 0;                // fixed number of stages
  double m_fraction = 0.0;  // m = ceil(fraction * k) when m is unset
  int64_t t = 1;            // FPT runs
  double step = 0.0;        // IHT/HTP step; <= 0 means 1/L
  double tol = 1e-5;
  int max_iter = 10000;

  // Stages used at budget k, clamped to [1, k]; 0 for solvers without stages.
  int StagesFor(int k) const;
};

struct ExperimentConfig {
  std::string family = "regression";  // regression|classification|lp|coverage|csv

  // regression / classification
  int d = 60;
  int n = 0;         // samples before the split; 0 means floor(10 s ln d)
  int sparsity = 0;  // nonzeros of x_true; 0 means round(0.1 d)
  std::string conditioning = "well";
  double noise = 0.1;
  double correlation = 0.3;
  double ridge = 0.01;  // logistic families

  // lp
  int constraints = 100;

  // coverage
  int universe = 100;
  double density = 0.1;

  // csv
  std::string csv_path;
  std::string target;
  std::string task = "regression";
  int degree = 1;

  std::vector<int> k_values = {10};
  int trials = 1;
  uint64_t seed = 0;
  double split = 0.5;
  std::string output;

  std::vector<AlgoSpec> algorithms;
};

// Parses the "key = value" format with repeated [algo] sections. Throws
// ParseError with the offending line on unknown keys or bad values.
ExperimentConfig ParseExperimentConfig(std::istream& in);
ExperimentConfig LoadExperimentConfig(const std::string& path);

struct ResultRow {
  int trial = 0;
  std::string algorithm;
  int m = 0;  // 0 is written as an empty cell
  int k = 0;
  int64_t oracle_evals = 0;
  double train_loss = 0.0;  // NaN is written as an empty cell
  double test_loss = 0.0;
  double objective = 0.0;
  double score = 0.0;  // R^2 (regression) or accuracy (classification)
  double wallclock_ms = 0.0;
  std::string error;
};

// Runs every (trial, k, algorithm) cell with trial seed = seed + trial.
// Trials run on OpenMP threads; the rows come back ordered by trial, then k,
// then algorithm as listed. Solver failures are recorded in `error`.
std::vector<ResultRow> RunExperiment(const ExperimentConfig& config);

void WriteResultsCsv(const std::vector<ResultRow>& rows, std::ostream& out);

// RunExperiment + WriteResultsCsv into config.output (written via a temporary
// file and renamed into place).
void RunExperimentToFile(const ExperimentConfig& config);

}  // namespace wmax

#endif  // WMAX_BENCH_EXPERIMENT_H_
