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

#include "wmax/bench/experiment.h"

#include <algorithm>
#include <cerrno>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <istream>
#include <limits>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "wmax/bench/csv_dataset.h"
#include "wmax/bench/generators.h"
#include "wmax/bench/solve.h"
#include "wmax/core/errors.h"
#include "wmax/core/parallel.h"
#include "wmax/core/rng.h"

namespace wmax {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string Trim(const std::string& s) {
  const size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double ParseReal(const std::string& v, int line) {
  char* end = nullptr;
  errno = 0;
  const double x = std::strtod(v.c_str(), &end);
  if (v.empty() || *end != '\0' || errno == ERANGE) {
    throw ParseError("expected a number, got '" + v + "'", line);
  }
  return x;
}

int64_t ParseInt(const std::string& v, int line) {
  char* end = nullptr;
  errno = 0;
  const long long x = std::strtoll(v.c_str(), &end, 10);
  if (v.empty() || *end != '\0' || errno == ERANGE) {
    throw ParseError("expected an integer, got '" + v + "'", line);
  }
  return x;
}

int ParseInt32(const std::string& v, int line) {
  const int64_t x = ParseInt(v, line);
  if (x < std::numeric_limits<int>::min() ||
      x > std::numeric_limits<int>::max()) {
    throw ParseError("integer out of range: '" + v + "'", line);
  }
  return static_cast<int>(x);
}

void SetAlgoKey(AlgoSpec& a, const std::string& key, const std::string& value,
                int line) {
  if (key == "name") {
    const auto& names = SolverNames();
    if (std::find(names.begin(), names.end(), value) == names.end()) {
      throw ParseError("unknown algorithm '" + value + "'", line);
    }
    a.name = value;
  } else if (key == "m") {
    if (!value.empty() && value.back() == 'k') {
      a.m_fraction = ParseReal(value.substr(0, value.size() - 1), line);
      if (!(a.m_fraction > 0 && a.m_fraction <= 1)) {
        throw ParseError("stage fraction must lie in (0, 1]", line);
      }
    } else {
      a.m = ParseInt32(value, line);
      if (a.m < 1) throw ParseError("m must be positive", line);
    }
  } else if (key == "T") {
    a.t = ParseInt(value, line);
    if (a.t < 1) throw ParseError("T must be positive", line);
  } else if (key == "step") {
    a.step = ParseReal(value, line);
  } else if (key == "tol") {
    a.tol = ParseReal(value, line);
  } else if (key == "max_iter") {
    a.max_iter = ParseInt32(value, line);
  } else {
    throw ParseError("unknown [algo] key '" + key + "'", line);
  }
}

void SetTopKey(ExperimentConfig& c, const std::string& key,
               const std::string& value, int line) {
  if (key == "family") {
    if (value != "regression" && value != "classification" && value != "lp" &&
        value != "coverage" && value != "csv") {
      throw ParseError("unknown family '" + value + "'", line);
    }
    c.family = value;
  } else if (key == "d") {
    c.d = ParseInt32(value, line);
  } else if (key == "n") {
    c.n = ParseInt32(value, line);
  } else if (key == "sparsity") {
    c.sparsity = ParseInt32(value, line);
  } else if (key == "conditioning") {
    if (value != "well" && value != "ill") {
      throw ParseError("conditioning must be well or ill", line);
    }
    c.conditioning = value;
  } else if (key == "noise") {
    c.noise = ParseReal(value, line);
  } else if (key == "correlation") {
    c.correlation = ParseReal(value, line);
  } else if (key == "ridge") {
    c.ridge = ParseReal(value, line);
  } else if (key == "constraints") {
    c.constraints = ParseInt32(value, line);
  } else if (key == "universe") {
    c.universe = ParseInt32(value, line);
  } else if (key == "density") {
    c.density = ParseReal(value, line);
  } else if (key == "csv_path") {
    c.csv_path = value;
  } else if (key == "target") {
    c.target = value;
  } else if (key == "task") {
    if (value != "regression" && value != "classification") {
      throw ParseError("task must be regression or classification", line);
    }
    c.task = value;
  } else if (key == "degree") {
    c.degree = ParseInt32(value, line);
  } else if (key == "k") {
    c.k_values.clear();
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const int k = ParseInt32(Trim(item), line);
      if (k < 1) throw ParseError("k values must be positive", line);
      c.k_values.push_back(k);
    }
    if (c.k_values.empty()) throw ParseError("empty k list", line);
  } else if (key == "trials") {
    c.trials = ParseInt32(value, line);
    if (c.trials < 1) throw ParseError("trials must be positive", line);
  } else if (key == "seed") {
    c.seed = static_cast<uint64_t>(ParseInt(value, line));
  } else if (key == "split") {
    c.split = ParseReal(value, line);
    if (!(c.split > 0 && c.split < 1)) {
      throw ParseError("split must lie in (0, 1)", line);
    }
  } else if (key == "output") {
    c.output = value;
  } else {
    throw ParseError("unknown key '" + key + "'", line);
  }
}

// Training objective plus held-out data for the loss families.
struct TrialData {
  Instance train;
  std::optional<Instance> test;
  bool classification = false;
};

Instance MakeLossInstance(const Eigen::MatrixXd& a, const Eigen::VectorXd& y,
                          bool classification, double ridge) {
  if (classification) return LogisticLossInstance{a, y, ridge};
  return QuadraticLossInstance{a, y};
}

TrialData SplitLossData(const Eigen::MatrixXd& a, const Eigen::VectorXd& y,
                        const std::vector<int>& train_rows, bool classification,
                        double ridge) {
  const int n = static_cast<int>(a.rows());
  std::vector<char> is_train(n, 0);
  for (int i : train_rows) is_train[i] = 1;
  std::vector<int> test_rows;
  for (int i = 0; i < n; ++i) {
    if (!is_train[i]) test_rows.push_back(i);
  }
  auto take = [&](const std::vector<int>& rows, Eigen::MatrixXd* ao,
                  Eigen::VectorXd* yo) {
    ao->resize(static_cast<Eigen::Index>(rows.size()), a.cols());
    yo->resize(static_cast<Eigen::Index>(rows.size()));
    for (size_t r = 0; r < rows.size(); ++r) {
      ao->row(r) = a.row(rows[r]);
      (*yo)(r) = y(rows[r]);
    }
  };
  TrialData data;
  data.classification = classification;
  Eigen::MatrixXd at;
  Eigen::VectorXd yt;
  take(train_rows, &at, &yt);
  data.train = MakeLossInstance(at, yt, classification, ridge);
  if (!test_rows.empty()) {
    take(test_rows, &at, &yt);
    data.test = MakeLossInstance(at, yt, classification, ridge);
  }
  return data;
}

int TrainCount(int n, double split) {
  return std::clamp(static_cast<int>(std::ceil(n * split)), 1, n);
}

double LossOf(const Instance& inst, const Eigen::VectorXd& x) {
  if (const auto* q = std::get_if<QuadraticLossInstance>(&inst)) {
    return QuadraticLoss(*q).Loss(x);
  }
  return LogisticLoss(std::get<LogisticLossInstance>(inst)).Loss(x);
}

// R^2 for regression, fraction of correct signs for classification.
double ScoreOf(const Instance& inst, const Eigen::VectorXd& x,
               bool classification) {
  Eigen::MatrixXd a;
  Eigen::VectorXd y;
  if (const auto* q = std::get_if<QuadraticLossInstance>(&inst)) {
    a = q->design;
    y = q->target;
  } else {
    const auto& l = std::get<LogisticLossInstance>(inst);
    a = l.design;
    y = l.labels;
  }
  const Eigen::VectorXd pred = a * x;
  if (classification) {
    int correct = 0;
    for (Eigen::Index i = 0; i < y.size(); ++i) {
      correct += ((pred(i) >= 0 ? 1.0 : -1.0) == y(i));
    }
    return static_cast<double>(correct) / static_cast<double>(y.size());
  }
  const double ss_res = (y - pred).squaredNorm();
  const double ss_tot = (y.array() - y.mean()).matrix().squaredNorm();
  return ss_tot > 0 ? 1.0 - ss_res / ss_tot : kNaN;
}

std::string Sanitize(std::string s) {
  for (char& ch : s) {
    if (ch == ',' || ch == '\n' || ch == '\r' || ch == '"') ch = ';';
  }
  return s;
}

std::string Cell(double v) {
  if (std::isnan(v)) return "";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<ResultRow> RunTrial(const ExperimentConfig& config, int trial,
                                const CsvDataset* csv) {
  const uint64_t seed = config.seed + static_cast<uint64_t>(trial);
  std::optional<TrialData> loss_data;
  std::optional<Instance> combinatorial;
  if (config.family == "regression" || config.family == "classification") {
    RegressionOptions options;
    options.d = config.d;
    options.k = config.sparsity;
    options.n = config.n;
    options.conditioning = ParseConditioning(config.conditioning);
    options.noise = config.noise;
    options.correlation = config.correlation;
    const bool cls = config.family == "classification";
    const SyntheticData data = cls
                                   ? GenerateSyntheticClassification(options, seed)
                                   : GenerateSyntheticRegression(options, seed);
    const int n = static_cast<int>(data.design.rows());
    std::vector<int> train(TrainCount(n, config.split));
    for (int i = 0; i < static_cast<int>(train.size()); ++i) train[i] = i;
    loss_data = SplitLossData(data.design, data.response, train, cls,
                              config.ridge);
  } else if (config.family == "csv") {
    const int n = static_cast<int>(csv->features.rows());
    CounterRng rng(seed);
    const std::vector<int> train =
        rng.SampleWithoutReplacement(n, TrainCount(n, config.split));
    loss_data = SplitLossData(csv->features, csv->target, train,
                              ParseTask(config.task) == Task::kClassification,
                              config.ridge);
  } else if (config.family == "coverage") {
    combinatorial = GenerateCoverageInstance(config.d, config.universe,
                                             config.density, seed);
  }

  std::vector<ResultRow> rows;
  for (int k : config.k_values) {
    if (config.family == "lp") {
      combinatorial = GenerateLpInstance(config.d, config.constraints, k, seed);
    }
    const Instance& instance = loss_data ? loss_data->train : *combinatorial;
    const BoundObjective objective = BindObjective(instance);
    for (const AlgoSpec& spec : config.algorithms) {
      ResultRow row;
      row.trial = trial;
      row.algorithm = spec.name;
      row.k = k;
      row.m = spec.StagesFor(k);
      row.train_loss = row.test_loss = row.objective = row.score = kNaN;
      SolveOptions options;
      options.m = row.m;
      options.t = spec.t;
      options.seed = seed;
      options.step = spec.step;
      options.tol = spec.tol;
      options.max_iter = spec.max_iter;
      const auto start = std::chrono::steady_clock::now();
      try {
        const SolveOutcome outcome =
            SolveByName(spec.name, objective, k, options);
        row.oracle_evals = outcome.result.oracle_evals;
        row.objective = outcome.result.value;
        if (loss_data && outcome.coefficients) {
          const Eigen::VectorXd& x = *outcome.coefficients;
          row.train_loss = LossOf(loss_data->train, x);
          if (loss_data->test) {
            row.test_loss = LossOf(*loss_data->test, x);
            row.score = ScoreOf(*loss_data->test, x, loss_data->classification);
          }
        }
      } catch (const std::exception& e) {
        row.error = Sanitize(e.what());
      }
      row.wallclock_ms = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - start)
                             .count();
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace

int AlgoSpec::StagesFor(int k) const {
  if (name == "mgreedy" || name == "momp") {
    int stages = k;
    if (m > 0) {
      stages = m;
    } else if (m_fraction > 0) {
      stages = static_cast<int>(std::ceil(m_fraction * k - 1e-9));
    }
    return std::clamp(stages, 1, k);
  }
  if (name == "greedy" || name == "omp") return k;
  if (name == "oblivious") return 1;
  return 0;
}

ExperimentConfig ParseExperimentConfig(std::istream& in) {
  ExperimentConfig config;
  std::string raw;
  int line = 0;
  bool in_algo = false;
  while (std::getline(in, raw)) {
    ++line;
    const size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    const std::string text = Trim(raw);
    if (text.empty()) continue;
    if (text == "[algo]") {
      if (in_algo && config.algorithms.back().name.empty()) {
        throw ParseError("[algo] block without a name", line - 1);
      }
      config.algorithms.emplace_back();
      in_algo = true;
      continue;
    }
    if (text.front() == '[') {
      throw ParseError("unknown section '" + text + "'", line);
    }
    const size_t eq = text.find('=');
    if (eq == std::string::npos) throw ParseError("expected key = value", line);
    const std::string key = Trim(text.substr(0, eq));
    const std::string value = Trim(text.substr(eq + 1));
    if (in_algo) {
      SetAlgoKey(config.algorithms.back(), key, value, line);
    } else {
      SetTopKey(config, key, value, line);
    }
  }
  if (in_algo && config.algorithms.back().name.empty()) {
    throw ParseError("[algo] block without a name", line);
  }
  if (config.family == "csv" && (config.csv_path.empty() || config.target.empty())) {
    throw ParseError("family csv needs csv_path and target");
  }
  return config;
}

ExperimentConfig LoadExperimentConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return ParseExperimentConfig(in);
}

std::vector<ResultRow> RunExperiment(const ExperimentConfig& config) {
  std::unique_ptr<CsvDataset> csv;
  if (config.family == "csv") {
    csv = std::make_unique<CsvDataset>(IngestCsvDataset(
        config.csv_path, config.target, ParseTask(config.task), config.degree));
  }
  std::vector<std::vector<ResultRow>> per_trial(config.trials);
  ExceptionCollector errors;
#pragma omp parallel for schedule(dynamic)
  for (int trial = 0; trial < config.trials; ++trial) {
    errors.Run([&] { per_trial[trial] = RunTrial(config, trial, csv.get()); });
  }
  errors.Rethrow();
  std::vector<ResultRow> rows;
  for (auto& chunk : per_trial) {
    for (auto& row : chunk) rows.push_back(std::move(row));
  }
  return rows;
}

void WriteResultsCsv(const std::vector<ResultRow>& rows, std::ostream& out) {
  out << kResultsHeader << '\n';
  for (const ResultRow& r : rows) {
    out << r.trial << ',' << r.algorithm << ','
        << (r.m > 0 ? std::to_string(r.m) : "") << ',' << r.k << ','
        << r.oracle_evals << ',' << Cell(r.train_loss) << ','
        << Cell(r.test_loss) << ',' << Cell(r.objective) << ','
        << Cell(r.score) << ',' << Cell(r.wallclock_ms) << ',' << r.error
        << '\n';
  }
}

void RunExperimentToFile(const ExperimentConfig& config) {
  if (config.output.empty()) throw DomainError("config has no output path");
  const std::vector<ResultRow> rows = RunExperiment(config);
  const std::string tmp = config.output + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write '" + tmp + "'");
    WriteResultsCsv(rows, out);
    if (!out) throw std::runtime_error("write to '" + tmp + "' failed");
  }
  std::filesystem::rename(tmp, config.output);
}

}  // namespace wmax
