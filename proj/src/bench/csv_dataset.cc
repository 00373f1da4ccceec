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

#include "wmax/bench/csv_dataset.h"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

#include "wmax/core/errors.h"

namespace wmax {
namespace {

std::string Trim(const std::string& s) {
  const size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> SplitCells(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) cells.push_back(Trim(cell));
  if (!line.empty() && line.back() == ',') cells.push_back("");
  return cells;
}

double ParseCell(const std::string& cell, int line, int column) {
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(cell.c_str(), &end);
  if (cell.empty() || *end != '\0' || errno == ERANGE || !std::isfinite(v)) {
    throw ParseError("non-numeric cell '" + cell + "'", line, column);
  }
  return v;
}

}  // namespace

Task ParseTask(const std::string& name) {
  if (name == "regression") return Task::kRegression;
  if (name == "classification") return Task::kClassification;
  throw DomainError("task must be 'regression' or 'classification'");
}

CsvDataset ReadCsvDataset(std::istream& in, const std::string& target_column,
                          Task task, int polynomial_degree) {
  if (polynomial_degree != 1 && polynomial_degree != 2) {
    throw DomainError("polynomial degree must be 1 or 2");
  }
  std::string line;
  int line_no = 0;
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    ++line_no;
    if (!Trim(line).empty()) {
      header = SplitCells(line);
      break;
    }
  }
  if (header.empty()) throw ParseError("missing header row", line_no);
  const auto target_it = std::find(header.begin(), header.end(), target_column);
  if (target_it == header.end()) {
    throw DomainError("target column '" + target_column + "' not in header");
  }
  const int target_index = static_cast<int>(target_it - header.begin());
  const int columns = static_cast<int>(header.size());

  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    const std::vector<std::string> cells = SplitCells(line);
    if (static_cast<int>(cells.size()) != columns) {
      throw ParseError("expected " + std::to_string(columns) + " cells, found " +
                           std::to_string(cells.size()),
                       line_no);
    }
    std::vector<double> row(columns);
    for (int c = 0; c < columns; ++c) row[c] = ParseCell(cells[c], line_no, c + 1);
    rows.push_back(std::move(row));
  }
  const int n = static_cast<int>(rows.size());
  if (n == 0) throw ParseError("no data rows", line_no);

  std::vector<std::string> base_names;
  std::vector<int> base_cols;
  for (int c = 0; c < columns; ++c) {
    if (c == target_index) continue;
    base_names.push_back(header[c]);
    base_cols.push_back(c);
  }
  const int p = static_cast<int>(base_cols.size());

  std::vector<std::string> names = base_names;
  std::vector<std::pair<int, int>> terms;  // (a, b) -> x_a x_b; b < 0 linear
  for (int a = 0; a < p; ++a) terms.push_back({a, -1});
  if (polynomial_degree == 2) {
    for (int a = 0; a < p; ++a) {
      terms.push_back({a, a});
      names.push_back(base_names[a] + "^2");
    }
    for (int a = 0; a < p; ++a) {
      for (int b = a + 1; b < p; ++b) {
        terms.push_back({a, b});
        names.push_back(base_names[a] + "*" + base_names[b]);
      }
    }
  }

  CsvDataset out;
  std::vector<Eigen::VectorXd> kept;
  for (size_t t = 0; t < terms.size(); ++t) {
    Eigen::VectorXd col(n);
    for (int i = 0; i < n; ++i) {
      const double x = rows[i][base_cols[terms[t].first]];
      col(i) = terms[t].second < 0 ? x : x * rows[i][base_cols[terms[t].second]];
    }
    const double mean = col.mean();
    col.array() -= mean;
    const double sd = std::sqrt(col.squaredNorm() / n);
    if (!(sd > 1e-12 * std::max(1.0, std::abs(mean)))) {
      out.warnings.push_back("dropped constant column '" + names[t] + "'");
      continue;
    }
    kept.push_back(col / sd);
    out.feature_names.push_back(names[t]);
  }
  out.features.resize(n, static_cast<Eigen::Index>(kept.size()));
  for (size_t j = 0; j < kept.size(); ++j) out.features.col(j) = kept[j];

  out.target.resize(n);
  for (int i = 0; i < n; ++i) out.target(i) = rows[i][target_index];
  if (task == Task::kRegression) {
    out.target.array() -= out.target.mean();
  } else {
    const std::set<double> labels(out.target.begin(), out.target.end());
    if (labels.size() != 2) {
      throw DomainError("classification target must take exactly two values");
    }
    const double low = *labels.begin();
    for (int i = 0; i < n; ++i) out.target(i) = out.target(i) == low ? -1.0 : 1.0;
  }
  return out;
}

CsvDataset IngestCsvDataset(const std::string& path,
                            const std::string& target_column, Task task,
                            int polynomial_degree) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return ReadCsvDataset(in, target_column, task, polynomial_degree);
}

}  // namespace wmax
