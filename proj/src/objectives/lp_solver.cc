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

#include "wmax/objectives/lp_solver.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "wmax/core/errors.h"

namespace wmax {
namespace {

constexpr int kMaxPivots = 100000;

// Row-major simplex tableau. Rows [0, m) are constraints, row m is the
// reduced-cost row; the last column holds right-hand sides (and minus the
// objective value in the reduced-cost row).
class Tableau {
 public:
  Tableau(int rows, int cols)
      : rows_(rows), cols_(cols), data_((rows + 1) * (cols + 1), 0.0) {}

  double& at(int r, int c) { return data_[r * (cols_ + 1) + c]; }
  double at(int r, int c) const { return data_[r * (cols_ + 1) + c]; }
  double& rhs(int r) { return at(r, cols_); }
  double& cost(int c) { return at(rows_, c); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  void Pivot(int pr, int pc) {
    const int width = cols_ + 1;
    double* prow = &data_[pr * width];
    const double inv = 1.0 / prow[pc];
    for (int c = 0; c < width; ++c) prow[c] *= inv;
    prow[pc] = 1.0;
    for (int r = 0; r <= rows_; ++r) {
      if (r == pr) continue;
      double* row = &data_[r * width];
      const double factor = row[pc];
      if (factor == 0.0) continue;
      for (int c = 0; c < width; ++c) row[c] -= factor * prow[c];
      row[pc] = 0.0;
    }
  }

 private:
  int rows_;
  int cols_;
  std::vector<double> data_;
};

enum class PhaseResult { kOptimal, kUnbounded };

// Runs Bland-rule primal simplex iterations on the current reduced-cost row.
PhaseResult RunSimplex(Tableau& t, std::vector<int>& basis,
                       const std::vector<char>& allowed, double tol,
                       int* pivots) {
  const int m = t.rows();
  const int n = t.cols();
  while (true) {
    int enter = -1;
    for (int c = 0; c < n; ++c) {
      if (allowed[c] && t.cost(c) > tol) {
        enter = c;
        break;
      }
    }
    if (enter < 0) return PhaseResult::kOptimal;

    int leave = -1;
    double best_ratio = 0.0;
    for (int r = 0; r < m; ++r) {
      const double coeff = t.at(r, enter);
      if (coeff <= tol) continue;
      const double ratio = t.rhs(r) / coeff;
      if (leave < 0 || ratio < best_ratio - 1e-12 ||
          (ratio <= best_ratio + 1e-12 && basis[r] < basis[leave])) {
        leave = r;
        best_ratio = ratio;
      }
    }
    if (leave < 0) return PhaseResult::kUnbounded;

    t.Pivot(leave, enter);
    basis[leave] = enter;
    if (++*pivots > kMaxPivots) {
      throw std::logic_error("simplex exceeded the pivot limit");
    }
  }
}

}  // namespace

LpSolution SolveDenseLp(const Eigen::MatrixXd& a, const Eigen::VectorXd& b,
                        const Eigen::VectorXd& c, double tol) {
  const int m = static_cast<int>(a.rows());
  const int n = static_cast<int>(a.cols());
  if (b.size() != m || c.size() != n) {
    throw DomainError("SolveDenseLp: dimension mismatch");
  }

  std::vector<int> artificial_rows;
  for (int i = 0; i < m; ++i) {
    if (b(i) < 0) artificial_rows.push_back(i);
  }
  const int num_art = static_cast<int>(artificial_rows.size());
  // Columns: [0, n) structural, [n, n+m) slacks, [n+m, n+m+num_art) artificial.
  const int total = n + m + num_art;
  Tableau t(m, total);
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) {
    const double sign = b(i) < 0 ? -1.0 : 1.0;
    for (int j = 0; j < n; ++j) t.at(i, j) = sign * a(i, j);
    t.at(i, n + i) = sign;
    t.rhs(i) = sign * b(i);
    basis[i] = n + i;
  }
  for (int q = 0; q < num_art; ++q) {
    const int row = artificial_rows[q];
    t.at(row, n + m + q) = 1.0;
    basis[row] = n + m + q;
  }

  LpSolution solution;
  std::vector<char> allowed(total, 1);

  if (num_art > 0) {
    // Phase one: maximize -sum(artificials).
    for (int row : artificial_rows) {
      for (int col = 0; col <= total; ++col) {
        if (col >= n + m && col < total) continue;
        t.at(m, col) += t.at(row, col);
      }
    }
    RunSimplex(t, basis, allowed, tol, &solution.pivots);
    if (-t.rhs(m) < -tol * std::max(1.0, b.cwiseAbs().maxCoeff())) {
      solution.status = LpStatus::kInfeasible;
      return solution;
    }
    // Drive zero-level artificials out of the basis where possible.
    for (int r = 0; r < m; ++r) {
      if (basis[r] < n + m) continue;
      for (int col = 0; col < n + m; ++col) {
        if (std::abs(t.at(r, col)) > tol) {
          t.Pivot(r, col);
          basis[r] = col;
          break;
        }
      }
    }
    for (int col = n + m; col < total; ++col) allowed[col] = 0;
  }

  // Phase two reduced costs: c_j - c_B^T B^{-1} A_j.
  for (int col = 0; col <= total; ++col) t.cost(col) = 0.0;
  for (int j = 0; j < n; ++j) t.cost(j) = c(j);
  for (int r = 0; r < m; ++r) {
    const int bv = basis[r];
    const double cb = bv < n ? c(bv) : 0.0;
    if (cb == 0.0) continue;
    for (int col = 0; col <= total; ++col) t.cost(col) -= cb * t.at(r, col);
  }

  if (RunSimplex(t, basis, allowed, tol, &solution.pivots) ==
      PhaseResult::kUnbounded) {
    solution.status = LpStatus::kUnbounded;
    return solution;
  }

  solution.x = Eigen::VectorXd::Zero(n);
  for (int r = 0; r < m; ++r) {
    if (basis[r] < n) solution.x(basis[r]) = t.rhs(r);
  }
  solution.objective = c.dot(solution.x);
  return solution;
}

}  // namespace wmax
