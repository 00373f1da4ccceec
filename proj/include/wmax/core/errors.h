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

#ifndef WMAX_CORE_ERRORS_H_
#define WMAX_CORE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace wmax {

// Argument outside the documented domain (bad index, k > d, r > k, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A brute-force routine was asked for more work than its hard cap allows.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// An iterative solver stopped without meeting its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

// Projected-gradient iterations whose loss kept increasing.
class DivergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input. Positions are 1-based; 0 means "not applicable".
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line = 0, int column = 0)
      : std::runtime_error(Format(what, line, column)),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string Format(const std::string& what, int line, int column) {
    std::string out = what;
    if (line > 0) out += " (line " + std::to_string(line);
    if (line > 0 && column > 0) out += ", column " + std::to_string(column);
    if (line > 0) out += ")";
    return out;
  }
  int line_;
  int column_;
};

}  // namespace wmax

#endif  // WMAX_CORE_ERRORS_H_
