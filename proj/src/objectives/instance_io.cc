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

#include "wmax/objectives/instance_io.h"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "wmax/core/errors.h"

namespace wmax {
namespace {

std::string Num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

template <class Container>
void WriteRow(std::ostream& out, const Container& values) {
  bool first = true;
  for (double v : values) {
    if (!first) out << ' ';
    out << Num(v);
    first = false;
  }
  out << '\n';
}

// Tokenizes the content lines of an instance file, tracking positions.
class TokenReader {
 public:
  explicit TokenReader(std::istream& in) : in_(in) {}

  // Loads the next non-empty content line; false at end of input.
  bool NextLine() {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++line_;
      const size_t hash = raw.find('#');
      if (hash != std::string::npos) raw.resize(hash);
      tokens_.clear();
      std::istringstream ss(raw);
      std::string tok;
      while (ss >> tok) tokens_.push_back(tok);
      pos_ = 0;
      if (!tokens_.empty()) return true;
    }
    tokens_.clear();
    return false;
  }

  void RequireLine(const std::string& what) {
    if (!NextLine()) throw ParseError("unexpected end of input: " + what, line_);
  }

  int remaining() const { return static_cast<int>(tokens_.size()) - pos_; }
  int count() const { return static_cast<int>(tokens_.size()); }

  std::string Word() {
    if (pos_ >= count()) throw ParseError("missing token", line_, pos_ + 1);
    return tokens_[pos_++];
  }

  double Real() {
    const std::string tok = Word();
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(tok.c_str(), &end);
    if (end == tok.c_str() || *end != '\0' || errno == ERANGE) {
      throw ParseError("not a number: '" + tok + "'", line_, pos_);
    }
    return v;
  }

  int Integer() {
    const std::string tok = Word();
    char* end = nullptr;
    errno = 0;
    const long v = std::strtol(tok.c_str(), &end, 10);
    if (end == tok.c_str() || *end != '\0' || errno == ERANGE ||
        v < -2147483647L || v > 2147483647L) {
      throw ParseError("not an integer: '" + tok + "'", line_, pos_);
    }
    return static_cast<int>(v);
  }

  int NonNegative(const std::string& what) {
    const int v = Integer();
    if (v < 0) throw ParseError(what + " must be nonnegative", line_, pos_);
    return v;
  }

  void ExpectCount(int n, const std::string& what) {
    if (count() != n) {
      throw ParseError(what + ": expected " + std::to_string(n) +
                           " values, found " + std::to_string(count()),
                       line_);
    }
  }

  void ExpectEnd() {
    if (remaining() != 0) {
      throw ParseError("unexpected trailing token", line_, pos_ + 1);
    }
  }

  int line() const { return line_; }

 private:
  std::istream& in_;
  std::vector<std::string> tokens_;
  int pos_ = 0;
  int line_ = 0;
};

// Reads `rows` rows of `cols` reals followed by one trailing value each.
void ReadMatrixWithTail(TokenReader& r, int rows, int cols,
                        Eigen::MatrixXd* matrix, Eigen::VectorXd* tail,
                        const std::string& what) {
  matrix->resize(rows, cols);
  tail->resize(rows);
  for (int i = 0; i < rows; ++i) {
    r.RequireLine(what + " row " + std::to_string(i + 1));
    r.ExpectCount(cols + 1, what + " row");
    for (int j = 0; j < cols; ++j) (*matrix)(i, j) = r.Real();
    (*tail)(i) = r.Real();
  }
}

Eigen::VectorXd ReadVectorLine(TokenReader& r, int n, const std::string& what) {
  r.RequireLine(what);
  r.ExpectCount(n, what);
  Eigen::VectorXd v(n);
  for (int j = 0; j < n; ++j) v(j) = r.Real();
  return v;
}

struct Writer {
  std::ostream& out;

  void operator()(const QuadraticLossInstance& q) const {
    out << "quadratic " << q.samples() << ' ' << q.dim() << '\n';
    for (int i = 0; i < q.samples(); ++i) {
      std::vector<double> row(q.design.row(i).begin(), q.design.row(i).end());
      row.push_back(q.target(i));
      WriteRow(out, row);
    }
  }
  void operator()(const LogisticLossInstance& q) const {
    out << "logistic " << q.samples() << ' ' << q.dim() << ' ' << Num(q.ridge)
        << '\n';
    for (int i = 0; i < q.samples(); ++i) {
      std::vector<double> row(q.design.row(i).begin(), q.design.row(i).end());
      row.push_back(q.labels(i));
      WriteRow(out, row);
    }
  }
  void operator()(const LpInstance& lp) const {
    out << "lp " << lp.rows() << ' ' << lp.dim() << '\n';
    WriteRow(out, lp.profit);
    for (int i = 0; i < lp.rows(); ++i) {
      std::vector<double> row(lp.constraints.row(i).begin(),
                              lp.constraints.row(i).end());
      row.push_back(lp.capacity(i));
      WriteRow(out, row);
    }
  }
  void operator()(const CoverageInstance& c) const {
    out << "coverage " << c.universe_size << ' ' << c.dim() << '\n';
    WriteRow(out, c.weights);
    for (const auto& group : c.groups) {
      out << group.size();
      for (int v : group) out << ' ' << v;
      out << '\n';
    }
  }
  void operator()(const HardnessInstance& h) const {
    out << "hardness " << h.k << ' ' << h.r << ' ' << h.dim() << '\n';
    bool first = true;
    for (int j : h.hidden) {
      out << (first ? "" : " ") << j;
      first = false;
    }
    out << '\n';
  }
  void operator()(const ModularInstance& m) const {
    out << "modular " << m.dim() << '\n';
    WriteRow(out, m.weights);
  }
};

struct Binder {
  BoundObjective operator()(const QuadraticLossInstance& q) const {
    auto loss = std::make_shared<QuadraticLoss>(q);
    return {loss, std::make_shared<LossReductionOracle>(*loss)};
  }
  BoundObjective operator()(const LogisticLossInstance& q) const {
    auto loss = std::make_shared<LogisticLoss>(q);
    return {loss, std::make_shared<LossReductionOracle>(*loss)};
  }
  BoundObjective operator()(const LpInstance& lp) const {
    return {nullptr, std::make_shared<LpObjective>(lp)};
  }
  BoundObjective operator()(const CoverageInstance& c) const {
    return {nullptr, std::make_shared<CoverageOracle>(c)};
  }
  BoundObjective operator()(const HardnessInstance& h) const {
    return {nullptr, std::make_shared<HardnessOracle>(h)};
  }
  BoundObjective operator()(const ModularInstance& m) const {
    return {nullptr, std::make_shared<ModularOracle>(m)};
  }
};

}  // namespace

std::string InstanceKind(const Instance& instance) {
  static const char* const kNames[] = {"quadratic", "logistic", "lp",
                                       "coverage",  "hardness", "modular"};
  return kNames[instance.index()];
}

void WriteInstance(const Instance& instance, std::ostream& out) {
  std::visit(Writer{out}, instance);
}

Instance ReadInstance(std::istream& in) {
  TokenReader r(in);
  r.RequireLine("instance header");
  const std::string kind = r.Word();
  Instance result;
  if (kind == "quadratic" || kind == "logistic") {
    const int n = r.NonNegative("n");
    const int d = r.NonNegative("d");
    double ridge = 0.0;
    if (kind == "logistic") ridge = r.Real();
    r.ExpectEnd();
    Eigen::MatrixXd a;
    Eigen::VectorXd y;
    ReadMatrixWithTail(r, n, d, &a, &y, "sample");
    if (kind == "quadratic") {
      result = QuadraticLossInstance{std::move(a), std::move(y)};
    } else {
      result = LogisticLossInstance{std::move(a), std::move(y), ridge};
    }
  } else if (kind == "lp") {
    const int m = r.NonNegative("m");
    const int d = r.NonNegative("d");
    r.ExpectEnd();
    LpInstance lp;
    lp.profit = ReadVectorLine(r, d, "profit row");
    ReadMatrixWithTail(r, m, d, &lp.constraints, &lp.capacity, "constraint");
    result = std::move(lp);
  } else if (kind == "coverage") {
    CoverageInstance c;
    c.universe_size = r.NonNegative("U");
    const int d = r.NonNegative("d");
    r.ExpectEnd();
    const Eigen::VectorXd w = ReadVectorLine(r, c.universe_size, "weight row");
    c.weights.assign(w.begin(), w.end());
    for (int j = 0; j < d; ++j) {
      r.RequireLine("group " + std::to_string(j));
      const int size = r.NonNegative("group size");
      r.ExpectCount(size + 1, "group");
      std::vector<int> group(size);
      for (int& v : group) v = r.Integer();
      c.groups.push_back(std::move(group));
    }
    result = std::move(c);
  } else if (kind == "hardness") {
    const int k = r.Integer();
    const int rr = r.Integer();
    const int d = r.NonNegative("d");
    r.ExpectEnd();
    r.RequireLine("hidden set");
    r.ExpectCount(k, "hidden set");
    std::vector<int> hidden(k);
    for (int& v : hidden) v = r.Integer();
    try {
      result = HardnessInstance{k, rr, Subset(d, std::move(hidden))};
    } catch (const DomainError& e) {
      throw ParseError(e.what(), r.line());
    }
  } else if (kind == "modular") {
    const int d = r.NonNegative("d");
    r.ExpectEnd();
    const Eigen::VectorXd w = ReadVectorLine(r, d, "weight row");
    result = ModularInstance{std::vector<double>(w.begin(), w.end())};
  } else {
    throw ParseError("unknown instance family '" + kind + "'", r.line(), 1);
  }
  if (r.NextLine()) throw ParseError("unexpected extra content", r.line(), 1);
  return result;
}

void SaveInstance(const Instance& instance, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  WriteInstance(instance, out);
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

Instance LoadInstance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return ReadInstance(in);
}

BoundObjective BindObjective(const Instance& instance) {
  return std::visit(Binder{}, instance);
}

}  // namespace wmax
