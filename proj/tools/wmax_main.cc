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

// Command-line front end for the wmax library.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wmax/algorithms/fpt.h"
#include "wmax/algorithms/selection.h"
#include "wmax/bench/experiment.h"
#include "wmax/bench/generators.h"
#include "wmax/bench/solve.h"
#include "wmax/core/errors.h"
#include "wmax/guarantees/bounds.h"
#include "wmax/objectives/instance_io.h"
#include "wmax/ratios/hardness_check.h"
#include "wmax/ratios/ratios.h"

namespace wmax {
namespace {

struct GenArgs {
  std::string family;
  std::string out;
  int d = 20;
  int n = 0;
  int k = 0;
  int m = 100;
  int r = 1;
  int universe = 100;
  double density = 0.1;
  double noise = 0.1;
  double correlation = 0.3;
  double ridge = 0.01;
  std::string conditioning = "well";
  uint64_t seed = 0;
};

struct SolveArgs {
  std::string algo;
  std::string instance;
  std::string trajectory;
  int k = 1;
  int m = 0;
  int64_t t = 1;
  uint64_t seed = 0;
  double step = 0.0;
  double tol = 1e-5;
  int max_iter = 10000;
};

struct RatioArgs {
  std::string instance;
  std::string universe;
  int s = 1;
};

struct BoundArgs {
  std::string which;
  std::string params;
};

struct HardnessArgs {
  int k = 2;
  int r = 1;
  int d = 6;
};

void CmdGen(const GenArgs& a) {
  Instance instance;
  if (a.family == "regression" || a.family == "classification") {
    RegressionOptions options;
    options.d = a.d;
    options.k = a.k;
    options.n = a.n;
    options.conditioning = ParseConditioning(a.conditioning);
    options.noise = a.noise;
    options.correlation = a.correlation;
    if (a.family == "regression") {
      instance = ToQuadraticInstance(GenerateSyntheticRegression(options, a.seed));
    } else {
      instance = ToLogisticInstance(
          GenerateSyntheticClassification(options, a.seed), a.ridge);
    }
  } else if (a.family == "lp") {
    instance = GenerateLpInstance(a.d, a.m, a.k > 0 ? a.k : 1, a.seed);
  } else if (a.family == "coverage") {
    instance = GenerateCoverageInstance(a.d, a.universe, a.density, a.seed);
  } else if (a.family == "hardness") {
    instance = GenerateHardnessInstance(a.k > 0 ? a.k : 2, a.r, a.d, a.seed);
  } else {
    throw DomainError("unknown family '" + a.family + "'");
  }
  SaveInstance(instance, a.out);
  std::cout << "family = " << InstanceKind(instance) << "\nout = " << a.out
            << '\n';
}

void CmdSolve(const SolveArgs& a) {
  const BoundObjective objective = BindObjective(LoadInstance(a.instance));
  SolveOptions options;
  options.m = a.m;
  options.t = a.t;
  options.seed = a.seed;
  options.step = a.step;
  options.tol = a.tol;
  options.max_iter = a.max_iter;
  const SolveOutcome outcome = SolveByName(a.algo, objective, a.k, options);
  std::cout << outcome.result.ToString();
  if (!a.trajectory.empty()) {
    std::ofstream out(a.trajectory);
    if (!out) throw std::runtime_error("cannot write '" + a.trajectory + "'");
    out << outcome.result.TrajectoryCsv();
  }
}

Subset ParseUniverse(const std::string& text, int d) {
  if (text.empty()) return Subset::Empty(d);
  if (text == "all") return Subset::Full(d);
  std::vector<int> items;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const int j = std::stoi(item);
    if (j < 0 || j >= d) throw DomainError("--U index out of range: " + item);
    items.push_back(j);
  }
  return Subset(d, std::move(items));
}

void CmdRatios(const RatioArgs& a) {
  const BoundObjective objective = BindObjective(LoadInstance(a.instance));
  const int d = objective.oracle->ground_size();
  const RatioReport report =
      CertifyRatios(*objective.oracle, ParseUniverse(a.universe, d), a.s);
  std::cout << report.ToString();
}

std::map<std::string, double> ParseParams(const std::string& text) {
  std::map<std::string, double> params;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const size_t eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("bad --params item '" + item + "'");
    size_t used = 0;
    const std::string value = item.substr(eq + 1);
    const double x = std::stod(value, &used);
    if (used != value.size()) throw ParseError("bad number in '" + item + "'");
    params[item.substr(0, eq)] = x;
  }
  return params;
}

class Params {
 public:
  explicit Params(std::map<std::string, double> values)
      : values_(std::move(values)) {}
  double Get(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end()) throw DomainError("missing parameter '" + key + "'");
    return it->second;
  }
  double Get(const std::string& key, double fallback) const {
    const auto it = values_.find(key);
    return it == values_.end() ? fallback : it->second;
  }
  int GetInt(const std::string& key) const { return ToInt(key, Get(key)); }
  int GetInt(const std::string& key, int fallback) const {
    return ToInt(key, Get(key, fallback));
  }

 private:
  static int ToInt(const std::string& key, double v) {
    if (v != std::round(v)) throw DomainError(key + " must be an integer");
    return static_cast<int>(v);
  }
  std::map<std::string, double> values_;
};

void CmdBound(const BoundArgs& a) {
  const Params p(ParseParams(a.params));
  if (a.which == "mgreedy") {
    const int k = p.GetInt("k");
    const int m = p.GetInt("m", k);
    const int k_star = p.GetInt("kstar", k);
    const BatchSchedule schedule = MakeBatchSchedule(k, m);
    const std::vector<double> gammas(schedule.rounds(), p.Get("gamma", 1.0));
    const std::vector<double> betas(schedule.rounds(), p.Get("beta", 1.0));
    const MultiGreedyBounds b =
        MultiGreedyBound(gammas, betas, schedule.batches, k_star);
    std::cout << "[product]\n" << b.product.ToString() << "[exponential]\n"
              << b.exponential.ToString();
  } else if (a.which == "momp") {
    const int k = p.GetInt("k");
    std::cout << MompBound(p.Get("mu"), p.Get("nu"), k, p.GetInt("kstar", k))
                     .ToString();
  } else if (a.which == "hardness-alpha") {
    std::cout << HardnessAlpha(p.GetInt("k"), p.GetInt("r")).ToString();
  } else if (a.which == "hardness-spr") {
    std::cout << HardnessSprBound(p.GetInt("k"), p.GetInt("r")).ToString();
  } else if (a.which == "fpt") {
    FptParams fp;
    fp.k = p.GetInt("k");
    fp.gamma_k = p.Get("gamma", 1.0);
    fp.beta_kd = p.Get("beta", 1.0);
    fp.f_tilde = p.Get("ftilde", 0.0);
    fp.epsilon = p.Get("eps", 1.0);
    fp.delta = p.Get("delta", 0.5);
    const int64_t t = p.GetInt("T", 0) > 0 ? p.GetInt("T") : FptIterations(fp);
    const double q = FptSingleRunProbability(fp.gamma_k, fp.beta_kd, fp.f_tilde,
                                             fp.epsilon, fp.k);
    std::cout << "T = " << t << '\n';
    std::cout.precision(17);
    std::cout << "q = " << q << '\n' << FptSuccessBound(q, t).ToString();
  } else {
    throw DomainError("unknown --which '" + a.which + "'");
  }
}

int CmdVerifyHardness(const HardnessArgs& a) {
  const HardnessVerification v = VerifyHardness(a.k, a.r, a.d);
  std::cout << v.ToString();
  return v.Passed() ? 0 : 1;
}

int Main(int argc, char** argv) {
  CLI::App app{"Cardinality-constrained maximization of weakly modular set functions"};
  app.require_subcommand(1);

  auto* bench = app.add_subcommand("bench", "Experiments and instance generation");
  bench->require_subcommand(1);
  std::string config_path;
  auto* run = bench->add_subcommand("run", "Run an experiment config");
  run->add_option("--config", config_path, "Config file")->required();
  GenArgs gen;
  auto* gen_cmd = bench->add_subcommand("gen", "Generate an instance file");
  gen_cmd->add_option("--family", gen.family)
      ->required()
      ->check(CLI::IsMember(
          {"regression", "classification", "lp", "coverage", "hardness"}));
  gen_cmd->add_option("--out", gen.out)->required();
  gen_cmd->add_option("--d", gen.d, "Ground set size");
  gen_cmd->add_option("--n", gen.n, "Samples (0 = default)");
  gen_cmd->add_option("--k", gen.k, "Sparsity");
  gen_cmd->add_option("--m", gen.m, "LP constraint rows");
  gen_cmd->add_option("--r", gen.r, "Hardness level");
  gen_cmd->add_option("--universe", gen.universe);
  gen_cmd->add_option("--density", gen.density);
  gen_cmd->add_option("--noise", gen.noise);
  gen_cmd->add_option("--correlation", gen.correlation);
  gen_cmd->add_option("--ridge", gen.ridge);
  gen_cmd->add_option("--conditioning", gen.conditioning)
      ->check(CLI::IsMember({"well", "ill"}));
  gen_cmd->add_option("--seed", gen.seed);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Run one algorithm");
  solve_cmd->add_option("--algo", solve.algo)
      ->required()
      ->check(CLI::IsMember(SolverNames()));
  solve_cmd->add_option("--k", solve.k)->required();
  solve_cmd->add_option("--m", solve.m, "Stages (0 = k)");
  solve_cmd->add_option("--T", solve.t, "FPT runs");
  solve_cmd->add_option("--seed", solve.seed);
  solve_cmd->add_option("--step", solve.step, "IHT/HTP step (0 = 1/L)");
  solve_cmd->add_option("--tol", solve.tol);
  solve_cmd->add_option("--max-iter", solve.max_iter);
  solve_cmd->add_option("--instance", solve.instance)->required();
  solve_cmd->add_option("--trajectory", solve.trajectory, "Trajectory CSV path");

  RatioArgs ratios;
  auto* ratios_cmd = app.add_subcommand("ratios", "Certify SBR/SPR by enumeration");
  ratios_cmd->add_option("--instance", ratios.instance)->required();
  ratios_cmd->add_option("--s", ratios.s)->required();
  ratios_cmd->add_option("--U", ratios.universe,
                         "'all' or comma-separated indices (default empty)");

  BoundArgs bound;
  auto* bound_cmd = app.add_subcommand("bound", "Evaluate a closed-form guarantee");
  bound_cmd->add_option("--which", bound.which)
      ->required()
      ->check(CLI::IsMember(
          {"mgreedy", "momp", "hardness-alpha", "hardness-spr", "fpt"}));
  bound_cmd->add_option("--params", bound.params, "key=value,...")->required();

  HardnessArgs hard;
  auto* hard_cmd =
      app.add_subcommand("verify-hardness", "Audit the hardness construction");
  hard_cmd->add_option("--k", hard.k)->required();
  hard_cmd->add_option("--r", hard.r)->required();
  hard_cmd->add_option("--d", hard.d)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      const ExperimentConfig config = LoadExperimentConfig(config_path);
      if (config.output.empty()) {
        WriteResultsCsv(RunExperiment(config), std::cout);
      } else {
        RunExperimentToFile(config);
      }
    } else if (gen_cmd->parsed()) {
      CmdGen(gen);
    } else if (solve_cmd->parsed()) {
      CmdSolve(solve);
    } else if (ratios_cmd->parsed()) {
      CmdRatios(ratios);
    } else if (bound_cmd->parsed()) {
      CmdBound(bound);
    } else if (hard_cmd->parsed()) {
      return CmdVerifyHardness(hard);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace
}  // namespace wmax

int main(int argc, char** argv) { return wmax::Main(argc, argv); }
