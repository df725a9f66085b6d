#pragma once

#include <optional>
#include <string>

#include "tolbal/baselines.hpp"
#include "tolbal/report.hpp"
#include "tolbal/sampler.hpp"
#include "tolbal/two_pc.hpp"

namespace tolbal {

/// Solver ids accepted by run_solver.
enum class Method { RH, RHExhaustive, RHInsertOnly, GreSt, Eigen };

Method parse_method(const std::string& name);
std::string method_name(Method m);

struct SolverConfig {
  Method method = Method::RH;
  Tolerance tol{1, 2};
  bool strict = false;  // tol was derived from the graph
  Target objective = Target::P5;
  double p = 0.8;
  std::int64_t T = 20;
  Rational C{3, 2};
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::optional<double> timeout_seconds;
  int eigen_iterations = 1000;
  double eigen_rel_tol = 1e-8;
};

Target parse_target(const std::string& name);
std::string target_name(Target t);

struct RunOutput {
  Solution solution;
  /// Solver id, parameters and solver-specific diagnostics.
  ordered_json meta;
  double wall_ms = 0;
};

/// Runs one solver. For the RH family, P3/P4 keep the solution only when it
/// is feasible; baselines pick their candidate per objective.
RunOutput run_solver(const SignedGraph& g, const SolverConfig& cfg);

struct TwoPCConfig {
  std::uint64_t seed = 0;
  double p = 0.8;
  std::int64_t T = 20;
  StopPolicy stop;
};

RunOutput run_two_pc(const SignedGraph& g, const TwoPCConfig& cfg);

}  // namespace tolbal
