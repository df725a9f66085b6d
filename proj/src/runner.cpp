#include "tolbal/runner.hpp"

#include <chrono>
#include <stdexcept>

namespace tolbal {

Method parse_method(const std::string& name) {
  if (name == "rh") return Method::RH;
  if (name == "rh-ls") return Method::RHExhaustive;
  if (name == "rh-insert-only") return Method::RHInsertOnly;
  if (name == "grest") return Method::GreSt;
  if (name == "eigen") return Method::Eigen;
  throw std::invalid_argument("unknown method '" + name + "'");
}

std::string method_name(Method m) {
  switch (m) {
    case Method::RH: return "rh";
    case Method::RHExhaustive: return "rh-ls";
    case Method::RHInsertOnly: return "rh-insert-only";
    case Method::GreSt: return "grest";
    case Method::Eigen: return "eigen";
  }
  return "?";
}

Target parse_target(const std::string& name) {
  if (name == "p3") return Target::P3;
  if (name == "p4") return Target::P4;
  if (name == "p5") return Target::P5;
  throw std::invalid_argument("unknown objective '" + name + "'");
}

std::string target_name(Target t) {
  switch (t) {
    case Target::P3: return "p3";
    case Target::P4: return "p4";
    case Target::P5: return "p5";
  }
  return "?";
}

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

RunOutput run_solver(const SignedGraph& g, const SolverConfig& cfg) {
  RunOutput out;
  const auto t0 = std::chrono::steady_clock::now();
  ordered_json params;
  params["beta"] = cfg.tol.to_string();
  params["strict"] = cfg.strict;
  params["objective"] = target_name(cfg.objective);
  params["seed"] = cfg.seed;

  switch (cfg.method) {
    case Method::RH:
    case Method::RHExhaustive:
    case Method::RHInsertOnly: {
      SamplerParams sp;
      sp.C = cfg.C;
      sp.search.tol = cfg.tol;
      sp.search.p = cfg.method == Method::RHInsertOnly ? 0.0 : cfg.p;
      sp.search.T = cfg.T;
      sp.search.seed = cfg.seed;
      sp.mode = cfg.method == Method::RHExhaustive ? SamplerMode::Exhaustive : SamplerMode::Sampled;
      sp.threads = cfg.threads;
      if (cfg.timeout_seconds) sp.timeout = std::chrono::duration<double>(*cfg.timeout_seconds);
      params["p"] = sp.search.p;
      params["T"] = sp.search.T;
      params["C"] = sp.C.to_string();
      SamplerResult r = solve(g, sp);
      const bool feasible = r.best.score.scaled >= 0;
      out.solution = cfg.objective == Target::P5 || feasible ? std::move(r.best) : Solution{};
      std::int64_t best = INT64_MIN;
      std::size_t improvements = 0;
      for (const auto& t : r.trace) {
        if (t.scaled > best) {
          best = t.scaled;
          ++improvements;
        }
      }
      out.meta["trace"] = {{"searches", r.trace.size()},
                           {"total_size", r.total_size},
                           {"incumbent_updates", improvements},
                           {"timed_out", r.timed_out}};
      break;
    }
    case Method::GreSt: {
      GrestResult r = grest(g, cfg.tol, cfg.objective, cfg.seed);
      out.solution = std::move(r.solution);
      out.meta["trace"] = {{"peel_steps", r.peel.size()}};
      break;
    }
    case Method::Eigen: {
      params["iterations"] = cfg.eigen_iterations;
      params["rel_tol"] = cfg.eigen_rel_tol;
      EigenResult r = eigen_rounding(g, cfg.tol, cfg.objective, cfg.seed, cfg.eigen_iterations, cfg.eigen_rel_tol);
      out.solution = std::move(r.solution);
      out.meta["trace"] = {{"converged", r.converged}, {"iterations", r.iterations}, {"eigenvalue", r.eigenvalue}};
      break;
    }
  }
  ordered_json meta;
  meta["solver"] = method_name(cfg.method);
  meta["params"] = std::move(params);
  meta["trace"] = std::move(out.meta["trace"]);
  out.meta = std::move(meta);
  out.wall_ms = elapsed_ms(t0);
  return out;
}

RunOutput run_two_pc(const SignedGraph& g, const TwoPCConfig& cfg) {
  RunOutput out;
  const auto t0 = std::chrono::steady_clock::now();
  SearchParams sp;
  sp.seed = cfg.seed;
  sp.p = cfg.p;
  sp.T = cfg.T;
  TwoPCResult r = solve_2pc(g, sp, cfg.stop);
  out.solution = std::move(r.solution);
  out.meta["solver"] = "2pc-rh";
  out.meta["params"] = {{"seed", cfg.seed},
                        {"p", cfg.p},
                        {"T", cfg.T},
                        {"stop_restarts", cfg.stop.max_stale_restarts}};
  out.meta["rho"] = rational_text(r.rho);
  out.meta["rho_float"] = r.rho.to_double();
  out.meta["trace"] = {{"searches", r.searches},
                       {"improvements", r.improvements},
                       {"active_vertices", r.active_vertices},
                       {"timed_out", r.timed_out}};
  out.wall_ms = elapsed_ms(t0);
  return out;
}

}  // namespace tolbal
