// tolbal: command-line front end (solve, 2pc, oracle, bench, gen).
#include <fstream>

#include "cli_common.hpp"
#include "tolbal/oracle.hpp"
#include "tolbal/structure.hpp"

namespace cli {
namespace {

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

void register_solve(CLI::App& app, std::function<void()>& action) {
  auto* cmd = app.add_subcommand("solve", "Find a large tolerantly balanced connected subgraph");
  struct Opts {
    std::string method = "rh", input, out, objective = "p5";
    ToleranceFlags tol;
    double p = 0.8;
    std::int64_t T = 20;
    std::string C = "3/2";
    std::uint64_t seed = 0;
    unsigned threads = 1;
    double timeout = 3600;
    int iterations = 1000;
    double rel_tol = 1e-8;
    bool timing = false;
  };
  auto o = std::make_shared<Opts>();
  cmd->add_option("--method", o->method, "rh | rh-ls | rh-insert-only | grest | eigen")
      ->check(CLI::IsMember({"rh", "rh-ls", "rh-insert-only", "grest", "eigen"}))
      ->capture_default_str();
  cmd->add_option("--input", o->input, "Signed edge list")->required();
  cmd->add_option("--out", o->out, "Output JSON (default stdout)");
  cmd->add_option("--objective", o->objective, "p3 | p4 | p5")->check(CLI::IsMember({"p3", "p4", "p5"}))->capture_default_str();
  o->tol.add_options(cmd, "1/2");
  cmd->add_option("--p", o->p, "Flip/delete probability")->capture_default_str();
  cmd->add_option("--T", o->T, "Budget constant")->capture_default_str();
  cmd->add_option("--C", o->C, "Iteration constant")->capture_default_str();
  cmd->add_option("--seed", o->seed)->capture_default_str();
  cmd->add_option("--threads", o->threads, "Worker threads (0 = all; capped by TOLBAL_THREADS)")->capture_default_str();
  cmd->add_option("--timeout", o->timeout, "Seconds before no new searches start")->capture_default_str();
  cmd->add_option("--iterations", o->iterations, "eigen: power iterations")->capture_default_str();
  cmd->add_option("--rel-tol", o->rel_tol, "eigen: convergence tolerance")->capture_default_str();
  cmd->add_flag("--timing", o->timing, "Include wall-clock time in the JSON");
  cmd->callback([o, &action] {
    action = [o] {
      const auto g = load_graph(o->input);
      SolverConfig cfg;
      cfg.method = parse_method(o->method);
      cfg.tol = o->tol.resolve(g);
      cfg.strict = o->tol.strict;
      cfg.objective = parse_target(o->objective);
      cfg.p = o->p;
      cfg.T = o->T;
      cfg.C = Rational::parse(o->C);
      cfg.seed = o->seed;
      cfg.threads = worker_count(o->threads);
      cfg.timeout_seconds = o->timeout;
      cfg.eigen_iterations = o->iterations;
      cfg.eigen_rel_tol = o->rel_tol;
      auto r = run_solver(g, cfg);
      auto meta = r.meta;
      meta["dataset"] = o->input;
      if (o->timing) meta["wall_ms"] = r.wall_ms;
      write_text(o->out, dump(solution_json(g, r.solution, cfg.tol, meta)));
    };
  });
}

void register_2pc(CLI::App& app, std::function<void()>& action) {
  auto* cmd = app.add_subcommand("2pc", "Two-sided polarized community search");
  struct Opts {
    std::string method = "rh", input, out;
    std::uint64_t seed = 0;
    int restarts = 20;
    std::optional<double> timeout;
    std::optional<std::int64_t> max_searches;
    double p = 0.8;
    std::int64_t T = 20;
    bool timing = false;
  };
  auto o = std::make_shared<Opts>();
  cmd->add_option("--method", o->method)->check(CLI::IsMember({"rh"}))->capture_default_str();
  cmd->add_option("--input", o->input, "Signed edge list")->required();
  cmd->add_option("--out", o->out, "Output JSON (default stdout)");
  cmd->add_option("--seed", o->seed)->capture_default_str();
  cmd->add_option("--stop-restarts", o->restarts, "Stop after this many searches without improvement")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd->add_option("--timeout", o->timeout, "Wall-clock budget in seconds");
  cmd->add_option("--max-searches", o->max_searches, "Hard cap on searches");
  cmd->add_option("--p", o->p)->capture_default_str();
  cmd->add_option("--T", o->T)->capture_default_str();
  cmd->add_flag("--timing", o->timing, "Include wall-clock time in the JSON");
  cmd->callback([o, &action] {
    action = [o] {
      const auto g = load_graph(o->input);
      TwoPCConfig cfg;
      cfg.seed = o->seed;
      cfg.p = o->p;
      cfg.T = o->T;
      cfg.stop.max_stale_restarts = o->restarts;
      cfg.stop.wall_seconds = o->timeout;
      cfg.stop.max_searches = o->max_searches;
      auto r = run_two_pc(g, cfg);
      auto meta = r.meta;
      meta["dataset"] = o->input;
      if (o->timing) meta["wall_ms"] = r.wall_ms;
      write_text(o->out, dump(solution_json(g, r.solution, Tolerance(1, 2), meta)));
    };
  });
}

Problem parse_problem(const std::string& s) {
  static const std::pair<const char*, Problem> table[] = {{"p1", Problem::P1}, {"p2", Problem::P2}, {"p3", Problem::P3},
                                                          {"p4", Problem::P4}, {"p5", Problem::P5}, {"p6", Problem::P6}};
  for (auto [name, p] : table) {
    if (s == name) return p;
  }
  throw UsageError("unknown problem '" + s + "'");
}

void register_oracle(CLI::App& app, std::function<void()>& action) {
  auto* cmd = app.add_subcommand("oracle", "Exact answers on small graphs");
  struct Opts {
    std::string problem, input, solution, out;
    ToleranceFlags tol;
    std::size_t max_n = 26;
  };
  auto o = std::make_shared<Opts>();
  cmd->add_option("--problem", o->problem, "frustration | tbi | p1..p6 | tbi-of-coloring")
      ->required()
      ->check(CLI::IsMember({"frustration", "tbi", "p1", "p2", "p3", "p4", "p5", "p6", "tbi-of-coloring"}));
  cmd->add_option("--input", o->input, "Signed edge list")->required();
  cmd->add_option("--solution", o->solution, "tbi-of-coloring: solution JSON to re-score");
  cmd->add_option("--out", o->out, "Output JSON (default stdout)");
  cmd->add_option("--max-n", o->max_n, "Vertex limit for frustration/tbi enumeration")->capture_default_str();
  o->tol.add_options(cmd, "1/2");
  cmd->callback([o, &action] {
    action = [o] {
      const auto g = load_graph(o->input);
      ordered_json j;
      j["problem"] = o->problem;
      j["dataset"] = o->input;
      if (o->problem == "frustration") {
        j["frustration"] = frustration_index(g, o->max_n);
      } else if (o->problem == "tbi") {
        const Tolerance tol = o->tol.resolve(g);
        auto r = exact_tbi(g, tol, o->max_n);
        j["beta"] = tol.to_string();
        j["num_edges"] = r.score.m_sel;
        j["frustration"] = r.score.imb;
        j["tbi"] = rational_text(r.score.value(tol));
        j["tbi_float"] = r.score.value(tol).to_double();
      } else if (o->problem == "tbi-of-coloring") {
        if (o->solution.empty()) throw UsageError("tbi-of-coloring needs --solution");
        std::ifstream in(o->solution);
        if (!in) throw InputError("cannot open '" + o->solution + "'", 0);
        ordered_json record;
        try {
          record = ordered_json::parse(in);
        } catch (const nlohmann::json::exception& e) {
          throw InputError(std::string("bad solution JSON: ") + e.what(), 0);
        }
        // the record's own beta wins unless one is given explicitly
        Tolerance tol = record.contains("beta") && !o->tol.strict ? Tolerance::parse(record["beta"].get<std::string>())
                                                                  : o->tol.resolve(g);
        Solution sol;
        try {
          sol = solution_from_json(g, record, tol);
        } catch (const std::invalid_argument& e) {
          throw InputError(e.what(), 0);
        }
        const Rational phi = sol.score.value(tol);
        j["beta"] = tol.to_string();
        j["num_vertices"] = sol.size();
        j["num_edges"] = sol.score.m_sel;
        j["imbalanced"] = sol.score.imb;
        j["scaled_score"] = sol.score.scaled;
        j["phi_hat"] = rational_text(phi);
        j["connected"] = sol.empty() || is_connected(g, sol.vertex_set(g.vertex_count()));
        if (record.contains("phi_hat")) j["matches_record"] = record["phi_hat"] == rational_text(phi);
      } else {
        const Problem p = parse_problem(o->problem);
        const Tolerance tol = o->tol.resolve(g);
        auto r = exact_problem(g, tol, p);
        ordered_json meta;
        meta["solver"] = "oracle";
        meta["problem"] = o->problem;
        meta["dataset"] = o->input;
        meta["found"] = r.found;
        meta["objective"] = rational_text(r.objective);
        j = solution_json(g, r.solution, tol, meta);
      }
      write_text(o->out, dump(j));
    };
  });
}

void register_gen(CLI::App& app, std::function<void()>& action) {
  auto* gen = app.add_subcommand("gen", "Generate signed graphs");
  gen->require_subcommand(1);

  auto* planted = gen->add_subcommand("planted", "Random graph with a planted balanced subgraph");
  auto po = std::make_shared<PlantedParams>();
  auto planted_out = std::make_shared<std::string>();
  auto sidecar = std::make_shared<std::string>();
  po->n = 1000;
  planted->add_option("--n", po->n)->required()->check(CLI::PositiveNumber);
  planted->add_option("--m", po->m)->required();
  planted->add_option("--fraction", po->planted_fraction)->check(CLI::Range(0.0, 1.0))->capture_default_str();
  planted->add_option("--noise", po->flip_noise)->check(CLI::Range(0.0, 1.0))->capture_default_str();
  planted->add_option("--seed", po->seed)->capture_default_str();
  planted->add_option("--out", *planted_out, "Edge list output (default stdout)");
  planted->add_option("--sidecar", *sidecar, "JSON with the planted vertex set");
  planted->callback([=, &action] {
    action = [=] {
      auto inst = generate_planted(*po);
      std::ostringstream s;
      write_edge_list(s, inst.graph);
      write_text(*planted_out, s.str());
      if (!sidecar->empty()) write_text(*sidecar, planted_sidecar_json(inst) + "\n");
    };
  });

  auto* temporal = gen->add_subcommand("temporal", "Sign timestamped edges by a time threshold");
  auto input = std::make_shared<std::string>();
  auto temporal_out = std::make_shared<std::string>();
  auto ratio = std::make_shared<double>(0.3);
  temporal->add_option("--input", *input, "Lines 'u v [w] t'")->required();
  temporal->add_option("--neg-ratio", *ratio, "Target fraction of negative edges")->check(CLI::Range(0.0, 1.0))->capture_default_str();
  temporal->add_option("--out", *temporal_out, "Edge list output (default stdout)");
  temporal->callback([=, &action] {
    action = [=] {
      std::ifstream in(*input);
      if (!in) throw InputError("cannot open '" + *input + "'", 0);
      auto r = generate_temporal_threshold(parse_timed_edges(in), *ratio);
      if (r.warning) std::cerr << "warning: " << *r.warning << '\n';
      std::cerr << "threshold " << r.threshold << ", negative ratio " << r.achieved_neg_ratio << '\n';
      std::ostringstream s;
      write_edge_list(s, r.graph);
      write_text(*temporal_out, s.str());
    };
  });
}

}  // namespace
}  // namespace cli

int main(int argc, char** argv) {
  CLI::App app{"Tolerantly balanced subgraph search for signed networks"};
  app.require_subcommand(1);
  std::function<void()> action;
  cli::register_solve(app, action);
  cli::register_2pc(app, action);
  cli::register_oracle(app, action);
  cli::register_bench(app, action);
  cli::register_gen(app, action);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  try {
    if (action) action();
    return 0;
  } catch (const tolbal::SizeGuardError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const tolbal::InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
