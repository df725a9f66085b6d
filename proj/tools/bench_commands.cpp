// bench subcommands. Every CSV starts with a "# schema: <name>/<version>"
// comment line followed by a header row.
#include <chrono>
#include <cmath>

#include "cli_common.hpp"

namespace cli {
namespace {

struct Cell {
  double phi = 0, ms = 0;
  std::size_t vertices = 0, edges = 0;
  std::int64_t imb = 0;
  bool feasible = false;
};

Cell run_cell(const SignedGraph& g, SolverConfig cfg) {
  auto r = run_solver(g, cfg);
  Cell c;
  c.phi = r.solution.score.value(cfg.tol).to_double();
  c.ms = r.wall_ms;
  c.vertices = r.solution.size();
  c.edges = static_cast<std::size_t>(r.solution.score.m_sel);
  c.imb = r.solution.score.imb;
  c.feasible = r.solution.score.scaled >= 0;
  return c;
}

std::vector<double> column(const std::vector<Cell>& cells, double Cell::*field) {
  std::vector<double> out;
  for (const auto& c : cells) out.push_back(c.*field);
  return out;
}

struct Common {
  GraphSource source;
  std::string out;
  std::uint64_t seed = 0;
  unsigned threads = 0;

  void add(CLI::App* cmd) {
    source.add_options(cmd);
    cmd->add_option("--out", out, "CSV output (default stdout)");
    cmd->add_option("--seed", seed, "Base seed; round r uses a seed derived from it")->capture_default_str();
    cmd->add_option("--threads", threads, "Parallel cells (0 = all; capped by TOLBAL_THREADS)")->capture_default_str();
  }
};

void sweep(CLI::App& bench, std::function<void()>& action) {
  auto* cmd = bench.add_subcommand("sweep", "Score across a beta grid for several methods");
  struct Opts {
    Common common;
    std::string grid = "2^-i/2,i=2..16", methods = "rh,grest,eigen", objective = "p5";
    int rounds = 5;
  };
  auto o = std::make_shared<Opts>();
  o->common.add(cmd);
  cmd->add_option("--beta-grid", o->grid, "\"2^-i/2,i=LO..HI\" or a list of fractions")->capture_default_str();
  cmd->add_option("--methods", o->methods)->capture_default_str();
  cmd->add_option("--objective", o->objective)->check(CLI::IsMember({"p3", "p4", "p5"}))->capture_default_str();
  cmd->add_option("--rounds", o->rounds)->check(CLI::PositiveNumber)->capture_default_str();
  cmd->callback([o, &action] {
    action = [o] {
      const auto grid = parse_beta_grid(o->grid);
      std::vector<Method> methods;
      for (const auto& m : split(o->methods)) methods.push_back(parse_method(m));
      const auto g = o->common.source.load();
      const std::size_t R = static_cast<std::size_t>(o->rounds);
      std::vector<Cell> cells(methods.size() * grid.size() * R);
      parallel_for(cells.size(), worker_count(o->common.threads), [&](std::size_t i) {
        SolverConfig cfg;
        cfg.method = methods[i / (grid.size() * R)];
        cfg.tol = grid[(i / R) % grid.size()];
        cfg.objective = parse_target(o->objective);
        cfg.seed = derive_seed(o->common.seed, i % R);
        cells[i] = run_cell(g, cfg);
      });
      std::ostringstream s;
      s << "# schema: tolbal.sweep/1\n"
        << "dataset,method,beta,beta_float,rounds,phi_mean,phi_min,phi_max,vertices_mean,edges_mean,imbalanced_mean,"
           "feasible_rate,ms_mean\n";
      for (std::size_t mi = 0; mi < methods.size(); ++mi) {
        for (std::size_t bi = 0; bi < grid.size(); ++bi) {
          const std::vector<Cell> group(cells.begin() + static_cast<std::ptrdiff_t>((mi * grid.size() + bi) * R),
                                        cells.begin() + static_cast<std::ptrdiff_t>((mi * grid.size() + bi + 1) * R));
          const auto phi = sample_stats(column(group, &Cell::phi));
          double vs = 0, es = 0, imb = 0, feas = 0;
          for (const auto& c : group) {
            vs += static_cast<double>(c.vertices);
            es += static_cast<double>(c.edges);
            imb += static_cast<double>(c.imb);
            feas += c.feasible ? 1 : 0;
          }
          const double r = static_cast<double>(R);
          s << '"' << o->common.source.dataset() << "\"," << method_name(methods[mi]) << ',' << grid[bi].to_string()
            << ',' << fmt(grid[bi].value()) << ',' << R << ',' << fmt(phi.mean) << ',' << fmt(phi.min) << ','
            << fmt(phi.max) << ',' << fmt(vs / r) << ',' << fmt(es / r) << ',' << fmt(imb / r) << ',' << fmt(feas / r)
            << ',' << fmt(sample_stats(column(group, &Cell::ms)).mean) << '\n';
        }
      }
      write_text(o->common.out, s.str());
    };
  });
}

void stability(CLI::App& bench, std::function<void()>& action) {
  auto* cmd = bench.add_subcommand("stability", "Spread of the score over independent seeds");
  struct Opts {
    Common common;
    std::string modes = "rh,rh-insert-only", beta = "1/4";
    int rounds = 100;
  };
  auto o = std::make_shared<Opts>();
  o->common.add(cmd);
  cmd->add_option("--modes", o->modes, "Methods to compare; variance_ratio is relative to the last one")
      ->capture_default_str();
  cmd->add_option("--beta", o->beta)->capture_default_str();
  cmd->add_option("--rounds", o->rounds)->check(CLI::Range(2, 1 << 30))->capture_default_str();
  cmd->callback([o, &action] {
    action = [o] {
      std::vector<Method> modes;
      for (const auto& m : split(o->modes)) modes.push_back(parse_method(m));
      if (modes.empty()) throw UsageError("--modes is empty");
      const Tolerance tol = Tolerance::parse(o->beta);
      const auto g = o->common.source.load();
      const std::size_t R = static_cast<std::size_t>(o->rounds);
      std::vector<Cell> cells(modes.size() * R);
      parallel_for(cells.size(), worker_count(o->common.threads), [&](std::size_t i) {
        SolverConfig cfg;
        cfg.method = modes[i / R];
        cfg.tol = tol;
        cfg.seed = derive_seed(o->common.seed, i % R);
        cells[i] = run_cell(g, cfg);
      });
      std::vector<SampleStats> stats;
      for (std::size_t k = 0; k < modes.size(); ++k) {
        const std::vector<Cell> group(cells.begin() + static_cast<std::ptrdiff_t>(k * R),
                                      cells.begin() + static_cast<std::ptrdiff_t>((k + 1) * R));
        stats.push_back(sample_stats(column(group, &Cell::phi)));
      }
      const double ref = stats.back().variance;
      std::ostringstream s;
      s << "# schema: tolbal.stability/1\n"
        << "dataset,mode,beta,rounds,phi_min,phi_max,phi_mean,phi_variance,variance_ratio\n";
      for (std::size_t k = 0; k < modes.size(); ++k) {
        s << '"' << o->common.source.dataset() << "\"," << method_name(modes[k]) << ',' << tol.to_string() << ',' << R
          << ',' << fmt(stats[k].min) << ',' << fmt(stats[k].max) << ',' << fmt(stats[k].mean) << ','
          << fmt(stats[k].variance) << ',' << (ref > 0 ? fmt(stats[k].variance / ref) : "") << '\n';
      }
      write_text(o->common.out, s.str());
    };
  });
}

void hypothesis(CLI::App& bench, std::function<void()>& action) {
  auto* cmd = bench.add_subcommand("hypothesis", "Start-vertex hypothesis metrics from an exhaustive run");
  struct Opts {
    Common common;
    std::string beta = "1/4", per_start;
  };
  auto o = std::make_shared<Opts>();
  o->common.add(cmd);
  cmd->add_option("--beta", o->beta)->capture_default_str();
  cmd->add_option("--per-start", o->per_start, "Also write one CSV row per start vertex here");
  cmd->callback([o, &action] {
    action = [o] {
      const Tolerance tol = Tolerance::parse(o->beta);
      const auto g = o->common.source.load();
      SamplerParams sp;
      sp.mode = SamplerMode::Exhaustive;
      sp.search.tol = tol;
      sp.search.seed = o->common.seed;
      sp.threads = worker_count(o->common.threads);
      const auto r = solve(g, sp);
      const auto h = hypothesis_metrics(r.trace, r.best);
      std::ostringstream s;
      s << "# schema: tolbal.hypothesis/1\n"
        << "dataset,n,m,beta,phi_opt,opt_vertices,h1,h1_float,h2,h2_float\n";
      const Rational phi_opt = r.best.score.value(tol);
      s << '"' << o->common.source.dataset() << "\"," << g.vertex_count() << ',' << g.edge_count() << ','
        << tol.to_string() << ',' << fmt(phi_opt.to_double()) << ',' << h.opt_vertices << ','
        << (h.h1 ? rational_text(*h.h1) : "") << ',' << (h.h1 ? fmt(h.h1->to_double()) : "") << ','
        << rational_text(h.h2) << ',' << fmt(h.h2.to_double()) << '\n';
      write_text(o->common.out, s.str());
      if (!o->per_start.empty()) {
        std::ostringstream p;
        p << "# schema: tolbal.per_start/1\nstart,phi_hat,vertices,edges\n";
        for (const auto& t : r.trace) {
          p << g.label(t.start) << ',' << fmt(Rational(t.scaled, tol.num()).to_double()) << ',' << t.vertices << ','
            << t.edges << '\n';
        }
        write_text(o->per_start, p.str());
      }
    };
  });
}

void scaling(CLI::App& bench, std::function<void()>& action) {
  auto* cmd = bench.add_subcommand("scaling", "Runtime of RH on planted graphs with m = 10 n");
  struct Opts {
    std::string sizes = "10000,100000,1000000", out, beta = "1/4";
    std::uint64_t seed = 1;
    double fraction = 0.3, noise = 0.05;
  };
  auto o = std::make_shared<Opts>();
  cmd->add_option("--sizes", o->sizes, "Ascending vertex counts")->capture_default_str();
  cmd->add_option("--out", o->out, "CSV output (default stdout)");
  cmd->add_option("--beta", o->beta)->capture_default_str();
  cmd->add_option("--seed", o->seed)->capture_default_str();
  cmd->add_option("--fraction", o->fraction)->capture_default_str();
  cmd->add_option("--noise", o->noise)->capture_default_str();
  cmd->callback([o, &action] {
    action = [o] {
      std::vector<std::size_t> sizes;
      for (const auto& s : split(o->sizes)) sizes.push_back(std::stoull(s));
      if (sizes.empty() || !std::is_sorted(sizes.begin(), sizes.end())) throw UsageError("--sizes must be ascending");
      const Tolerance tol = Tolerance::parse(o->beta);
      std::ostringstream s;
      s << "# schema: tolbal.scaling/1\n" << "n,m,max_degree,ms,phi_hat,vertices,searches\n";
      std::vector<double> xs, ys;
      for (std::size_t n : sizes) {
        auto inst = generate_planted({n, 10 * n, o->fraction, o->noise, o->seed});
        SolverConfig cfg;
        cfg.tol = tol;
        cfg.seed = o->seed;
        auto r = run_solver(inst.graph, cfg);
        xs.push_back(static_cast<double>(n));
        ys.push_back(r.wall_ms);
        s << n << ',' << inst.graph.edge_count() << ',' << inst.graph.max_degree() << ',' << fmt(r.wall_ms) << ','
          << fmt(r.solution.score.value(tol).to_double()) << ',' << r.solution.size() << ','
          << r.meta["trace"]["searches"].get<std::size_t>() << '\n';
        std::cerr << "n=" << n << " ms=" << r.wall_ms << '\n';
      }
      const auto slope = loglog_slope(xs, ys);
      s << "# slope: " << (slope ? fmt(*slope) : "undefined") << '\n';
      write_text(o->out, s.str());
    };
  });
}

void hyper(CLI::App& bench, std::function<void()>& action) {
  auto* cmd = bench.add_subcommand("hyper", "One-at-a-time sweeps of p, C and T around the defaults");
  struct Opts {
    Common common;
    std::string p_grid = "0,0.2,0.4,0.6,0.8,0.9", c_grid = "1/2,1,3/2,2,3,5", t_grid = "5,10,20,40,80", beta = "1/4";
    int rounds = 5;
  };
  auto o = std::make_shared<Opts>();
  o->common.add(cmd);
  cmd->add_option("--p-grid", o->p_grid)->capture_default_str();
  cmd->add_option("--C-grid", o->c_grid)->capture_default_str();
  cmd->add_option("--T-grid", o->t_grid)->capture_default_str();
  cmd->add_option("--beta", o->beta)->capture_default_str();
  cmd->add_option("--rounds", o->rounds)->check(CLI::PositiveNumber)->capture_default_str();
  cmd->callback([o, &action] {
    action = [o] {
      struct Setting {
        std::string param, value;
        SolverConfig cfg;
      };
      std::vector<Setting> settings;
      SolverConfig base;
      base.tol = Tolerance::parse(o->beta);
      for (const auto& v : split(o->p_grid)) {
        settings.push_back({"p", v, base});
        settings.back().cfg.p = std::stod(v);
      }
      for (const auto& v : split(o->c_grid)) {
        settings.push_back({"C", v, base});
        settings.back().cfg.C = Rational::parse(v);
      }
      for (const auto& v : split(o->t_grid)) {
        settings.push_back({"T", v, base});
        settings.back().cfg.T = std::stoll(v);
      }
      const auto g = o->common.source.load();
      const std::size_t R = static_cast<std::size_t>(o->rounds);
      std::vector<Cell> cells(settings.size() * R);
      parallel_for(cells.size(), worker_count(o->common.threads), [&](std::size_t i) {
        SolverConfig cfg = settings[i / R].cfg;
        cfg.seed = derive_seed(o->common.seed, i % R);
        cells[i] = run_cell(g, cfg);
      });
      std::ostringstream s;
      s << "# schema: tolbal.hyper/1\n" << "dataset,param,value,beta,rounds,phi_mean,phi_variance,vertices_mean,ms_mean\n";
      for (std::size_t k = 0; k < settings.size(); ++k) {
        const std::vector<Cell> group(cells.begin() + static_cast<std::ptrdiff_t>(k * R),
                                      cells.begin() + static_cast<std::ptrdiff_t>((k + 1) * R));
        const auto phi = sample_stats(column(group, &Cell::phi));
        double vs = 0;
        for (const auto& c : group) vs += static_cast<double>(c.vertices);
        s << '"' << o->common.source.dataset() << "\"," << settings[k].param << ',' << settings[k].value << ','
          << settings[k].cfg.tol.to_string() << ',' << R << ',' << fmt(phi.mean) << ',' << fmt(phi.variance) << ','
          << fmt(vs / static_cast<double>(R)) << ',' << fmt(sample_stats(column(group, &Cell::ms)).mean) << '\n';
      }
      write_text(o->common.out, s.str());
    };
  });
}

}  // namespace

void register_bench(CLI::App& app, std::function<void()>& action) {
  auto* bench = app.add_subcommand("bench", "Experiment harness writing CSV");
  bench->require_subcommand(1);
  sweep(*bench, action);
  stability(*bench, action);
  hypothesis(*bench, action);
  scaling(*bench, action);
  hyper(*bench, action);
}

}  // namespace cli
