#pragma once

#include <CLI11.hpp>
#include <atomic>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "tolbal/bench.hpp"
#include "tolbal/generators.hpp"
#include "tolbal/graph_io.hpp"
#include "tolbal/runner.hpp"

namespace cli {

using namespace tolbal;

/// Thrown for bad flag combinations detected after parsing (exit code 1).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline SignedGraph load_graph(const std::string& path) {
  std::vector<std::string> warnings;
  auto g = read_edge_list_file(path, {}, &warnings);
  for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
  return g;
}

/// Writes `text` to `path`, or stdout when path is empty or "-".
inline void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

inline std::vector<std::string> split(const std::string& s, char sep = ',') {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, sep);) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

/// Runs fn(i) for i in [0, count) on `workers` threads.
inline void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& fn) {
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex m;
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < std::min<std::size_t>(workers, count); ++w) {
      pool.emplace_back([&] {
        try {
          for (std::size_t i = next++; i < count; i = next++) fn(i);
        } catch (...) {
          std::lock_guard lock(m);
          if (!error) error = std::current_exception();
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
}

/// Graph source shared by the bench commands: a file or a planted instance.
struct GraphSource {
  std::string input;
  std::size_t n = 2000;
  std::size_t m = 0;  // 0 = 10 n
  double fraction = 0.3;
  double noise = 0.05;
  std::uint64_t seed = 1;

  void add_options(CLI::App* app) {
    app->add_option("--input", input, "Signed edge list (default: a planted instance)");
    app->add_option("--n", n, "Planted instance vertex count")->check(CLI::PositiveNumber);
    app->add_option("--m", m, "Planted instance edge count (default 10 n)");
    app->add_option("--fraction", fraction, "Planted fraction")->check(CLI::Range(0.0, 1.0));
    app->add_option("--noise", noise, "Planted sign-flip noise")->check(CLI::Range(0.0, 1.0));
    app->add_option("--gen-seed", seed, "Planted instance seed");
  }

  std::string dataset() const {
    if (!input.empty()) return input;
    std::ostringstream s;
    s << "planted(n=" << n << ",m=" << (m ? m : 10 * n) << ",f=" << fraction << ",noise=" << noise << ",seed=" << seed
      << ")";
    return s.str();
  }

  SignedGraph load() const {
    if (!input.empty()) return load_graph(input);
    return generate_planted({n, m ? m : 10 * n, fraction, noise, seed}).graph;
  }
};

/// Tolerance flags: --beta A/B or --strict (mutually exclusive).
struct ToleranceFlags {
  std::string beta;
  bool strict = false;

  void add_options(CLI::App* app, const std::string& fallback) {
    beta = fallback;
    auto* b = app->add_option("--beta", beta, "Tolerance beta as A/B")->capture_default_str();
    auto* s = app->add_flag("--strict", strict, "Use beta = 1/(m+1), which forbids imbalanced edges");
    b->excludes(s);
  }

  Tolerance resolve(const SignedGraph& g) const {
    if (strict) return strict_tolerance(g);
    try {
      return Tolerance::parse(beta);
    } catch (const std::exception& e) {
      throw UsageError("--beta: " + std::string(e.what()));
    }
  }
};

inline std::string fmt(double x) {
  std::ostringstream s;
  s.precision(10);
  s << x;
  return s.str();
}

void register_bench(CLI::App& app, std::function<void()>& action);

}  // namespace cli
