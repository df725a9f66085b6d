#include "tolbal/sampler.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace tolbal {

namespace {

unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Runs searches for `starts` on up to `workers.size()` threads; results keep
// the order of `starts`.
void run_batch(std::vector<LocalSearch>& workers, const std::vector<VertexId>& starts, const SearchParams& base,
               std::vector<SearchOutcome>& out) {
  out.assign(starts.size(), {});
  auto job = [&](LocalSearch& ls, std::size_t i) {
    SearchParams p = base;
    p.seed = search_seed(base.seed, starts[i]);
    out[i] = ls.search(starts[i], p);
  };
  if (workers.size() == 1 || starts.size() == 1) {
    for (std::size_t i = 0; i < starts.size(); ++i) job(workers.front(), i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  const std::size_t k = std::min(workers.size(), starts.size());
  pool.reserve(k);
  std::exception_ptr error;
  std::mutex error_mutex;
  for (std::size_t w = 0; w < k; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < starts.size(); i = next++) job(workers[w], i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  pool.clear();
  if (error) std::rethrow_exception(error);
}

TraceEntry trace_of(const SearchOutcome& o) {
  return {o.start, o.objective, o.solution.size(), static_cast<std::size_t>(o.solution.score.m_sel)};
}

}  // namespace

SamplerResult solve(const SignedGraph& g, const SamplerParams& params) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("cannot solve on an empty graph");
  if (params.C.num() <= 0) throw std::invalid_argument("C must be positive");
  params.search.validate();

  const unsigned threads = resolve_threads(params.threads);
  std::vector<LocalSearch> workers;
  workers.reserve(threads);
  for (unsigned i = 0; i < threads; ++i) workers.emplace_back(g);

  const auto t0 = std::chrono::steady_clock::now();
  auto out_of_time = [&] {
    return params.timeout && std::chrono::steady_clock::now() - t0 >= *params.timeout;
  };

  SamplerResult result;
  bool have = false;
  std::int64_t best_objective = 0;
  std::vector<VertexId> starts;
  std::vector<SearchOutcome> outcomes;
  const std::size_t batch = threads == 1 ? 1 : 4 * std::size_t{threads};

  if (params.mode == SamplerMode::Exhaustive) {
    for (std::size_t lo = 0; lo < n; lo += batch) {
      if (out_of_time()) {
        result.timed_out = true;
        break;
      }
      starts.clear();
      for (std::size_t v = lo; v < std::min(n, lo + batch); ++v) starts.push_back(static_cast<VertexId>(v));
      run_batch(workers, starts, params.search, outcomes);
      for (auto& o : outcomes) {
        result.trace.push_back(trace_of(o));
        result.total_size += o.solution.size();
        if (!have || o.objective > best_objective ||
            (o.objective == best_objective && tie_break_before(o.solution, result.best))) {
          have = true;
          best_objective = o.objective;
          result.best = std::move(o.solution);
        }
      }
    }
    return result;
  }

  // Sampled: TotalSize < C*n compared exactly as TotalSize*den < num*n.
  Rng rng(derive_seed(params.search.seed, 0x73616d706c6572ULL));
  const __int128 limit = static_cast<__int128>(params.C.num()) * static_cast<__int128>(n);
  auto keep_going = [&] { return static_cast<__int128>(result.total_size) * params.C.den() < limit; };
  bool first = true;
  while (first || keep_going()) {
    if (!first && out_of_time()) {
      result.timed_out = true;
      break;
    }
    starts.clear();
    for (std::size_t i = 0; i < batch; ++i) starts.push_back(static_cast<VertexId>(rng.below(n)));
    run_batch(workers, starts, params.search, outcomes);
    // Consume in draw order; results past the stopping point are discarded.
    for (auto& o : outcomes) {
      if (!first && !keep_going()) break;
      result.trace.push_back(trace_of(o));
      result.total_size += o.solution.size();
      if (!have || o.objective > best_objective) {
        have = true;
        best_objective = o.objective;
        result.best = std::move(o.solution);
      }
      first = false;
    }
  }
  return result;
}

SolutionMetrics solution_report(const SignedGraph& g, const Solution& sol, const Tolerance& tol) {
  SolutionMetrics m;
  if (sol.empty()) return m;
  const Score s = rescore(g, sol, tol);
  m.vertices = sol.size();
  m.edges = static_cast<std::size_t>(s.m_sel);
  m.imbalanced = s.imb;
  m.phi_hat = s.value(tol);
  m.feasible = is_tolerant_balanced_witness(s);
  m.polarity = Rational(2 * (s.m_sel - 2 * s.imb), static_cast<std::int64_t>(sol.size()));
  return m;
}

}  // namespace tolbal
