#include "tolbal/bench.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <regex>
#include <stdexcept>
#include <thread>

namespace tolbal {

Tolerance beta_power_half(int i) {
  if (i < 0 || i > 60) throw std::invalid_argument("beta grid exponent out of range");
  if (i % 2 == 0) return Tolerance(1, std::int64_t{1} << (i / 2));
  constexpr std::int64_t den = 1000000;
  const auto num = std::max<std::int64_t>(1, std::llround(std::pow(2.0, -i / 2.0) * den));
  return Tolerance(Rational(num, den));
}

std::vector<Tolerance> parse_beta_grid(const std::string& text) {
  static const std::regex power(R"(\s*2\^-i/2\s*,\s*i\s*=\s*(\d+)\s*\.\.\s*(\d+)\s*)");
  std::smatch m;
  std::vector<Tolerance> out;
  if (std::regex_match(text, m, power)) {
    const int lo = std::stoi(m[1]), hi = std::stoi(m[2]);
    if (lo > hi) throw std::invalid_argument("empty beta grid range");
    for (int i = lo; i <= hi; ++i) out.push_back(beta_power_half(i));
    return out;
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    out.push_back(Tolerance::parse(text.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return out;
}

HypothesisMetrics hypothesis_metrics(const std::vector<TraceEntry>& per_start, const Solution& opt) {
  if (per_start.empty()) throw std::invalid_argument("hypothesis metrics need at least one start");
  HypothesisMetrics h;
  h.opt_vertices = opt.size();

  const std::int64_t best = opt.score.scaled;
  if (best > 0 && !opt.empty()) {
    std::vector<std::int64_t> inside;
    for (const auto& t : per_start) {
      if (std::binary_search(opt.vertices.begin(), opt.vertices.end(), t.start)) inside.push_back(t.scaled);
    }
    if (!inside.empty()) {
      // the ceil(k/2)-th largest value is met by at least half of them
      std::sort(inside.begin(), inside.end(), std::greater<>());
      h.h1 = Rational(inside[(inside.size() + 1) / 2 - 1], best);
    }
  }

  std::vector<const TraceEntry*> order;
  for (const auto& t : per_start) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](auto* a, auto* b) { return a->scaled > b->scaled; });
  // Walk groups of equal score from the top, tracking the smallest size so far.
  std::size_t min_size = SIZE_MAX;
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j < order.size() && order[j]->scaled == order[i]->scaled) {
      min_size = std::min(min_size, std::max<std::size_t>(order[j]->vertices, 1));
      ++j;
    }
    for (std::size_t k = i; k < j; ++k) {
      const Rational r(static_cast<std::int64_t>(order[k]->vertices), static_cast<std::int64_t>(min_size));
      if (r > h.h2) h.h2 = r;
    }
    i = j;
  }
  return h;
}

SampleStats sample_stats(const std::vector<double>& xs) {
  SampleStats s;
  s.count = xs.size();
  if (xs.empty()) return s;
  s.min = *std::min_element(xs.begin(), xs.end());
  s.max = *std::max_element(xs.begin(), xs.end());
  s.mean = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
  if (xs.size() >= 2) {
    double ss = 0;
    for (double x : xs) ss += (x - s.mean) * (x - s.mean);
    s.variance = ss / static_cast<double>(xs.size() - 1);
  }
  return s;
}

std::optional<double> loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) return std::nullopt;
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] <= 0 || y[i] <= 0) return std::nullopt;
    lx.push_back(std::log(x[i]));
    ly.push_back(std::log(y[i]));
  }
  const double n = static_cast<double>(lx.size());
  const double mx = std::accumulate(lx.begin(), lx.end(), 0.0) / n;
  const double my = std::accumulate(ly.begin(), ly.end(), 0.0) / n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  if (sxx == 0) return std::nullopt;
  return sxy / sxx;
}

unsigned worker_count(unsigned requested) {
  unsigned n = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("TOLBAL_THREADS")) {
    unsigned cap = 0;
    const char* end = env + std::char_traits<char>::length(env);
    if (std::from_chars(env, end, cap).ec == std::errc() && cap > 0) n = std::min(n, cap);
  }
  return n;
}

}  // namespace tolbal
