#include "tolbal/generators.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "tolbal/detail/labels.hpp"
#include "tolbal/graph_io.hpp"
#include "tolbal/rng.hpp"

namespace tolbal {

namespace {

constexpr std::uint64_t pair_key(VertexId u, VertexId v) noexcept {
  if (u > v) std::swap(u, v);
  return (std::uint64_t{u} << 32) | v;
}

constexpr std::uint64_t choose2(std::uint64_t k) noexcept { return k < 2 ? 0 : k * (k - 1) / 2; }

// Grows `keys` (sorted, unique) to `target` distinct pairs drawn by `draw`.
template <class Draw>
void fill_unique(std::vector<std::uint64_t>& keys, std::size_t target, Draw&& draw) {
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  while (keys.size() < target) {
    const std::size_t missing = target - keys.size();
    const std::size_t old = keys.size();
    for (std::size_t i = 0; i < missing; ++i) keys.push_back(draw());
    std::sort(keys.begin() + static_cast<std::ptrdiff_t>(old), keys.end());
    std::inplace_merge(keys.begin(), keys.begin() + static_cast<std::ptrdiff_t>(old), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  }
}

// Uniform sample of `count` keys out of an explicit candidate list.
std::vector<std::uint64_t> sample_from(std::vector<std::uint64_t> candidates, std::size_t count, Rng& rng) {
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t j = i + rng.below(candidates.size() - i);
    std::swap(candidates[i], candidates[j]);
  }
  candidates.resize(count);
  std::sort(candidates.begin(), candidates.end());
  return candidates;
}

constexpr std::uint64_t kEnumerateBelow = std::uint64_t{1} << 20;

}  // namespace

std::vector<TimedEdge> parse_timed_edges(std::istream& in) {
  std::vector<TimedEdge> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#' || line[first] == '%') continue;
    std::istringstream ss(line);
    std::vector<std::string> tokens;
    for (std::string t; ss >> t;) tokens.push_back(t);
    if (tokens.size() < 3) throw InputError("expected 'u v [w] t'", line_no);
    auto t = detail::parse_int_label(tokens.back());
    if (!t) throw InputError("invalid timestamp '" + tokens.back() + "'", line_no);
    out.push_back({tokens[0], tokens[1], *t});
  }
  return out;
}

TemporalThresholdResult generate_temporal_threshold(const std::vector<TimedEdge>& edges, double target_neg_ratio) {
  if (!(target_neg_ratio >= 0.0 && target_neg_ratio <= 1.0)) throw std::invalid_argument("target ratio must be in [0, 1]");

  detail::LabelInterner interner;
  struct Raw {
    std::uint64_t key;
    std::int64_t time;
  };
  std::vector<Raw> raw;
  raw.reserve(edges.size());
  std::size_t self_loops = 0;
  for (const auto& e : edges) {
    if (e.u == e.v) {
      ++self_loops;
      continue;
    }
    raw.push_back({pair_key(interner.intern(e.u), interner.intern(e.v)), e.time});
  }
  auto [remap, labels] = interner.finalize();
  for (auto& r : raw) {
    auto u = remap[static_cast<VertexId>(r.key >> 32)], v = remap[static_cast<VertexId>(r.key & 0xffffffffu)];
    r.key = pair_key(u, v);
  }
  // repeated pairs keep their latest timestamp
  std::sort(raw.begin(), raw.end(), [](const Raw& a, const Raw& b) { return a.key != b.key ? a.key < b.key : a.time > b.time; });
  raw.erase(std::unique(raw.begin(), raw.end(), [](const Raw& a, const Raw& b) { return a.key == b.key; }), raw.end());

  TemporalThresholdResult result;
  std::vector<std::int64_t> times(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) times[i] = raw[i].time;
  std::sort(times.begin(), times.end());

  const double m = static_cast<double>(times.size());
  std::int64_t threshold = times.empty() ? 0 : times.front();
  if (!times.empty()) {
    const double target = target_neg_ratio * m;
    // Candidate thresholds are the distinct timestamps plus one past the max;
    // negatives(tau) = #times < tau is monotone, so bisect on it.
    std::vector<std::int64_t> candidates(times);
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    candidates.push_back(times.back() + 1);
    auto negatives = [&](std::int64_t tau) {
      return static_cast<double>(std::lower_bound(times.begin(), times.end(), tau) - times.begin());
    };
    auto it = std::partition_point(candidates.begin(), candidates.end(), [&](std::int64_t tau) { return negatives(tau) < target; });
    if (it == candidates.end()) --it;
    threshold = *it;
    if (it != candidates.begin()) {
      auto prev = *(it - 1);
      if (std::abs(negatives(prev) - target) <= std::abs(negatives(*it) - target)) threshold = prev;
    }
  }

  std::vector<SignedEdge> signed_edges;
  signed_edges.reserve(raw.size());
  std::size_t neg = 0;
  for (const auto& r : raw) {
    const bool positive = r.time >= threshold;
    neg += positive ? 0 : 1;
    signed_edges.push_back({static_cast<VertexId>(r.key >> 32), static_cast<VertexId>(r.key & 0xffffffffu),
                            positive ? Sign::Positive : Sign::Negative});
  }
  result.threshold = threshold;
  result.achieved_neg_ratio = raw.empty() ? 0.0 : static_cast<double>(neg) / m;
  if (std::abs(result.achieved_neg_ratio - target_neg_ratio) > 0.01) {
    result.warning = "closest achievable negative ratio is " + std::to_string(result.achieved_neg_ratio) +
                     " (target " + std::to_string(target_neg_ratio) + ")";
  }
  if (self_loops > 0) {
    std::string note = "skipped " + std::to_string(self_loops) + " self-loop(s)";
    result.warning = result.warning ? *result.warning + "; " + note : note;
  }
  const std::size_t n = labels.size();
  result.graph = SignedGraph::from_edges(n, std::move(signed_edges), std::move(labels));
  return result;
}

PlantedInstance generate_planted(const PlantedParams& params) {
  const std::size_t n = params.n;
  const std::size_t m = params.m;
  if (n == 0) throw std::invalid_argument("planted instance needs n >= 1");
  if (n >= (std::size_t{1} << 31)) throw std::invalid_argument("n too large");
  if (!(params.planted_fraction >= 0.0 && params.planted_fraction <= 1.0)) throw std::invalid_argument("planted_fraction must be in [0, 1]");
  if (!(params.flip_noise >= 0.0 && params.flip_noise <= 1.0)) throw std::invalid_argument("flip_noise must be in [0, 1]");

  const auto k = static_cast<std::size_t>(std::floor(params.planted_fraction * static_cast<double>(n)));
  const std::uint64_t planted_capacity = choose2(k);
  const std::uint64_t background_capacity = choose2(n) - planted_capacity;

  std::size_t m_planted = 0;
  if (k == n) {
    m_planted = m;
  } else if (k > 0) {
    m_planted = std::max<std::size_t>(k - 1, static_cast<std::size_t>(std::llround(params.planted_fraction * static_cast<double>(m))));
    m_planted = std::min<std::size_t>(m_planted, planted_capacity);
  }
  if (k > 0 && m < k - 1) throw std::invalid_argument("m must be at least planted size - 1 to connect the planted part");
  if (m_planted > planted_capacity) throw std::invalid_argument("too many edges for the planted part");
  const std::size_t m_background = m - m_planted;
  if (m_background > background_capacity) throw std::invalid_argument("edge budget exceeds the number of available vertex pairs");

  Rng rng(derive_seed(params.seed, 0x706c616e74ULL));
  std::vector<VertexId> perm(n);
  std::iota(perm.begin(), perm.end(), VertexId{0});
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);

  std::vector<std::uint8_t> planted_flag(n, 0);
  std::vector<std::uint8_t> side(n, 0);
  for (std::size_t i = 0; i < k; ++i) {
    planted_flag[perm[i]] = 1;
    side[perm[i]] = static_cast<std::uint8_t>(rng.below(2));
  }

  // Planted part: random recursive tree for connectivity, then extra pairs.
  std::vector<std::uint64_t> planted_keys;
  planted_keys.reserve(m_planted);
  for (std::size_t i = 1; i < k; ++i) planted_keys.push_back(pair_key(perm[i], perm[rng.below(i)]));
  if (m_planted > planted_keys.size()) {
    if (planted_capacity <= kEnumerateBelow) {
      std::vector<std::uint64_t> tree(planted_keys);
      std::sort(tree.begin(), tree.end());
      std::vector<std::uint64_t> candidates;
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
          auto key = pair_key(perm[i], perm[j]);
          if (!std::binary_search(tree.begin(), tree.end(), key)) candidates.push_back(key);
        }
      }
      std::sort(candidates.begin(), candidates.end());
      auto extra = sample_from(std::move(candidates), m_planted - tree.size(), rng);
      planted_keys.insert(planted_keys.end(), extra.begin(), extra.end());
      std::sort(planted_keys.begin(), planted_keys.end());
    } else {
      fill_unique(planted_keys, m_planted, [&] {
        VertexId a = perm[rng.below(k)], b;
        do b = perm[rng.below(k)]; while (b == a);
        return pair_key(a, b);
      });
    }
  } else {
    std::sort(planted_keys.begin(), planted_keys.end());
  }

  std::vector<std::uint64_t> background_keys;
  if (m_background > 0) {
    if (background_capacity <= kEnumerateBelow) {
      std::vector<std::uint64_t> candidates;
      for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
          if (!planted_flag[u] || !planted_flag[v]) candidates.push_back(pair_key(static_cast<VertexId>(u), static_cast<VertexId>(v)));
        }
      }
      background_keys = sample_from(std::move(candidates), m_background, rng);
    } else {
      const std::size_t nb = n - k;
      fill_unique(background_keys, m_background, [&] {
        VertexId a = perm[k + rng.below(nb)], b;
        do b = static_cast<VertexId>(rng.below(n)); while (b == a);
        return pair_key(a, b);
      });
    }
  }

  PlantedInstance inst;
  inst.seed = params.seed;
  std::vector<SignedEdge> edges;
  edges.reserve(planted_keys.size() + background_keys.size());
  for (auto key : planted_keys) {
    auto u = static_cast<VertexId>(key >> 32), v = static_cast<VertexId>(key & 0xffffffffu);
    bool positive = side[u] == side[v];
    if (params.flip_noise > 0.0 && rng.bernoulli(params.flip_noise)) {
      positive = !positive;
      ++inst.flipped_edges;
    }
    edges.push_back({u, v, positive ? Sign::Positive : Sign::Negative});
  }
  for (auto key : background_keys) {
    edges.push_back({static_cast<VertexId>(key >> 32), static_cast<VertexId>(key & 0xffffffffu),
                     rng.below(2) ? Sign::Positive : Sign::Negative});
  }
  inst.graph = SignedGraph::from_edges(n, std::move(edges));
  std::vector<VertexId> planted(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(k));
  std::sort(planted.begin(), planted.end());
  inst.planted = VertexSet::of(n, planted);
  return inst;
}

std::string planted_sidecar_json(const PlantedInstance& inst) {
  nlohmann::ordered_json j;
  auto planted = nlohmann::json::array();
  for (VertexId v : inst.planted.sorted()) {
    const auto& label = inst.graph.label(v);
    if (auto as_int = detail::parse_int_label(label)) {
      planted.push_back(*as_int);
    } else {
      planted.push_back(label);
    }
  }
  j["planted"] = std::move(planted);
  j["flipped_edges"] = inst.flipped_edges;
  j["seed"] = inst.seed;
  return j.dump(2) + "\n";
}

}  // namespace tolbal
