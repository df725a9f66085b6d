#include "tolbal/local_search.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tolbal {

void SearchParams::validate() const {
  if (!(p >= 0.0 && p < 1.0)) throw std::invalid_argument("p must be in [0, 1)");
  if (T < 1) throw std::invalid_argument("T must be a positive integer");
}

Objective SearchParams::objective() const {
  return size_penalty ? Objective::size_penalized(tol, *size_penalty) : Objective::tbc(tol);
}

LocalSearch::LocalSearch(const SignedGraph& g)
    : g_(&g),
      active_count_(g.vertex_count()),
      coloring_(g.vertex_count()),
      counts_(4 * g.vertex_count(), 0),
      touched_flag_(g.vertex_count(), 0),
      member_pos_(g.vertex_count(), 0),
      insert_heap_(2 * g.vertex_count()),
      flip_heap_(g.vertex_count()),
      delete_heap_(g.vertex_count()),
      scanner_(g.vertex_count()),
      probe_(g.vertex_count()) {}

void LocalSearch::set_active(std::span<const std::uint8_t> mask) {
  if (!mask.empty() && mask.size() != g_->vertex_count()) throw std::invalid_argument("active mask size mismatch");
  active_ = mask;
  active_count_ = mask.empty() ? g_->vertex_count()
                               : static_cast<std::size_t>(std::count_if(mask.begin(), mask.end(), [](auto b) { return b != 0; }));
}

std::uint32_t LocalSearch::degree_in(VertexId v) const noexcept {
  const std::uint32_t* c = &counts_[4 * std::size_t{v}];
  return c[0] + c[1] + c[2] + c[3];
}

std::int64_t LocalSearch::insert_key(VertexId x, int c) const noexcept {
  return objective_.edge_w * degree_in(x) - objective_.imb_w * imbalanced_at(x, c) - objective_.size_w;
}

std::int64_t LocalSearch::flip_key(VertexId x) const noexcept {
  const int c = coloring_.color(x);
  return objective_.imb_w * (static_cast<std::int64_t>(imbalanced_at(x, c)) - imbalanced_at(x, 1 - c));
}

std::int64_t LocalSearch::delete_key(VertexId x) const noexcept {
  return objective_.imb_w * imbalanced_at(x, coloring_.color(x)) - objective_.edge_w * degree_in(x) + objective_.size_w;
}

void LocalSearch::touch(VertexId v) {
  if (!touched_flag_[v]) {
    touched_flag_[v] = 1;
    touched_.push_back(v);
  }
}

void LocalSearch::refresh(VertexId v) {
  if (coloring_.selected(v)) {
    flip_heap_.set(v, flip_key(v));
    delete_heap_.set(v, delete_key(v));
  } else if (degree_in(v) > 0) {
    insert_heap_.set(2 * v, insert_key(v, 0));
    insert_heap_.set(2 * v + 1, insert_key(v, 1));
  } else {
    insert_heap_.erase(2 * v);
    insert_heap_.erase(2 * v + 1);
  }
}

void LocalSearch::reset(VertexId s, const SearchParams& params) {
  if (s >= g_->vertex_count()) throw std::out_of_range("start vertex out of range");
  if (!active(s)) throw std::invalid_argument("start vertex is not active");
  params.validate();
  params_ = params;
  objective_ = params.objective();
  const auto deg = static_cast<std::int64_t>(g_->max_degree()) + 1;
  const auto m = static_cast<std::int64_t>(g_->edge_count()) + 1;
  const auto n = static_cast<std::int64_t>(g_->vertex_count()) + 1;
  // throws if per-op deltas or running totals could overflow
  checked_mul(checked_mul(objective_.edge_w + objective_.imb_w, deg), 4);
  [[maybe_unused]] const auto total = checked_mul(objective_.edge_w + objective_.imb_w, m) + checked_mul(objective_.size_w, n);

  for (VertexId v : touched_) {
    touched_flag_[v] = 0;
    std::fill_n(&counts_[4 * std::size_t{v}], 4, 0u);
    coloring_.unset(v);
  }
  touched_.clear();
  members_.clear();
  insert_heap_.clear();
  flip_heap_.clear();
  delete_heap_.clear();
  log_.clear();
  stats_ = {};
  rng_ = Rng(params.seed);
  start_ = s;
  idle_ = 0;

  touch(s);
  raw_insert(s, 0);
  cur_ = opt_ = objective_.evaluate(0, 0, 1);
  budget_ = params.T;
}

std::int64_t LocalSearch::raw_insert(VertexId x, int c) {
  const std::int64_t delta = insert_key(x, c);
  coloring_.set(x, c);
  member_pos_[x] = static_cast<std::uint32_t>(members_.size());
  members_.push_back(x);
  insert_heap_.erase(2 * x);
  insert_heap_.erase(2 * x + 1);
  flip_heap_.set(x, flip_key(x));
  for (const auto& a : g_->neighbors(x)) {
    const VertexId w = a.vertex();
    if (!active(w)) continue;
    touch(w);
    ++counts_[4 * std::size_t{w} + 2 * a.sign_index() + static_cast<unsigned>(c)];
    refresh(w);
  }
  delete_heap_.set(x, delete_key(x));
  cur_ += delta;
  return delta;
}

std::int64_t LocalSearch::raw_flip(VertexId x) {
  const std::int64_t delta = flip_key(x);
  const int c = coloring_.color(x);
  coloring_.set(x, 1 - c);
  for (const auto& a : g_->neighbors(x)) {
    const VertexId w = a.vertex();
    if (!active(w)) continue;
    std::uint32_t* cw = &counts_[4 * std::size_t{w} + 2 * a.sign_index()];
    --cw[c];
    ++cw[1 - c];
    refresh(w);
  }
  refresh(x);
  cur_ += delta;
  return delta;
}

std::int64_t LocalSearch::raw_delete(VertexId x) {
  const std::int64_t delta = delete_key(x);
  const int c = coloring_.color(x);
  coloring_.unset(x);
  const std::uint32_t pos = member_pos_[x];
  members_[pos] = members_.back();
  member_pos_[members_[pos]] = pos;
  members_.pop_back();
  flip_heap_.erase(x);
  delete_heap_.erase(x);
  for (const auto& a : g_->neighbors(x)) {
    const VertexId w = a.vertex();
    if (!active(w)) continue;
    --counts_[4 * std::size_t{w} + 2 * a.sign_index() + static_cast<unsigned>(c)];
    refresh(w);
  }
  refresh(x);
  cur_ += delta;
  return delta;
}

void LocalSearch::record(OpKind kind, VertexId x, int before, int after, std::int64_t delta) {
  log_.push_back({kind, x, static_cast<std::int8_t>(before), static_cast<std::int8_t>(after), delta, false});
}

void LocalSearch::apply_insert(VertexId x, int c) {
  if (coloring_.selected(x)) throw std::invalid_argument("apply_insert: vertex already selected");
  if (!active(x)) throw std::invalid_argument("apply_insert: vertex not active");
  touch(x);
  record(OpKind::Insert, x, -1, c, raw_insert(x, c));
  ++stats_.inserts;
}

void LocalSearch::apply_flip(VertexId x) {
  if (!coloring_.selected(x)) throw std::invalid_argument("apply_flip: vertex not selected");
  const int c = coloring_.color(x);
  record(OpKind::Flip, x, c, 1 - c, raw_flip(x));
  ++stats_.flips;
}

void LocalSearch::apply_delete(VertexId x) {
  if (!coloring_.selected(x)) throw std::invalid_argument("apply_delete: vertex not selected");
  if (members_.size() <= 1) throw std::invalid_argument("apply_delete: cannot delete the last vertex");
  const int c = coloring_.color(x);
  record(OpKind::Delete, x, c, -1, raw_delete(x));
  ++stats_.deletes;
}

std::optional<Candidate> LocalSearch::top_insert() const {
  if (insert_heap_.empty()) return std::nullopt;
  const auto& e = insert_heap_.top();
  return Candidate{OpKind::Insert, e.id / 2, static_cast<int>(e.id % 2), e.key};
}

std::optional<Candidate> LocalSearch::top_flip() const {
  if (flip_heap_.empty()) return std::nullopt;
  const auto& e = flip_heap_.top();
  return Candidate{OpKind::Flip, e.id, 1 - coloring_.color(e.id), e.key};
}

std::optional<Candidate> LocalSearch::del_eval() {
  if (members_.size() < 2) return std::nullopt;
  auto in_set = [&](VertexId v) { return coloring_.selected(v); };
  // Best-first over delete keys; the first non-cut vertex wins. Local probes
  // settle most candidates cheaply; a full articulation scan takes over once
  // they have spent about as much as the scan would.
  std::size_t budget = 4 * members_.size() + 64;
  std::optional<Candidate> best;
  bool gave_up = false;
  delete_heap_.visit_in_order(heap_scratch_, [&](const detail::IndexedMaxHeap::Entry& e) {
    const auto verdict = probe_.test(*g_, e.id, in_set, budget);
    if (verdict == CutProbe::Verdict::GaveUp) {
      gave_up = true;
      return false;
    }
    if (verdict == CutProbe::Verdict::Cut) return true;
    best = Candidate{OpKind::Delete, e.id, coloring_.color(e.id), e.key};
    return false;
  });
  if (!gave_up) return best;

  scanner_.scan(*g_, members_, in_set);
  best.reset();
  for (VertexId v : members_) {
    if (scanner_.is_cut(v)) continue;
    const std::int64_t d = delete_key(v);
    if (!best || d > best->delta || (d == best->delta && v < best->vertex)) {
      best = Candidate{OpKind::Delete, v, coloring_.color(v), d};
    }
  }
  return best;
}

void LocalSearch::execute(const Candidate& c) {
  switch (c.kind) {
    case OpKind::Insert: apply_insert(c.vertex, c.color); break;
    case OpKind::Flip: apply_flip(c.vertex); break;
    case OpKind::Delete: apply_delete(c.vertex); break;
  }
}

bool LocalSearch::step() {
  if (budget_ < 0 || members_.size() >= active_count_ || idle_ >= 2 * params_.T) return false;

  std::optional<Candidate> best = top_insert();
  const double z1 = rng_.uniform();
  if (z1 < params_.p) {
    if (auto f = top_flip(); f && (!best || f->delta > best->delta)) best = f;
  }
  const double z2 = rng_.uniform();
  const auto size = static_cast<double>(members_.size());
  const double q = members_.size() > 1 ? params_.p * std::log(size) / size : 0.0;
  if (z2 < q) {
    if (auto d = del_eval(); d && (!best || d->delta > best->delta)) best = d;
  }

  if (!best) {
    ++idle_;
    ++stats_.idle_rounds;
    return idle_ < 2 * params_.T;
  }
  idle_ = 0;
  execute(*best);
  ++stats_.iterations;
  if (cur_ <= opt_) {
    --budget_;
    ++stats_.non_progressive;
  } else {
    opt_ = cur_;
    budget_ += params_.T;
    log_.back().progressive = true;
    ++stats_.progressive;
  }
  return true;
}

void LocalSearch::run() {
  while (step()) {
  }
}

void LocalSearch::undo_to_optimum() {
  while (cur_ != opt_ && !log_.empty()) {
    const OpRecord r = log_.back();
    log_.pop_back();
    switch (r.kind) {
      case OpKind::Insert: raw_delete(r.vertex); break;
      case OpKind::Flip: raw_flip(r.vertex); break;
      case OpKind::Delete: raw_insert(r.vertex, r.color_before); break;
    }
    ++stats_.undone;
  }
}

SearchOutcome LocalSearch::result() const {
  SearchOutcome out;
  out.start = start_;
  out.objective = cur_;
  out.stats = stats_;
  auto& sol = out.solution;
  sol.vertices.assign(members_.begin(), members_.end());
  std::sort(sol.vertices.begin(), sol.vertices.end());
  sol.colors.reserve(sol.vertices.size());
  std::int64_t twice_m = 0, twice_imb = 0;
  for (VertexId v : sol.vertices) {
    const int c = coloring_.color(v);
    sol.colors.push_back(static_cast<std::uint8_t>(c));
    twice_m += degree_in(v);
    twice_imb += imbalanced_at(v, c);
  }
  sol.score = make_score(twice_m / 2, twice_imb / 2, params_.tol);
  return out;
}

SearchOutcome LocalSearch::search(VertexId s, const SearchParams& params) {
  reset(s, params);
  run();
  undo_to_optimum();
  return result();
}

}  // namespace tolbal
