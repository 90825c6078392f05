#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cmholes/error.hpp"
#include "cmholes/explore/contour.hpp"
#include "cmholes/explore/sleeping_trace.hpp"
#include "cmholes/graph/degree.hpp"
#include "cmholes/graph/multigraph.hpp"

namespace cmholes {

struct ExplorationOptions {
  bool record_snapshots = true;
  double delta = 0.3;
  // Re-verifies the state partition after every step. O(N) per step.
  bool check_invariants = false;
};

struct LadderTime {
  std::int64_t k;
  std::int64_t time;
  VertexId vertex;  // top of the stack at T_k
};

struct ExplorationResult {
  std::size_t n_vertices = 0;
  int m = 1;
  double delta = 0.3;
  std::uint64_t seed = 0;
  MultiGraph graph;
  ContourProcess contour;
  // Top of the stack after every state, -1 when empty.
  std::vector<VertexId> top;
  // Stack at the first state of maximal height. For m > 1 the m - 1 tree
  // vertices linking consecutive stack entries are included, so this is the
  // full m-induced path.
  std::vector<VertexId> spine;
  std::int64_t spine_state = 0;
  // State at which each vertex was pushed, -1 if never.
  std::vector<std::int64_t> push_state;
  std::vector<VertexId> roots;
  std::vector<LadderTime> ladder_times;
  // N_i(k) for each ladder index k, read at state T_k - 1 (state 0 for k = 0).
  std::vector<std::vector<std::int64_t>> snapshots;
  // Vertices no longer sleeping at the same states.
  std::vector<std::int64_t> w;
  SleepingTrace sleeping;

  bool empty() const { return n_vertices == 0; }
  std::int32_t max_height() const { return contour.max_height(); }
};

// First state n >= 0 with |S_n| <= (1 - alpha) N.
inline std::int64_t tau(const ExplorationResult& res, double alpha) {
  if (res.sleeping.empty()) throw DomainViolation("exploration recorded no sleeping trace");
  if (!(alpha >= 0.0 && alpha < 1.0)) throw DomainViolation("alpha must lie in [0, 1)");
  const double bound = (1.0 - alpha) * static_cast<double>(res.n_vertices);
  const auto hit = res.sleeping.first_state_at_most(static_cast<std::int64_t>(std::floor(bound)));
  if (!hit) throw DomainViolation("alpha is never reached by the exploration");
  return *hit;
}

namespace detail {

enum class VertexState : std::uint8_t { sleeping, frontier, active, retired };

template <class URBG>
class InducedExplorer {
 public:
  InducedExplorer(const DegreeSequence& seq, int m, const ExplorationOptions& opts, URBG& rng)
      : seq_(seq), m_(m), opts_(opts), rng_(rng) {}

  ExplorationResult run() {
    ExplorationResult res;
    res.n_vertices = seq_.size();
    res.m = m_;
    res.delta = opts_.delta;
    if (m_ < 1) throw DomainViolation("m must be at least 1");
    if (seq_.total_half_edges % 2 != 0) throw DomainViolation("odd number of half-edges");
    const std::size_t n = seq_.size();
    if (n == 0) {
      res.top.push_back(-1);
      return res;
    }
    init();
    res.top.push_back(-1);
    res.push_state.assign(n, -1);

    while (true) {
      if (stack_.empty()) {
        if (sleeping_.empty()) break;
        begin_step(res);
        std::uniform_int_distribution<std::size_t> pick(0, sleeping_.size() - 1);
        const VertexId v = sleeping_[pick(rng_)];
        leave_sleeping(v);
        res.roots.push_back(v);
        push(res, v, {}, -1, -1, StepKind::new_component);
      } else if (Entry& e = stack_.back(); e.cursor == e.pending_end) {
        begin_step(res);
        pop();
        res.contour.events.push_back(StepKind::backtrack);
      } else {
        begin_step(res);
        const Pending item = pending_[e.cursor++];
        push(res, item.vertex, item, item.child_begin, item.child_end, StepKind::advance);
      }
      res.contour.heights.push_back(static_cast<std::int32_t>(stack_.size()));
      res.top.push_back(stack_.empty() ? -1 : stack_.back().vertex);
      if (opts_.check_invariants) check_partition();
    }

    res.spine = std::move(best_);
    res.graph = MultiGraph(seq_.degrees, std::move(partner_));
    if (opts_.record_snapshots) {
      res.sleeping = std::move(trace_);
      finish_snapshots(res);
    }
    return res;
  }

 private:
  struct Pending {
    VertexId vertex;
    std::int32_t child_begin, child_end;
    std::int32_t via_begin, via_end;
  };
  struct Entry {
    VertexId vertex;
    std::int32_t pending_begin, pending_end, cursor;
    std::int32_t child_mark, via_mark, tree_begin, tree_end;
    std::int32_t path_begin;
  };

  void init() {
    const std::size_t n = seq_.size();
    const auto total = static_cast<std::size_t>(seq_.total_half_edges);
    offsets_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + seq_.degrees[v];
    owner_.resize(total);
    for (std::size_t v = 0; v < n; ++v)
      for (HalfEdgeId h = offsets_[v]; h < offsets_[v + 1]; ++h) owner_[h] = static_cast<VertexId>(v);
    partner_.assign(total, -1);
    pool_.resize(total);
    pool_pos_.resize(total);
    for (std::size_t h = 0; h < total; ++h) {
      pool_[h] = static_cast<HalfEdgeId>(h);
      pool_pos_[h] = static_cast<HalfEdgeId>(h);
    }
    remaining_ = seq_.degrees;
    state_.assign(n, VertexState::sleeping);
    sleeping_.resize(n);
    sleeping_pos_.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
      sleeping_[v] = static_cast<VertexId>(v);
      sleeping_pos_[v] = static_cast<std::int32_t>(v);
    }
    tree_parent_.assign(n, -1);
    stamp_.assign(n, 0);
    if (opts_.record_snapshots) {
      std::vector<std::int64_t> hist(static_cast<std::size_t>(seq_.max_degree()) + 1, 0);
      for (int d : seq_.degrees) ++hist[d];
      trace_ = SleepingTrace(std::move(hist));
    }
  }

  void begin_step(const ExplorationResult& res) { step_ = static_cast<std::int64_t>(res.contour.heights.size()); }

  void pool_remove(HalfEdgeId h) {
    const HalfEdgeId idx = pool_pos_[h];
    const HalfEdgeId last = pool_.back();
    pool_[idx] = last;
    pool_pos_[last] = idx;
    pool_.pop_back();
  }

  // Matches half-edge h with a uniform unmatched half-edge; returns the partner's vertex.
  VertexId match(HalfEdgeId h) {
    pool_remove(h);
    std::uniform_int_distribution<std::size_t> pick(0, pool_.size() - 1);
    const HalfEdgeId p = pool_[pick(rng_)];
    pool_remove(p);
    partner_[h] = p;
    partner_[p] = h;
    --remaining_[owner_[h]];
    const VertexId w = owner_[p];
    if (state_[w] == VertexState::sleeping && opts_.record_snapshots)
      trace_.record(step_, remaining_[w], remaining_[w] - 1);
    --remaining_[w];
    return w;
  }

  void leave_sleeping(VertexId v) {
    if (opts_.record_snapshots) trace_.record(step_, remaining_[v], -1);
    const std::int32_t idx = sleeping_pos_[v];
    const VertexId last = sleeping_.back();
    sleeping_[idx] = last;
    sleeping_pos_[last] = idx;
    sleeping_.pop_back();
    state_[v] = VertexState::frontier;
  }

  template <class F>
  void match_all(VertexId x, F&& on_partner) {
    for (HalfEdgeId h = offsets_[x]; h < offsets_[x + 1]; ++h)
      if (partner_[h] < 0) on_partner(match(h));
  }

  // Pushes v with its tree of height m. A root (item_begin < 0) draws its
  // first level by matching; an advance takes the listed children.
  void push(ExplorationResult& res, VertexId v, const Pending& item, std::int32_t child_begin,
            std::int32_t child_end, StepKind kind) {
    state_[v] = VertexState::active;
    res.push_state[v] = step_;
    Entry e{};
    e.vertex = v;
    e.child_mark = static_cast<std::int32_t>(children_.size());
    e.via_mark = static_cast<std::int32_t>(via_.size());
    e.tree_begin = static_cast<std::int32_t>(tree_.size());
    e.path_begin = static_cast<std::int32_t>(path_.size());

    level_.clear();
    if (child_begin < 0) {
      match_all(v, [&](VertexId w) {
        if (state_[w] != VertexState::sleeping) return;
        leave_sleeping(w);
        tree_parent_[w] = v;
        level_.push_back(w);
      });
    } else {
      for (std::int32_t i = child_begin; i < child_end; ++i) {
        const VertexId w = children_[i];
        if (state_[w] != VertexState::sleeping) continue;
        leave_sleeping(w);
        tree_parent_[w] = v;
        level_.push_back(w);
      }
    }
    for (int depth = 1; depth < m_; ++depth) {
      next_.clear();
      for (VertexId x : level_)
        match_all(x, [&](VertexId w) {
          if (state_[w] != VertexState::sleeping) return;
          leave_sleeping(w);
          tree_parent_[w] = x;
          next_.push_back(w);
        });
      tree_.insert(tree_.end(), level_.begin(), level_.end());
      level_.swap(next_);
    }
    e.tree_end = static_cast<std::int32_t>(tree_.size());

    e.pending_begin = static_cast<std::int32_t>(pending_.size());
    for (VertexId y : level_) {
      Pending p{};
      p.vertex = y;
      p.child_begin = static_cast<std::int32_t>(children_.size());
      ++stamp_epoch_;
      match_all(y, [&](VertexId w) {
        if (state_[w] != VertexState::sleeping || stamp_[w] == stamp_epoch_) return;
        stamp_[w] = stamp_epoch_;
        children_.push_back(w);
      });
      p.child_end = static_cast<std::int32_t>(children_.size());
      p.via_begin = static_cast<std::int32_t>(via_.size());
      for (VertexId x = tree_parent_[y]; x != v; x = tree_parent_[x]) via_.push_back(x);
      std::reverse(via_.begin() + p.via_begin, via_.end());
      p.via_end = static_cast<std::int32_t>(via_.size());
      pending_.push_back(p);
    }
    e.pending_end = static_cast<std::int32_t>(pending_.size());
    e.cursor = e.pending_begin;

    if (kind == StepKind::advance) path_.insert(path_.end(), via_.begin() + item.via_begin, via_.begin() + item.via_end);
    path_.push_back(v);
    stack_.push_back(e);
    res.contour.events.push_back(kind);

    if (stack_.size() > best_height_) {
      best_height_ = stack_.size();
      best_.resize(synced_);
      best_.insert(best_.end(), path_.begin() + static_cast<std::ptrdiff_t>(synced_), path_.end());
      synced_ = path_.size();
      res.spine_state = step_;
    }
  }

  void pop() {
    const Entry e = stack_.back();
    stack_.pop_back();
    state_[e.vertex] = VertexState::retired;
    for (std::int32_t i = e.tree_begin; i < e.tree_end; ++i) state_[tree_[i]] = VertexState::retired;
    tree_.resize(e.tree_begin);
    pending_.resize(e.pending_begin);
    children_.resize(e.child_mark);
    via_.resize(e.via_mark);
    path_.resize(e.path_begin);
    synced_ = std::min(synced_, path_.size());
  }

  void check_partition() const {
    const std::size_t n = seq_.size();
    std::vector<int> named(n, 0);
    std::size_t active = 0;
    for (const Entry& e : stack_) {
      if (state_[e.vertex] != VertexState::active) throw NumericalFailure("stack vertex not active");
      ++named[e.vertex];
      ++active;
      for (std::int32_t i = e.cursor; i < e.pending_end; ++i) {
        const VertexId y = pending_[i].vertex;
        if (state_[y] != VertexState::frontier) throw NumericalFailure("pending vertex not frontier");
        ++named[y];
      }
      for (std::int32_t i = e.tree_begin; i < e.tree_end; ++i) {
        if (state_[tree_[i]] != VertexState::frontier) throw NumericalFailure("tree vertex not frontier");
        ++named[tree_[i]];
      }
    }
    if (active != stack_.size()) throw NumericalFailure("stack size mismatch");
    std::size_t sleeping = 0;
    for (std::size_t v = 0; v < n; ++v) {
      std::int32_t unmatched = 0;
      for (HalfEdgeId h = offsets_[v]; h < offsets_[v + 1]; ++h) unmatched += partner_[h] < 0;
      if (unmatched != remaining_[v]) throw NumericalFailure("unmatched count mismatch");
      switch (state_[v]) {
        case VertexState::sleeping:
          ++sleeping;
          if (named[v] != 0 || sleeping_[sleeping_pos_[v]] != static_cast<VertexId>(v))
            throw NumericalFailure("sleeping vertex misplaced");
          break;
        case VertexState::frontier:
        case VertexState::active:
          if (named[v] != 1) throw NumericalFailure("vertex not held exactly once");
          break;
        case VertexState::retired:
          if (named[v] != 0 || unmatched != 0) throw NumericalFailure("retired vertex still held");
          break;
      }
    }
    if (sleeping != sleeping_.size()) throw NumericalFailure("sleeping list size mismatch");
  }

  void finish_snapshots(ExplorationResult& res) const {
    const auto times = ladder_times_with_window(res.contour.heights, ladder_window(res.n_vertices, opts_.delta));
    std::vector<std::int64_t> states;
    states.reserve(times.size());
    for (std::size_t k = 0; k < times.size(); ++k) {
      res.ladder_times.push_back({static_cast<std::int64_t>(k), times[k], res.top[times[k]]});
      states.push_back(k == 0 ? 0 : times[k] - 1);
    }
    res.snapshots = res.sleeping.histograms_at(states);
    for (const auto& hist : res.snapshots) {
      std::int64_t total = 0;
      for (auto c : hist) total += c;
      res.w.push_back(static_cast<std::int64_t>(res.n_vertices) - total);
    }
  }

  const DegreeSequence& seq_;
  int m_;
  ExplorationOptions opts_;
  URBG& rng_;
  std::int64_t step_ = 0;

  std::vector<HalfEdgeId> offsets_;
  std::vector<VertexId> owner_;
  std::vector<HalfEdgeId> partner_;
  std::vector<HalfEdgeId> pool_;
  std::vector<HalfEdgeId> pool_pos_;
  std::vector<std::int32_t> remaining_;
  std::vector<VertexState> state_;
  std::vector<VertexId> sleeping_;
  std::vector<std::int32_t> sleeping_pos_;
  std::vector<VertexId> tree_parent_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t stamp_epoch_ = 0;

  std::vector<Entry> stack_;
  std::vector<Pending> pending_;
  std::vector<VertexId> children_;
  std::vector<VertexId> via_;
  std::vector<VertexId> tree_;
  std::vector<VertexId> level_;
  std::vector<VertexId> next_;

  std::vector<VertexId> path_;
  std::vector<VertexId> best_;
  std::size_t best_height_ = 0;
  std::size_t synced_ = 0;

  SleepingTrace trace_;
};

}  // namespace detail

template <class URBG>
ExplorationResult run_m_induced_dfs(const DegreeSequence& seq, int m, URBG& rng, const ExplorationOptions& opts = {}) {
  if (m < 1) throw DomainViolation("m must be at least 1");
  if (opts.record_snapshots) ladder_window(1, opts.delta);
  return detail::InducedExplorer<URBG>(seq, m, opts, rng).run();
}

template <class URBG>
ExplorationResult run_induced_dfs(const DegreeSequence& seq, URBG& rng, const ExplorationOptions& opts = {}) {
  return run_m_induced_dfs(seq, 1, rng, opts);
}

inline std::vector<VertexId> extract_longest_induced_path(const ExplorationResult& res) {
  if (res.empty()) throw DomainViolation("empty exploration");
  return res.spine;
}

}  // namespace cmholes
