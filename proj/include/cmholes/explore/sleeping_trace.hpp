#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "cmholes/error.hpp"

namespace cmholes {

// Journal of the sleeping set's degree histogram. A sleeping vertex's degree
// is its number of unmatched half-edges. Replaying the journal up to a state
// gives the histogram N_i and the size |S| at that state.
class SleepingTrace {
 public:
  struct Change {
    std::int64_t state;  // the change happens while producing this state
    std::int32_t from;   // degree before
    std::int32_t to;     // degree after, or -1 when the vertex leaves S
  };

  SleepingTrace() = default;
  explicit SleepingTrace(std::vector<std::int64_t> initial) : initial_(std::move(initial)) {}

  void record(std::int64_t state, std::int32_t from, std::int32_t to) { changes_.push_back({state, from, to}); }

  const std::vector<std::int64_t>& initial() const { return initial_; }
  const std::vector<Change>& changes() const { return changes_; }
  bool empty() const { return initial_.empty(); }

  std::vector<std::int64_t> histogram_at(std::int64_t state) const {
    const std::int64_t s[] = {state};
    return histograms_at(s).front();
  }

  // One replay for many states; `states` must be nondecreasing.
  std::vector<std::vector<std::int64_t>> histograms_at(std::span<const std::int64_t> states) const {
    if (!std::is_sorted(states.begin(), states.end())) throw DomainViolation("snapshot states must be sorted");
    std::vector<std::vector<std::int64_t>> out;
    out.reserve(states.size());
    std::vector<std::int64_t> hist = initial_;
    std::size_t c = 0;
    for (std::int64_t s : states) {
      for (; c < changes_.size() && changes_[c].state <= s; ++c) apply(hist, changes_[c]);
      out.push_back(hist);
    }
    return out;
  }

  std::int64_t size_at(std::int64_t state) const {
    std::int64_t size = std::accumulate(initial_.begin(), initial_.end(), std::int64_t{0});
    for (const auto& ch : changes_) {
      if (ch.state > state) break;
      if (ch.to < 0) --size;
    }
    return size;
  }

  // First state n >= 0 with |S_n| <= bound.
  std::optional<std::int64_t> first_state_at_most(std::int64_t bound) const {
    std::int64_t size = std::accumulate(initial_.begin(), initial_.end(), std::int64_t{0});
    if (size <= bound) return 0;
    for (const auto& ch : changes_) {
      if (ch.to >= 0) continue;
      if (--size <= bound) return ch.state;
    }
    return std::nullopt;
  }

 private:
  static void apply(std::vector<std::int64_t>& hist, const Change& ch) {
    --hist[ch.from];
    if (ch.to >= 0) ++hist[ch.to];
  }

  std::vector<std::int64_t> initial_;
  std::vector<Change> changes_;
};

}  // namespace cmholes
