#pragma once

// Greedy 4/3-approximation. Disks are taken in decreasing size; each one goes
// into the widest gap between consecutive disks if it fits there, else onto
// whichever end does not grow the span, else next to the larger end disk.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <span>
#include <vector>

#include "shelfpack/geometry.hpp"

namespace shelfpack {

template <Scalar T>
struct Certificate {
  T span;
  T lower_bound;
  T ratio;  ///< span / lower_bound
};

/// Best support bound over the prefixes of the disks in decreasing size
/// order: max_k sum_{i<=k} (4 s_i s_k - 2 s_k^2). Every prefix bound is a
/// lower bound for the whole set, and the prefix ending at the last disk that
/// widened a greedy placement is the one the 4/3 guarantee is measured on.
template <Scalar T>
T prefix_support_bound(std::span<const Disk<T>> disks) {
  if (disks.empty()) throw DomainError("empty disk set");
  std::vector<T> sizes;
  sizes.reserve(disks.size());
  for (const auto& d : disks) sizes.push_back(d.size);
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  T sum(0);
  T best(0);
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    const T& m = sizes[k];
    sum += sizes[k];
    T bound = 4 * m * sum - 2 * T(static_cast<long long>(k + 1)) * m * m;
    if (k == 0 || bound > best) best = std::move(bound);
  }
  return best;
}

/// Certificate for a verified placement of `disks`, measured against
/// prefix_support_bound. Throws PreconditionError if the placement does not
/// verify at the backend's default tolerance.
template <Scalar T>
Certificate<T> approximation_certificate(const Placement<T>& p, std::span<const Disk<T>> disks) {
  auto check = verify(p);
  if (!check.accepted) {
    throw PreconditionError("approximation_certificate: placement does not verify");
  }
  T lb = prefix_support_bound(disks);
  T ratio = check.report.span / lb;
  return {std::move(check.report.span), std::move(lb), std::move(ratio)};
}

template <Scalar T>
Certificate<T> approximation_certificate(const Placement<T>& p, const std::vector<Disk<T>>& disks) {
  return approximation_certificate(p, std::span<const Disk<T>>(disks));
}

/// Which rule placed a disk.
enum class GreedyRule : std::uint8_t { first, gap, end_free, end_forced };

struct GreedyStats {
  std::size_t gap_pushes = 0;
  std::size_t gap_pops = 0;
  std::size_t gap_placements = 0;
  std::size_t free_end_placements = 0;
  std::size_t forced_end_placements = 0;

  std::size_t queue_operations() const { return gap_pushes + gap_pops; }
};

template <Scalar T>
struct GreedyResult {
  Placement<T> placement;
  SpanReport<T> report;
  Certificate<T> certificate;
  GreedyStats stats;
  std::vector<GreedyRule> rules;  ///< indexed like placement
};

namespace detail {

inline constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

template <Scalar T>
class GreedyBuilder {
 public:
  explicit GreedyBuilder(std::span<const Disk<T>> disks) : disks_(disks.begin(), disks.end()) {
    std::sort(disks_.begin(), disks_.end(), larger_first<T>);
    // Rank of each disk id, for tie-breaking gaps by smallest left id.
    std::vector<std::size_t> by_id(disks_.size());
    std::iota(by_id.begin(), by_id.end(), 0);
    std::sort(by_id.begin(), by_id.end(),
              [&](std::size_t a, std::size_t b) { return disks_[a].id < disks_[b].id; });
    id_rank_.resize(disks_.size());
    for (std::size_t r = 0; r < by_id.size(); ++r) id_rank_[by_id[r]] = r;

    x_.resize(disks_.size());
    prev_.assign(disks_.size(), kNone);
    next_.assign(disks_.size(), kNone);
    rule_.resize(disks_.size());
  }

  void run() {
    for (std::size_t k = 0; k < disks_.size(); ++k) place(k);
  }

  GreedyResult<T> result() const {
    std::vector<PlacedDisk<T>> placed;
    std::vector<GreedyRule> rules;
    placed.reserve(disks_.size());
    rules.reserve(disks_.size());
    for (std::size_t v = leftmost_; v != kNone; v = next_[v]) {
      placed.push_back({disks_[v], x_[v]});
      rules.push_back(rule_[v]);
    }
    Placement<T> placement(std::move(placed));
    SpanReport<T> report = span(placement);
    T lb = prefix_support_bound(std::span<const Disk<T>>(disks_));
    Certificate<T> cert{report.span, lb, report.span / lb};
    return {std::move(placement), std::move(report), std::move(cert), stats_, std::move(rules)};
  }

 private:
  struct GapEntry {
    T fit;
    std::size_t left;
    std::size_t right;
    std::size_t left_rank;
  };

  struct GapLess {
    // priority_queue pops the "largest": max fit, then smallest left id.
    bool operator()(const GapEntry& a, const GapEntry& b) const {
      if (a.fit != b.fit) return a.fit < b.fit;
      return a.left_rank > b.left_rank;
    }
  };

  const T& size(std::size_t v) const { return disks_[v].size; }

  void push_gap(std::size_t left, std::size_t right) {
    T fit = gap_fit_size(size(left), size(right), T(x_[right] - x_[left]));
    gaps_.push({std::move(fit), left, right, id_rank_[left]});
    ++stats_.gap_pushes;
  }

  void link(std::size_t left, std::size_t right) {
    next_[left] = right;
    prev_[right] = left;
  }

  void update_walls(std::size_t v) {
    T lo = x_[v] - size(v) * size(v);
    T hi = x_[v] + size(v) * size(v);
    if (lo < left_wall_) left_wall_ = std::move(lo);
    if (hi > right_wall_) right_wall_ = std::move(hi);
  }

  void place(std::size_t v) {
    const T& d = size(v);
    if (v == 0) {
      x_[v] = d * d;
      left_wall_ = T(0);
      right_wall_ = 2 * d * d;
      leftmost_ = rightmost_ = v;
      rule_[v] = GreedyRule::first;
      return;
    }

    // Rule 1: the widest gap, if the disk fits (tangent placement allowed).
    if (!gaps_.empty() && gaps_.top().fit >= d) {
      GapEntry g = gaps_.top();
      gaps_.pop();
      ++stats_.gap_pops;
      const std::size_t a = g.left;
      const std::size_t b = g.right;
      // Touch the smaller of the two; equal sizes touch the left one.
      if (size(b) < size(a)) {
        x_[v] = x_[b] - 2 * size(b) * d;
      } else {
        x_[v] = x_[a] + 2 * size(a) * d;
      }
      link(a, v);
      link(v, b);
      push_gap(a, v);
      push_gap(v, b);
      rule_[v] = GreedyRule::gap;
      ++stats_.gap_placements;
      return;
    }

    // Rules 2-4: candidates touching the leftmost / rightmost footpoint disk.
    const std::size_t a = leftmost_;
    const std::size_t z = rightmost_;
    T at_left = x_[a] - 2 * size(a) * d;
    T at_right = x_[z] + 2 * size(z) * d;
    const bool left_free = at_left - d * d >= left_wall_;
    const bool right_free = at_right + d * d <= right_wall_;

    bool go_left;
    if (left_free || right_free) {
      go_left = left_free;
      rule_[v] = GreedyRule::end_free;
      ++stats_.free_end_placements;
    } else {
      go_left = size(a) > size(z);
      rule_[v] = GreedyRule::end_forced;
      ++stats_.forced_end_placements;
    }

    if (go_left) {
      x_[v] = std::move(at_left);
      link(v, a);
      leftmost_ = v;
      push_gap(v, a);
    } else {
      x_[v] = std::move(at_right);
      link(z, v);
      rightmost_ = v;
      push_gap(z, v);
    }
    update_walls(v);
  }

  std::vector<Disk<T>> disks_;
  std::vector<std::size_t> id_rank_;
  std::vector<T> x_;
  std::vector<std::size_t> prev_;
  std::vector<std::size_t> next_;
  std::vector<GreedyRule> rule_;
  std::priority_queue<GapEntry, std::vector<GapEntry>, GapLess> gaps_;
  std::size_t leftmost_ = kNone;
  std::size_t rightmost_ = kNone;
  T left_wall_{0};
  T right_wall_{0};
  GreedyStats stats_;
};

}  // namespace detail

/// Greedy placement with its approximation certificate against the support
/// lower bound. O(n log n).
template <Scalar T>
GreedyResult<T> greedy_solve(std::span<const Disk<T>> disks) {
  if (disks.empty()) throw DomainError("greedy_solve: empty disk set");
  detail::GreedyBuilder<T> builder(disks);
  builder.run();
  return builder.result();
}

template <Scalar T>
GreedyResult<T> greedy_solve(const std::vector<Disk<T>>& disks) {
  return greedy_solve(std::span<const Disk<T>>(disks));
}

}  // namespace shelfpack
