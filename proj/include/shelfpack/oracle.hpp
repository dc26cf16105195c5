#pragma once

// Brute-force optimum over footpoint orders. Exact because compact() is
// span-minimal for each fixed order, so the optimum is the best compacted order.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "shelfpack/greedy.hpp"

namespace shelfpack {

struct OracleConfig {
  std::size_t max_n = 10;
  bool prune = true;
  /// Workers sharding the first-disk choice. Results do not depend on it.
  unsigned threads = 1;
};

template <Scalar T>
struct OracleResult {
  Placement<T> placement;
  SpanReport<T> report;
  std::uint64_t nodes = 0;  ///< search nodes expanded
};

namespace detail {

template <Scalar T>
class OrderSearch {
 public:
  OrderSearch(std::vector<Disk<T>> sorted, bool prune, const T& incumbent)
      : disks_(std::move(sorted)), prune_(prune), shared_(incumbent) {}

  struct ShardResult {
    std::optional<T> span;
    std::vector<std::size_t> order;
    std::uint64_t nodes = 0;
  };

  // Explores all orders starting with disks_[first]. Prunes against the
  // shard-local incumbent with >= and against the shared incumbent with >, so
  // the shard's answer (first optimal order in its DFS) is independent of how
  // other shards progress.
  ShardResult run_shard(std::size_t first, const T& start) const {
    Shard s{*this, start};
    s.used.assign(disks_.size(), false);
    s.x.resize(disks_.size());
    s.order.resize(disks_.size());
    s.extend(0, first, T(0));
    return {std::move(s.best_span), std::move(s.best_order), s.nodes};
  }

  std::size_t size() const { return disks_.size(); }

  // True when disks_[k] duplicates an earlier equal-size disk that is still
  // unused, so that choice was already explored.
  bool duplicate(std::size_t k, const std::vector<bool>& used) const {
    return k > 0 && disks_[k].size == disks_[k - 1].size && !used[k - 1];
  }

  const std::vector<Disk<T>>& disks() const { return disks_; }

 private:
  struct Shard {
    const OrderSearch& search;
    T local;
    std::vector<bool> used;
    std::vector<T> x;
    std::vector<std::size_t> order;
    std::optional<T> best_span;
    std::vector<std::size_t> best_order;
    std::uint64_t nodes = 0;

    Shard(const OrderSearch& s, const T& start) : search(s), local(start) {}

    void extend(std::size_t depth, std::size_t k, const T& partial) {
      ++nodes;
      const auto& disks = search.disks_;
      const T& s = disks[k].size;
      T xk = s * s;
      for (std::size_t j = 0; j < depth; ++j) {
        T c = x[j] + 2 * disks[order[j]].size * s;
        if (c > xk) xk = std::move(c);
      }
      T reach = xk + s * s;
      T span_so_far = reach > partial ? std::move(reach) : partial;
      if (search.prune_ && (span_so_far >= local || search.exceeds_shared(span_so_far))) return;

      x[depth] = std::move(xk);
      order[depth] = k;
      used[k] = true;
      if (depth + 1 == disks.size()) {
        if (span_so_far < local) {
          local = span_so_far;
          best_span = span_so_far;
          best_order = order;
          search.offer(span_so_far);
        }
      } else {
        for (std::size_t next = 0; next < disks.size(); ++next) {
          if (used[next] || search.duplicate(next, used)) continue;
          extend(depth + 1, next, span_so_far);
        }
      }
      used[k] = false;
    }
  };

  bool exceeds_shared(const T& v) const {
    std::lock_guard lock(mutex_);
    return v > shared_;
  }

  void offer(const T& v) const {
    std::lock_guard lock(mutex_);
    if (v < shared_) shared_ = v;
  }

  std::vector<Disk<T>> disks_;
  bool prune_;
  mutable std::mutex mutex_;
  mutable T shared_;
};

}  // namespace detail

/// Minimum-span placement over all footpoint orders, with branch and bound
/// seeded by the compacted greedy order. Equal-size disks are interchangeable
/// and explored once. Throws PreconditionError above config.max_n disks.
template <Scalar T>
OracleResult<T> exact_solve(std::span<const Disk<T>> disks, const OracleConfig& config = {}) {
  if (config.max_n < 1) throw DomainError("OracleConfig.max_n must be at least 1");
  if (disks.empty()) throw DomainError("exact_solve: empty disk set");
  if (disks.size() > config.max_n) {
    throw PreconditionError("exact oracle refuses " + std::to_string(disks.size()) +
                            " disks (limit " + std::to_string(config.max_n) + ")");
  }

  // Incumbent: greedy's footpoint order, compacted.
  Placement<T> best = compact(greedy_solve(disks).placement.order());
  T best_span = span(best).span;

  std::vector<Disk<T>> sorted(disks.begin(), disks.end());
  std::sort(sorted.begin(), sorted.end(), [](const Disk<T>& a, const Disk<T>& b) {
    if (a.size != b.size) return a.size < b.size;
    return a.id < b.id;
  });
  const detail::OrderSearch<T> search(sorted, config.prune, best_span);

  std::vector<std::size_t> firsts;
  const std::vector<bool> none(sorted.size(), false);
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    if (!search.duplicate(k, none)) firsts.push_back(k);
  }

  using Shard = typename detail::OrderSearch<T>::ShardResult;
  std::vector<Shard> shards(firsts.size());
  const unsigned workers = std::max(1u, std::min<unsigned>(config.threads,
                                                           static_cast<unsigned>(firsts.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < firsts.size(); ++i) shards[i] = search.run_shard(firsts[i], best_span);
  } else {
    std::atomic<std::size_t> cursor{0};
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = cursor++; i < firsts.size(); i = cursor++) {
          shards[i] = search.run_shard(firsts[i], best_span);
        }
      });
    }
  }

  OracleResult<T> result;
  const Shard* winner = nullptr;
  for (const auto& s : shards) {
    result.nodes += s.nodes;
    if (s.span && *s.span < best_span) {
      best_span = *s.span;
      winner = &s;
    }
  }
  if (winner) {
    std::vector<Disk<T>> order;
    order.reserve(sorted.size());
    for (std::size_t k : winner->order) order.push_back(sorted[k]);
    best = compact(order);
  }
  result.report = span(best);
  result.placement = std::move(best);
  return result;
}

template <Scalar T>
OracleResult<T> exact_solve(const std::vector<Disk<T>>& disks, const OracleConfig& config = {}) {
  return exact_solve(std::span<const Disk<T>>(disks), config);
}

}  // namespace shelfpack
