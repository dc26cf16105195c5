#pragma once

// Exact solver for linear-case instances: no disk can hide in a gap between
// two others or between a disk and a wall, so every compacted order is a
// touching chain and the optimum depends only on the relative order of sizes.

#include <algorithm>
#include <deque>
#include <optional>
#include <span>
#include <vector>

#include "shelfpack/geometry.hpp"

namespace shelfpack {

template <Scalar T>
using LinearOrder = std::vector<Disk<T>>;

/// With a, b the two largest sizes and z the smallest: 1/z < 1/a + 1/b and
/// z > (sqrt(2) - 1) a, both strict.
template <Scalar T>
bool is_linear_case(std::span<const Disk<T>> disks) {
  if (disks.size() < 2) throw DomainError("is_linear_case needs at least 2 disks");
  std::vector<T> sizes;
  sizes.reserve(disks.size());
  for (const auto& d : disks) sizes.push_back(d.size);
  std::partial_sort(sizes.begin(), sizes.begin() + 2, sizes.end(), std::greater<>());
  const T& a = sizes[0];
  const T& b = sizes[1];
  const T z = *std::min_element(sizes.begin(), sizes.end());
  // 1/z < 1/a + 1/b  <=>  ab < z(a + b) for positive sizes.
  return a * b < z * (a + b) && wall_fit_exceeds(z, a);
}

template <Scalar T>
bool is_linear_case(const std::vector<Disk<T>>& disks) {
  return is_linear_case(std::span<const Disk<T>>(disks));
}

namespace detail {

// Interleaves disks sorted by decreasing size (even count): the k largest and
// k smallest form a contiguous block ending in S_k and D_k; D_{k+1} is
// attached next to S_k and S_{k+1} next to D_k.
template <Scalar T>
std::deque<Disk<T>> interleave_even(const std::vector<Disk<T>>& by_size) {
  const std::size_t n = by_size.size();
  std::deque<Disk<T>> out;
  if (n == 0) return out;
  auto large = [&](std::size_t k) -> const Disk<T>& { return by_size[k - 1]; };
  auto small = [&](std::size_t k) -> const Disk<T>& { return by_size[n - k]; };

  out.push_back(large(1));
  out.push_back(small(1));
  // small_on_right tracks which end S_k currently terminates.
  bool small_on_right = true;
  for (std::size_t k = 2; k <= n / 2; ++k) {
    if (small_on_right) {
      out.push_back(large(k));
      out.push_front(small(k));
    } else {
      out.push_front(large(k));
      out.push_back(small(k));
    }
    small_on_right = !small_on_right;
  }
  return out;
}

}  // namespace detail

/// Optimal footpoint order for a linear-case instance. For even n this is
/// ..., D5, D_{n-3}, D3, D_{n-1}, D1, Dn, D2, D_{n-2}, D4, ... (sizes
/// decreasing, ties by id). For odd n the median is tried at both ends and
/// the smaller span wins (right on a tie). Linear-case is checked for n >= 2.
template <Scalar T>
LinearOrder<T> optimal_linear_order(std::span<const Disk<T>> disks) {
  if (disks.empty()) throw DomainError("optimal_linear_order: empty disk set");
  if (disks.size() >= 2 && !is_linear_case(disks)) {
    throw PreconditionError("instance is not a linear case");
  }
  std::vector<Disk<T>> by_size(disks.begin(), disks.end());
  std::sort(by_size.begin(), by_size.end(), larger_first<T>);
  if (by_size.size() % 2 == 0) {
    auto order = detail::interleave_even(by_size);
    return LinearOrder<T>(order.begin(), order.end());
  }

  const std::size_t median_index = by_size.size() / 2;
  Disk<T> median = by_size[median_index];
  by_size.erase(by_size.begin() + static_cast<std::ptrdiff_t>(median_index));
  auto core = detail::interleave_even(by_size);

  LinearOrder<T> left;
  left.reserve(core.size() + 1);
  left.push_back(median);
  left.insert(left.end(), core.begin(), core.end());

  LinearOrder<T> right(core.begin(), core.end());
  right.push_back(median);

  if (span(compact(left)).span < span(compact(right)).span) return left;
  return right;
}

template <Scalar T>
LinearOrder<T> optimal_linear_order(const std::vector<Disk<T>>& disks) {
  return optimal_linear_order(std::span<const Disk<T>>(disks));
}

template <Scalar T>
struct LinearSolution {
  Placement<T> placement;
  SpanReport<T> report;
};

template <Scalar T>
LinearSolution<T> solve_linear(std::span<const Disk<T>> disks) {
  auto placement = compact(optimal_linear_order(disks));
  auto report = span(placement);
  return {std::move(placement), std::move(report)};
}

template <Scalar T>
LinearSolution<T> solve_linear(const std::vector<Disk<T>>& disks) {
  return solve_linear(std::span<const Disk<T>>(disks));
}

enum class ReversalCase { c1, c2, c3, c4 };

template <Scalar T>
struct Reversal {
  ReversalCase which;
  T delta;  ///< predicted span change, always negative
  LinearOrder<T> order;
};

/// Improvement move on an order: A = order[i], B its successor, Z = order[j].
/// If Z is last and a > b > z (C1) or a < b < z (C2), reversing B..Z changes
/// the span by (b + z - 2a)(b - z). Otherwise with Y after Z, a > y and b > z
/// (C3) or a < y and b < z (C4) give 2(a - y)(z - b). The prediction equals
/// the real change when the instance is a linear case (touching chains).
template <Scalar T>
std::optional<Reversal<T>> reversal_improvement(std::span<const Disk<T>> order, std::size_t i,
                                                std::size_t j) {
  if (!(i < j) || j >= order.size()) {
    throw DomainError("reversal_improvement: need i < j < n");
  }
  const T& a = order[i].size;
  const T& b = order[i + 1].size;
  const T& z = order[j].size;

  std::optional<ReversalCase> which;
  T delta(0);
  if (j + 1 == order.size()) {
    if (a > b && b > z) which = ReversalCase::c1;
    else if (a < b && b < z) which = ReversalCase::c2;
    if (which) delta = (b + z - 2 * a) * (b - z);
  } else {
    const T& y = order[j + 1].size;
    if (a > y && b > z) which = ReversalCase::c3;
    else if (a < y && b < z) which = ReversalCase::c4;
    if (which) delta = 2 * (a - y) * (z - b);
  }
  if (!which) return std::nullopt;

  LinearOrder<T> reversed(order.begin(), order.end());
  std::reverse(reversed.begin() + static_cast<std::ptrdiff_t>(i + 1),
               reversed.begin() + static_cast<std::ptrdiff_t>(j + 1));
  return Reversal<T>{*which, std::move(delta), std::move(reversed)};
}

template <Scalar T>
std::optional<Reversal<T>> reversal_improvement(const std::vector<Disk<T>>& order,
                                                std::size_t i, std::size_t j) {
  return reversal_improvement(std::span<const Disk<T>>(order), i, j);
}

}  // namespace shelfpack
