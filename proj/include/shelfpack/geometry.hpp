#pragma once

// Tangency geometry on the shelf. All formulas are polynomial in disk sizes
// (size = sqrt(radius)), so every routine here is exact under `Rational`.

#include <algorithm>
#include <optional>
#include <span>
#include <vector>

#include "shelfpack/disk.hpp"

namespace shelfpack {

namespace detail {

template <Scalar T>
void require_positive(const T& v, const char* what) {
  if (!ScalarTraits<T>::valid(v) || !(v > 0)) {
    throw DomainError(std::string(what) + " must be positive");
  }
}

}  // namespace detail

/// Footpoint distance of two touching disks of sizes a and b: 2ab.
template <Scalar T>
T footpoint_distance(const T& a, const T& b) {
  detail::require_positive(a, "size");
  detail::require_positive(b, "size");
  return 2 * a * b;
}

/// Largest disk size fitting between disks a and b whose footpoints are
/// `footpoint_gap` apart. For a touching pair this is ab/(a+b).
template <Scalar T>
T gap_fit_size(const T& a, const T& b, const T& footpoint_gap) {
  detail::require_positive(a, "size");
  detail::require_positive(b, "size");
  if (!ScalarTraits<T>::valid(footpoint_gap) || footpoint_gap < 0) {
    throw DomainError("footpoint gap must be non-negative");
  }
  return footpoint_gap / (2 * (a + b));
}

/// True iff a disk of size z does not fit between a disk of size a and the
/// wall through a's outer extreme, i.e. z > (sqrt(2) - 1) a. Evaluated as
/// (z + a)^2 > 2a^2 to stay rational.
template <Scalar T>
bool wall_fit_exceeds(const T& z, const T& a) {
  detail::require_positive(z, "size");
  detail::require_positive(a, "size");
  const T sum = z + a;
  return sum * sum > 2 * a * a;
}

/// Left-compacts a footpoint order: x_i = max(s_i^2, max_{j<i} x_j + 2 s_j s_i).
/// The componentwise-minimal valid placement for the order, with the left
/// wall at 0, hence span-minimal for that order.
template <Scalar T>
Placement<T> compact(std::span<const Disk<T>> order) {
  if (order.empty()) throw DomainError("compact: empty order");
  T max_size = order.front().size;
  for (const auto& d : order) max_size = std::max(max_size, d.size);

  std::vector<PlacedDisk<T>> placed;
  placed.reserve(order.size());
  for (const auto& disk : order) {
    T best = disk.radius();
    const T reach = 2 * max_size * disk.size;
    // Footpoints decrease going back, so once even the largest disk could
    // not push past `best`, no earlier one can.
    for (auto it = placed.rbegin(); it != placed.rend(); ++it) {
      if (it->footpoint + reach <= best) break;
      T candidate = it->footpoint + 2 * it->disk.size * disk.size;
      if (candidate > best) best = std::move(candidate);
    }
    placed.push_back({disk, std::move(best)});
  }
  return Placement<T>(std::move(placed));
}

template <Scalar T>
Placement<T> compact(const std::vector<Disk<T>>& order) {
  return compact(std::span<const Disk<T>>(order));
}

/// Walls and span of a placement. When several disks reach a wall, the
/// larger disk is reported (then the smallest id).
template <Scalar T>
SpanReport<T> span(const Placement<T>& p) {
  if (p.empty()) throw DomainError("span: empty placement");
  const auto& first = p[0];
  SpanReport<T> r{first.left_extent(), first.right_extent(), T(0), first.disk.id, first.disk.id};
  const PlacedDisk<T>* left_by = &first;
  const PlacedDisk<T>* right_by = &first;
  auto preferred = [](const PlacedDisk<T>& d, const PlacedDisk<T>* current) {
    if (d.disk.size != current->disk.size) return d.disk.size > current->disk.size;
    return d.disk.id < current->disk.id;
  };
  for (const auto& d : p.disks().subspan(1)) {
    T left = d.left_extent();
    if (left < r.left_wall || (left == r.left_wall && preferred(d, left_by))) {
      r.left_wall = std::move(left);
      r.left_disk_id = d.disk.id;
      left_by = &d;
    }
    T right = d.right_extent();
    if (right > r.right_wall || (right == r.right_wall && preferred(d, right_by))) {
      r.right_wall = std::move(right);
      r.right_disk_id = d.disk.id;
      right_by = &d;
    }
  }
  r.span = r.right_wall - r.left_wall;
  return r;
}

template <Scalar T>
struct Violation {
  DiskId left_disk_id;
  DiskId right_disk_id;
  T required;  ///< 2 s_i s_j
  T actual;    ///< footpoint distance
  T deficit;   ///< required - actual
};

template <Scalar T>
struct Verification {
  bool accepted = false;
  std::optional<Violation<T>> violation;
  SpanReport<T> report;
};

namespace detail {

template <Scalar T>
void check_tolerance(const T& tolerance) {
  if (!ScalarTraits<T>::valid(tolerance) || tolerance < 0) {
    throw DomainError("tolerance must be non-negative");
  }
  if constexpr (ScalarTraits<T>::backend == Backend::exact) {
    if (tolerance != 0) throw PreconditionError("exact backend requires tolerance 0");
  }
}

// A pair violates separation when required - actual > tolerance * required.
template <Scalar T>
std::optional<Violation<T>> check_pair(const PlacedDisk<T>& a, const PlacedDisk<T>& b,
                                       const T& tolerance) {
  T required = 2 * a.disk.size * b.disk.size;
  T actual = b.footpoint - a.footpoint;
  T deficit = required - actual;
  if (deficit > tolerance * required) {
    return Violation<T>{a.disk.id, b.disk.id, std::move(required), std::move(actual),
                        std::move(deficit)};
  }
  return std::nullopt;
}

}  // namespace detail

/// Reference verifier: checks every pair. O(n^2).
template <Scalar T>
Verification<T> verify_pairwise(const Placement<T>& p, const T& tolerance) {
  detail::check_tolerance(tolerance);
  Verification<T> result{true, std::nullopt, span(p)};
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (auto v = detail::check_pair(p[i], p[j], tolerance)) {
        result.accepted = false;
        result.violation = std::move(v);
        return result;
      }
    }
  }
  return result;
}

/// Pairwise separation check |x_i - x_j| >= 2 s_i s_j, relative tolerance.
/// Sweeps in footpoint order and stops scanning partners once the footpoint
/// distance exceeds 2 s_i max_size; reports the same first violating pair
/// (in (i, j) lexicographic order) as verify_pairwise.
template <Scalar T>
Verification<T> verify(const Placement<T>& p, const T& tolerance) {
  detail::check_tolerance(tolerance);
  Verification<T> result{true, std::nullopt, span(p)};
  T max_size = p[0].disk.size;
  for (const auto& d : p) max_size = std::max(max_size, d.disk.size);
  for (std::size_t i = 0; i < p.size(); ++i) {
    const T reach = 2 * p[i].disk.size * max_size;
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (p[j].footpoint - p[i].footpoint >= reach) break;
      if (auto v = detail::check_pair(p[i], p[j], tolerance)) {
        result.accepted = false;
        result.violation = std::move(v);
        return result;
      }
    }
  }
  return result;
}

template <Scalar T>
Verification<T> verify(const Placement<T>& p) {
  return verify(p, ScalarTraits<T>::default_tolerance());
}

template <Scalar T>
T min_size(std::span<const Disk<T>> disks) {
  if (disks.empty()) throw DomainError("empty disk set");
  T m = disks.front().size;
  for (const auto& d : disks) m = std::min(m, d.size);
  return m;
}

/// Sum of support-interval lengths, sum_i (4 s_i m - 2 m^2) with m the
/// smallest size. A lower bound on the optimal span.
template <Scalar T>
T support_lower_bound(std::span<const Disk<T>> disks) {
  const T m = min_size(disks);
  T total(0);
  for (const auto& d : disks) total += 4 * d.size * m - 2 * m * m;
  return total;
}

template <Scalar T>
T support_lower_bound(const std::vector<Disk<T>>& disks) {
  return support_lower_bound(std::span<const Disk<T>>(disks));
}

template <Scalar T>
struct Interval {
  T lo;
  T hi;
};

/// Support intervals [x - 2s + 1, x + 2s - 1] in coordinates rescaled so the
/// smallest size is 1 (sizes divided by m, coordinates by m^2). Pairwise
/// disjoint (as open intervals) in every valid placement.
template <Scalar T>
std::vector<Interval<T>> support_intervals(const Placement<T>& p) {
  const auto order = p.order();
  const T m = min_size(std::span<const Disk<T>>(order));
  std::vector<Interval<T>> out;
  out.reserve(p.size());
  for (const auto& d : p) {
    T x = d.footpoint / (m * m);
    T s = d.disk.size / m;
    out.push_back({x - 2 * s + 1, x + 2 * s - 1});
  }
  return out;
}

}  // namespace shelfpack
