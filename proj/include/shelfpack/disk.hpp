#pragma once

#include <algorithm>
#include <compare>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "shelfpack/errors.hpp"
#include "shelfpack/scalar.hpp"

namespace shelfpack {

/// Opaque, stable disk identifier. Ordered lexicographically; every
/// deterministic tie-break in the library prefers the smaller id.
class DiskId {
 public:
  DiskId() = default;
  explicit DiskId(std::string value) : value_(std::move(value)) {}

  const std::string& str() const noexcept { return value_; }

  friend auto operator<=>(const DiskId&, const DiskId&) = default;
  friend bool operator==(const DiskId&, const DiskId&) = default;

 private:
  std::string value_;
};

/// A disk of the given size; its radius is size^2.
template <Scalar T>
struct Disk {
  DiskId id;
  T size;

  Disk() = default;
  Disk(DiskId disk_id, T disk_size) : id(std::move(disk_id)), size(std::move(disk_size)) {
    if (!ScalarTraits<T>::valid(size) || !(size > 0)) {
      throw DomainError("disk '" + id.str() + "' must have a positive finite size");
    }
  }

  T radius() const { return size * size; }

  friend bool operator==(const Disk&, const Disk&) = default;
};

template <Scalar T>
struct PlacedDisk {
  Disk<T> disk;
  T footpoint;

  T left_extent() const { return footpoint - disk.radius(); }
  T right_extent() const { return footpoint + disk.radius(); }

  friend bool operator==(const PlacedDisk&, const PlacedDisk&) = default;
};

/// Disks with footpoints, sorted by strictly increasing footpoint. Says
/// nothing about overlap; see verify().
template <Scalar T>
class Placement {
 public:
  Placement() = default;

  explicit Placement(std::vector<PlacedDisk<T>> placed) : placed_(std::move(placed)) {
    std::unordered_set<std::string> seen;
    for (std::size_t i = 0; i < placed_.size(); ++i) {
      if (!ScalarTraits<T>::valid(placed_[i].footpoint)) {
        throw DomainError("non-finite footpoint for disk '" + placed_[i].disk.id.str() + "'");
      }
      if (i > 0 && !(placed_[i - 1].footpoint < placed_[i].footpoint)) {
        throw DomainError("footpoints must be strictly increasing (disk '" +
                          placed_[i].disk.id.str() + "')");
      }
      if (!seen.insert(placed_[i].disk.id.str()).second) {
        throw DomainError("duplicate disk id '" + placed_[i].disk.id.str() + "'");
      }
    }
  }

  /// Sorts `placed` by footpoint before validating.
  static Placement from_unsorted(std::vector<PlacedDisk<T>> placed) {
    std::stable_sort(placed.begin(), placed.end(),
                     [](const auto& a, const auto& b) { return a.footpoint < b.footpoint; });
    return Placement(std::move(placed));
  }

  std::span<const PlacedDisk<T>> disks() const noexcept { return placed_; }
  std::size_t size() const noexcept { return placed_.size(); }
  bool empty() const noexcept { return placed_.empty(); }
  const PlacedDisk<T>& operator[](std::size_t i) const { return placed_[i]; }
  auto begin() const noexcept { return placed_.begin(); }
  auto end() const noexcept { return placed_.end(); }

  /// The footpoint sequence as disks.
  std::vector<Disk<T>> order() const {
    std::vector<Disk<T>> out;
    out.reserve(placed_.size());
    for (const auto& p : placed_) out.push_back(p.disk);
    return out;
  }

  friend bool operator==(const Placement&, const Placement&) = default;

 private:
  std::vector<PlacedDisk<T>> placed_;
};

template <Scalar T>
struct SpanReport {
  T left_wall;
  T right_wall;
  T span;
  DiskId left_disk_id;
  DiskId right_disk_id;
};

/// Space between two consecutive disks and the largest disk size fitting in it.
template <Scalar T>
struct Gap {
  DiskId left_disk_id;
  DiskId right_disk_id;
  T fit_size;
};

/// Convenience: disks with ids "0", "1", ... from plain sizes.
template <Scalar T>
std::vector<Disk<T>> make_disks(std::span<const T> sizes) {
  std::vector<Disk<T>> disks;
  disks.reserve(sizes.size());
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    disks.emplace_back(DiskId(std::to_string(i)), sizes[i]);
  }
  return disks;
}

template <Scalar T>
std::vector<Disk<T>> make_disks(std::initializer_list<T> sizes) {
  return make_disks<T>(std::span<const T>(sizes.begin(), sizes.size()));
}

/// Ordering used for "sorted by decreasing size": larger size first, ties by
/// smaller id.
template <Scalar T>
bool larger_first(const Disk<T>& a, const Disk<T>& b) {
  if (a.size != b.size) return a.size > b.size;
  return a.id < b.id;
}

}  // namespace shelfpack
