#pragma once

// Test-only helpers: random instance generators and an independent
// brute-force optimum (plain permutation enumeration with its own naive
// left-packing, sharing no code with compact() or exact_solve()).

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "shelfpack/disk.hpp"

namespace shelfpack::testing {

inline Rational R(const char* text) { return parse_rational(text); }

using Rng = std::mt19937_64;

/// Rational in [lo, hi] on a grid of step 1/den.
inline Rational random_rational(Rng& rng, long lo_num, long hi_num, long den) {
  std::uniform_int_distribution<long> dist(lo_num, hi_num);
  return make_rational(dist(rng), den);
}

inline std::vector<Disk<Rational>> random_rational_disks(Rng& rng, std::size_t n, long lo_num,
                                                         long hi_num, long den) {
  std::vector<Disk<Rational>> disks;
  for (std::size_t i = 0; i < n; ++i) {
    disks.emplace_back(DiskId(std::to_string(i)), random_rational(rng, lo_num, hi_num, den));
  }
  return disks;
}

/// Distinct sizes on the grid [lo, hi] / den.
inline std::vector<Disk<Rational>> random_distinct_disks(Rng& rng, std::size_t n, long lo_num,
                                                         long hi_num, long den) {
  std::vector<long> pool(static_cast<std::size_t>(hi_num - lo_num + 1));
  std::iota(pool.begin(), pool.end(), lo_num);
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<Disk<Rational>> disks;
  for (std::size_t i = 0; i < n; ++i) {
    disks.emplace_back(DiskId(std::to_string(i)), make_rational(pool[i], den));
  }
  return disks;
}

inline std::vector<Disk<double>> random_float_disks(Rng& rng, std::size_t n, double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<Disk<double>> disks;
  for (std::size_t i = 0; i < n; ++i) disks.emplace_back(DiskId(std::to_string(i)), dist(rng));
  return disks;
}

/// Span of the tightest left-packed placement for a fixed order, straight
/// from the separation constraints x_i - x_j >= 2 s_i s_j and x_i >= s_i^2.
template <class T>
T naive_order_span(const std::vector<T>& sizes) {
  std::vector<T> x(sizes.size());
  T right(0);
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    x[i] = sizes[i] * sizes[i];
    for (std::size_t j = 0; j < i; ++j) {
      const T need = x[j] + 2 * sizes[j] * sizes[i];
      if (need > x[i]) x[i] = need;
    }
    const T r = x[i] + sizes[i] * sizes[i];
    if (i == 0 || r > right) right = r;
  }
  return right;
}

/// Minimum over all n! orders.
template <class T>
T brute_force_span(const std::vector<Disk<T>>& disks) {
  std::vector<std::size_t> perm(disks.size());
  std::iota(perm.begin(), perm.end(), 0);
  bool first = true;
  T best(0);
  do {
    std::vector<T> sizes;
    for (std::size_t k : perm) sizes.push_back(disks[k].size);
    T s = naive_order_span(sizes);
    if (first || s < best) best = s;
    first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline double rel_diff(double a, double b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace shelfpack::testing
