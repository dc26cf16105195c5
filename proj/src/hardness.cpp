#include "shelfpack/hardness.hpp"

#include <algorithm>
#include <numeric>

#include "shelfpack/geometry.hpp"

namespace shelfpack::hardness {
namespace {

FamilySizes derive_sizes() {
  FamilySizes f;
  f.outer = Size(1);
  f.inner = make_rational(33, 100);
  f.large = f.inner / (1 + f.inner);
  f.small = f.large / (1 + f.large);
  f.end = (1 - f.inner * f.inner - 2 * f.inner) / (4 * f.inner);
  f.minimal = make_rational(17, 99) * make_rational(399, 400);
  return f;
}

std::string disk_name(Role role, std::size_t index) {
  switch (role) {
    case Role::outer_frame: return "outer:" + std::to_string(index);
    case Role::inner_frame: return "inner:" + std::to_string(index);
    case Role::large_filler: return "large:" + std::to_string(index);
    case Role::small_filler: return "small:" + std::to_string(index);
    case Role::end: return "end:" + std::to_string(index);
    case Role::partition: return "part:" + std::to_string(index);
  }
  return {};
}

ValidationResult fail(std::string message, std::optional<std::size_t> index = std::nullopt) {
  return {false, std::move(message), index};
}

// Checks that `sol` uses every element index exactly once, in m triples.
ValidationResult check_indices(const ThreePartitionInstance& inst, const PartitionSolution& sol) {
  if (sol.groups.size() != inst.m()) {
    return fail("expected " + std::to_string(inst.m()) + " groups, got " +
                std::to_string(sol.groups.size()));
  }
  std::vector<bool> seen(inst.elements.size(), false);
  for (const auto& g : sol.groups) {
    for (std::size_t i : g) {
      if (i >= inst.elements.size()) return fail("element index out of range", i);
      if (seen[i]) return fail("element used twice", i);
      seen[i] = true;
    }
  }
  return {};
}

}  // namespace

const FamilySizes& family_sizes() {
  static const FamilySizes sizes = derive_sizes();
  return sizes;
}

const Size& triple_capacity() {
  static const Size cap = Size(2) / (4 * family_sizes().inner) - 1;
  return cap;
}

const char* to_string(Role role) {
  switch (role) {
    case Role::outer_frame: return "outer_frame";
    case Role::inner_frame: return "inner_frame";
    case Role::large_filler: return "large_filler";
    case Role::small_filler: return "small_filler";
    case Role::end: return "end";
    case Role::partition: return "partition";
  }
  return "?";
}

std::optional<Role> role_from_string(std::string_view text) {
  for (Role r : {Role::outer_frame, Role::inner_frame, Role::large_filler, Role::small_filler,
                 Role::end, Role::partition}) {
    if (text == to_string(r)) return r;
  }
  return std::nullopt;
}

ValidationResult validate_3partition(const ThreePartitionInstance& inst) {
  const auto& a = inst.elements;
  if (a.empty() || a.size() % 3 != 0) {
    return fail("element count must be a positive multiple of 3 (got " + std::to_string(a.size()) +
                ")");
  }
  if (inst.bound <= 0) return fail("B must be positive");
  __int128 sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] <= 0) return fail("a_i must be positive", i);
    if (!(4 * static_cast<__int128>(a[i]) > inst.bound)) return fail("a_i > B/4 violated", i);
    if (!(2 * static_cast<__int128>(a[i]) < inst.bound)) return fail("a_i < B/2 violated", i);
    sum += a[i];
  }
  if (sum != static_cast<__int128>(inst.m()) * inst.bound) {
    return fail("sum of elements must equal m*B");
  }
  return {};
}

Size partition_size(std::int64_t element, std::int64_t bound) {
  return make_rational(17, 99) *
         (make_rational(3, 100) * make_rational(element, bound) + make_rational(99, 100));
}

std::size_t HardnessInstance::partition_disk(std::size_t element) const {
  // Partition disks come last, in element order.
  return disks.size() - source.elements.size() + element;
}

std::optional<std::size_t> HardnessInstance::find(const DiskId& id) const {
  for (std::size_t i = 0; i < disks.size(); ++i) {
    if (disks[i].id == id) return i;
  }
  return std::nullopt;
}

HardnessInstance build_instance(const ThreePartitionInstance& inst) {
  if (auto v = validate_3partition(inst); !v) {
    throw PreconditionError("invalid 3-partition instance: " + v.message);
  }
  const auto& f = family_sizes();
  const std::size_t m = inst.m();

  HardnessInstance hi;
  hi.source = inst;
  hi.budget = Size(2 * static_cast<long long>(m + 1));
  auto add = [&](Role role, std::size_t count, const Size& size) {
    for (std::size_t i = 0; i < count; ++i) {
      hi.disks.emplace_back(DiskId(disk_name(role, i)), size);
      hi.roles.push_back({role, i});
    }
  };
  add(Role::outer_frame, m + 1, f.outer);
  add(Role::inner_frame, 4 * (m + 1), f.inner);
  add(Role::large_filler, 2 * (m + 1), f.large);
  add(Role::small_filler, 2 * (m + 1), f.small);
  add(Role::end, 2, f.end);
  for (std::size_t i = 0; i < inst.elements.size(); ++i) {
    hi.disks.emplace_back(DiskId(disk_name(Role::partition, i)),
                          partition_size(inst.elements[i], inst.bound));
    hi.roles.push_back({Role::partition, i});
  }
  return hi;
}

ValidationResult validate_solution(const ThreePartitionInstance& inst,
                                   const PartitionSolution& sol) {
  if (auto v = check_indices(inst, sol); !v) return v;
  for (std::size_t g = 0; g < sol.groups.size(); ++g) {
    std::int64_t sum = 0;
    for (std::size_t i : sol.groups[g]) sum += inst.elements[i];
    if (sum != inst.bound) {
      return fail("group " + std::to_string(g + 1) + " sums to " + std::to_string(sum) +
                  ", expected " + std::to_string(inst.bound));
    }
  }
  return {};
}

Placement<Size> layout_certificate(const HardnessInstance& hi, const PartitionSolution& sol) {
  if (auto v = check_indices(hi.source, sol); !v) {
    throw PreconditionError("invalid grouping: " + v.message);
  }
  const auto& f = family_sizes();
  for (std::size_t g = 0; g < sol.groups.size(); ++g) {
    Size total(0);
    for (std::size_t i : sol.groups[g]) total += hi.disks[hi.partition_disk(i)].size;
    if (total > triple_capacity()) {
      throw PreconditionError("group " + std::to_string(g + 1) +
                              " does not fit between the inner frame disks");
    }
  }

  std::vector<PlacedDisk<Size>> placed;
  placed.reserve(hi.disks.size());
  std::size_t next_inner = 0, next_large = 0, next_small = 0, next_outer = 0, next_end = 0;
  // build_instance lays the roles out in blocks: outer, inner, large, small, end.
  const std::size_t block = hi.m() + 1;
  auto first_of = [&](Role role) -> std::size_t {
    switch (role) {
      case Role::outer_frame: return 0;
      case Role::inner_frame: return block;
      case Role::large_filler: return 5 * block;
      case Role::small_filler: return 7 * block;
      case Role::end: return 9 * block;
      case Role::partition: break;
    }
    return hi.partition_disk(0);
  };
  auto put = [&](Role role, std::size_t& counter, Size x) {
    placed.push_back({hi.disks[first_of(role) + counter++], std::move(x)});
  };
  auto put_partition = [&](std::size_t element, Size x) {
    placed.push_back({hi.disks[hi.partition_disk(element)], std::move(x)});
  };

  const Size& s0 = f.inner;
  const std::size_t m = hi.m();

  // Left end: wall, inner, end, inner, large, small, then the first outer disk at 1.
  put(Role::inner_frame, next_inner, s0 * s0);
  put(Role::end, next_end, s0 * s0 + 2 * s0 * f.end);
  put(Role::inner_frame, next_inner, s0 * s0 + 4 * s0 * f.end);
  put(Role::large_filler, next_large, 1 - 2 * f.large);
  put(Role::small_filler, next_small, 1 - 2 * f.small);

  for (std::size_t k = 0; k <= m; ++k) {
    const Size left(static_cast<long long>(2 * k + 1));
    put(Role::outer_frame, next_outer, left);
    if (k == m) break;

    put(Role::small_filler, next_small, left + 2 * f.small);
    put(Role::large_filler, next_large, left + 2 * f.large);
    Size x = left + 2 * s0;
    put(Role::inner_frame, next_inner, x);
    for (std::size_t slot = 0; slot < 3; ++slot) {
      const std::size_t element = sol.groups[k][slot];
      const Size& d = hi.disks[hi.partition_disk(element)].size;
      x += 2 * s0 * d;
      put_partition(element, x);
      if (slot < 2) {
        x += 2 * s0 * d;
        put(Role::inner_frame, next_inner, x);
      }
    }
    const Size right = left + 2;
    put(Role::inner_frame, next_inner, right - 2 * s0);
    put(Role::large_filler, next_large, right - 2 * f.large);
    put(Role::small_filler, next_small, right - 2 * f.small);
  }

  // Right end, mirrored.
  const Size last(static_cast<long long>(2 * m + 1));
  put(Role::small_filler, next_small, last + 2 * f.small);
  put(Role::large_filler, next_large, last + 2 * f.large);
  put(Role::inner_frame, next_inner, last + 2 * s0);
  put(Role::end, next_end, last + 2 * s0 + 2 * s0 * f.end);
  put(Role::inner_frame, next_inner, last + 2 * s0 + 4 * s0 * f.end);

  return Placement<Size>(std::move(placed));
}

Placement<Size> build_certificate(const HardnessInstance& hi, const PartitionSolution& sol) {
  if (auto v = validate_solution(hi.source, sol); !v) {
    throw PreconditionError("not a 3-partition: " + v.message);
  }
  return layout_certificate(hi, sol);
}

PartitionSolution decode_partition(const HardnessInstance& hi, const Placement<Size>& p) {
  const auto check = verify(p, Size(0));
  if (!check.accepted) throw PreconditionError("decode_partition: placement does not verify");
  if (check.report.span > hi.budget) {
    throw PreconditionError("decode_partition: span " + check.report.span.str() +
                            " exceeds the budget " + hi.budget.str());
  }
  if (p.size() != hi.disks.size()) {
    throw PreconditionError("decode_partition: placement has " + std::to_string(p.size()) +
                            " disks, instance has " + std::to_string(hi.disks.size()));
  }
  std::vector<std::size_t> index_of(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    auto k = hi.find(p[i].disk.id);
    if (!k || hi.disks[*k].size != p[i].disk.size) {
      throw PreconditionError("decode_partition: disk '" + p[i].disk.id.str() +
                              "' is not part of the instance");
    }
    index_of[i] = *k;
  }

  const std::size_t m = hi.m();
  std::vector<Size> outer;
  for (const auto& d : p) {
    if (d.disk.size == 1) outer.push_back(d.footpoint);
  }
  if (outer.size() != m + 1) {
    throw InconsistencyError("expected " + std::to_string(m + 1) + " outer frame disks");
  }

  // bins[0] is the left end, bins[m + 1] the right end, bins[k] gap k - 1.
  std::vector<std::vector<std::size_t>> bins(m + 2);
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Role role = hi.roles[index_of[i]].role;
    if (role != Role::end && role != Role::partition) continue;
    const auto k = static_cast<std::size_t>(
        std::upper_bound(outer.begin(), outer.end(), p[i].footpoint) - outer.begin());
    bins[k].push_back(index_of[i]);
  }
  for (std::size_t k = 0; k < bins.size(); ++k) {
    const bool is_end = k == 0 || k == m + 1;
    const std::size_t expected = is_end ? 1 : 3;
    if (bins[k].size() != expected) {
      throw InconsistencyError(
          (is_end ? std::string(k == 0 ? "left end" : "right end")
                  : "gap " + std::to_string(k)) +
          " holds " + std::to_string(bins[k].size()) + " end/partition disks, expected " +
          std::to_string(expected));
    }
  }

  // An end region may hold a partition disk while an end disk sits in a gap;
  // exchanging them keeps every gap feasible (end disks are the largest).
  std::vector<std::size_t> stray_partitions;
  for (std::size_t k : {std::size_t{0}, m + 1}) {
    if (hi.roles[bins[k][0]].role == Role::partition) stray_partitions.push_back(bins[k][0]);
  }
  for (std::size_t k = 1; k <= m; ++k) {
    for (auto& disk : bins[k]) {
      if (hi.roles[disk].role == Role::end) {
        if (stray_partitions.empty()) throw InconsistencyError("end disk in gap without swap partner");
        disk = stray_partitions.back();
        stray_partitions.pop_back();
      }
    }
  }

  PartitionSolution sol;
  for (std::size_t k = 1; k <= m; ++k) {
    std::array<std::size_t, 3> group{};
    std::int64_t sum = 0;
    for (std::size_t slot = 0; slot < 3; ++slot) {
      group[slot] = hi.roles[bins[k][slot]].index;
      sum += hi.source.elements[group[slot]];
    }
    if (sum != hi.source.bound) {
      throw InconsistencyError("gap " + std::to_string(k) + " decodes to a group of sum " +
                               std::to_string(sum) + " != B");
    }
    std::sort(group.begin(), group.end());
    sol.groups.push_back(group);
  }
  return sol;
}

IntegerRadii integer_radii(const HardnessInstance& hi) {
  Integer common(1);
  for (const auto& d : hi.disks) {
    common = boost::multiprecision::lcm(common, Integer(denominator(d.size)));
  }
  IntegerRadii out;
  out.scale = common * common;
  const Rational scale(out.scale);
  for (const auto& d : hi.disks) {
    const Rational r = d.radius() * scale;
    out.radii.emplace_back(d.id, Integer(numerator(r)));
  }
  out.budget = Integer(numerator(hi.budget * scale));
  return out;
}

}  // namespace shelfpack::hardness
