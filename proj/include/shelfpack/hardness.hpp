#pragma once

// Reduction from 3-Partition. A 3-Partition instance (3m integers, bound B)
// becomes 12m + 11 disks whose best span is 2(m + 1) exactly when the
// instance is solvable. Everything here is exact rational arithmetic.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "shelfpack/disk.hpp"

namespace shelfpack::hardness {

using Size = Rational;

/// Sizes of the frame and filler families.
struct FamilySizes {
  Size outer;   ///< 1
  Size inner;   ///< s0 = 33/100
  Size large;   ///< s1 = s0 / (1 + s0) = 33/133
  Size small;   ///< s2 = s1 / (1 + s1) = 33/166
  Size end;     ///< s3 = (1 - s0^2 - 2 s0) / (4 s0) = 2311/13200
  Size minimal; ///< s4 = 2261/13200, lower bound on end and partition sizes
};

/// Derived from s0 by the closed forms above.
const FamilySizes& family_sizes();

/// Largest sum of three end/partition sizes fitting between the four inner
/// frame disks of one gap: 2 / (4 s0) - 1 = 17/33.
const Size& triple_capacity();

struct ThreePartitionInstance {
  std::vector<std::int64_t> elements;
  std::int64_t bound = 0;

  std::size_t m() const { return elements.size() / 3; }
};

struct ValidationResult {
  bool ok = true;
  std::string message;
  std::optional<std::size_t> index;  ///< offending element, 0-based

  explicit operator bool() const { return ok; }
};

/// Accepts iff 3m > 0 elements, B > 0, sum = mB and B/4 < a_i < B/2 for all i.
ValidationResult validate_3partition(const ThreePartitionInstance& inst);

enum class Role { outer_frame, inner_frame, large_filler, small_filler, end, partition };

const char* to_string(Role role);
std::optional<Role> role_from_string(std::string_view text);

struct RoleTag {
  Role role;
  std::size_t index;  ///< within the role; for partition disks, the element index
};

struct HardnessInstance {
  ThreePartitionInstance source;
  std::vector<Disk<Size>> disks;
  std::vector<RoleTag> roles;  ///< parallel to disks
  Size budget;                 ///< 2(m + 1)

  std::size_t m() const { return source.m(); }
  /// Position in `disks` of the partition disk for element `element`.
  std::size_t partition_disk(std::size_t element) const;
  /// Position in `disks` of the disk with this id, if any.
  std::optional<std::size_t> find(const DiskId& id) const;
};

/// Partition disk size (17/99)((3/100)(a/B) + 99/100).
Size partition_size(std::int64_t element, std::int64_t bound);

/// Builds the disk family. Ids are "<role>:<index>", e.g. "outer:0",
/// "part:4". Throws PreconditionError for an invalid source.
HardnessInstance build_instance(const ThreePartitionInstance& inst);

/// m groups of three element indices (0-based).
struct PartitionSolution {
  std::vector<std::array<std::size_t, 3>> groups;
};

/// Checks that `sol` partitions the elements into triples summing to B.
ValidationResult validate_solution(const ThreePartitionInstance& inst, const PartitionSolution& sol);

/// Span-2(m+1) placement for a solved instance: outer frame disks touch in a
/// row; gap k holds small, large, inner, p, inner, p, inner, p, inner, large,
/// small with group k's partition disks each touching the inner frame disk on
/// its left; each end holds inner, end, inner, large, small (mirrored on the
/// right). Throws PreconditionError unless `sol` is valid.
Placement<Size> build_certificate(const HardnessInstance& hi, const PartitionSolution& sol);

/// The same layout without requiring group sums of exactly B: only that each
/// group's partition sizes fit (sum <= 17/33). Used to exercise slack.
Placement<Size> layout_certificate(const HardnessInstance& hi, const PartitionSolution& sol);

/// Reads a 3-partition back from a placement of span at most 2(m + 1).
/// Throws PreconditionError if the placement does not verify exactly, exceeds
/// the budget or does not hold exactly the instance's disks, and
/// InconsistencyError if the bins contradict the reduction.
PartitionSolution decode_partition(const HardnessInstance& hi, const Placement<Size>& p);

/// Integer-radius form of the instance: all radii multiplied by D^2, where D
/// is the common denominator of the sizes. Span scales by the same factor.
struct IntegerRadii {
  std::vector<std::pair<DiskId, Integer>> radii;
  Integer scale;   ///< D^2
  Integer budget;  ///< 2(m + 1) D^2
};

IntegerRadii integer_radii(const HardnessInstance& hi);

// ---------------------------------------------------------------------------
// Machine-checked identities and inequalities behind the reduction.

enum class Relation { equal, greater };

const char* to_string(Relation rel);

struct IdentityCheck {
  std::string name;        ///< e.g. "end/large filler: 1 s0 s1 s0"
  std::string expression;  ///< what was evaluated
  Rational value;
  Relation relation;
  Rational bound;
  bool passed;
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;

  bool all_passed() const;
  std::vector<const IdentityCheck*> failures() const;
};

/// Width of a chain of touching disks given by symbols "1", "s0".."s4":
/// sum of 2xy over consecutive pairs, plus the last radius when `to_wall`.
Rational chain_width(std::string_view sequence, bool to_wall);

/// Evaluates a closed form such as "2s0+4s0s1+s0^2" over the family sizes.
Rational evaluate_closed_form(std::string_view expression);

IdentityReport reduction_identity_suite();

}  // namespace shelfpack::hardness
