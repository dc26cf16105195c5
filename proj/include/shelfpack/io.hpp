#pragma once

// Text formats:
//
//   shelfpack-instance v1          shelfpack-placement v1
//   <id> <size>                    <id> <size> <footpoint>
//
// Sizes and footpoints are "p/q" or integer literals (exact) or decimal
// literals (float). Blank lines and '#' comments are ignored. A file may not
// mix rational and decimal literals.

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "shelfpack/disk.hpp"
#include "shelfpack/hardness.hpp"

namespace shelfpack::io {

inline constexpr std::string_view kInstanceHeader = "shelfpack-instance v1";
inline constexpr std::string_view kPlacementHeader = "shelfpack-placement v1";

/// Literal kind of a whole file: integer-only files are exact.
enum class FileKind { exact, decimal };

/// Parsed but not yet typed: literals are kept as text so either backend can
/// consume them.
struct InstanceFile {
  struct Entry {
    std::string id;
    std::string size;
    int line = 0;
  };
  std::vector<Entry> entries;
  FileKind kind = FileKind::exact;
};

struct PlacementFile {
  struct Entry {
    std::string id;
    std::string size;
    std::string footpoint;
    int line = 0;
  };
  std::vector<Entry> entries;
  FileKind kind = FileKind::exact;
};

/// Throws ParseError on malformed input (bad header, duplicate ids, mixed
/// literal kinds, ...).
InstanceFile parse_instance(std::string_view text);
PlacementFile parse_placement(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

/// Types the literals for backend T. Exact on a decimal file throws
/// PreconditionError; non-positive sizes throw DomainError.
template <Scalar T>
std::vector<Disk<T>> to_disks(const InstanceFile& file) {
  std::vector<Disk<T>> disks;
  disks.reserve(file.entries.size());
  for (const auto& e : file.entries) {
    disks.emplace_back(DiskId(e.id), ScalarTraits<T>::from_literal(e.size));
  }
  return disks;
}

/// Reads the size column as radii (size = sqrt(radius)). Float only.
std::vector<Disk<double>> to_disks_from_radii(const InstanceFile& file);

template <Scalar T>
Placement<T> to_placement(const PlacementFile& file) {
  std::vector<PlacedDisk<T>> placed;
  placed.reserve(file.entries.size());
  for (const auto& e : file.entries) {
    placed.push_back({Disk<T>(DiskId(e.id), ScalarTraits<T>::from_literal(e.size)),
                      ScalarTraits<T>::from_literal(e.footpoint)});
  }
  return Placement<T>::from_unsorted(std::move(placed));
}

template <Scalar T>
std::string format_instance(std::span<const Disk<T>> disks) {
  std::string out(kInstanceHeader);
  out += '\n';
  for (const auto& d : disks) {
    out += d.id.str() + ' ' + ScalarTraits<T>::to_literal(d.size) + '\n';
  }
  return out;
}

/// `comments` lines are emitted as "# ..." right after the header.
template <Scalar T>
std::string format_placement(const Placement<T>& p, const std::vector<std::string>& comments = {}) {
  std::string out(kPlacementHeader);
  out += '\n';
  for (const auto& c : comments) out += "# " + c + '\n';
  for (const auto& d : p) {
    out += d.disk.id.str() + ' ' + ScalarTraits<T>::to_literal(d.disk.size) + ' ' +
           ScalarTraits<T>::to_literal(d.footpoint) + '\n';
  }
  return out;
}

/// "m B" followed by 3m integers, whitespace separated; '#' comments allowed.
hardness::ThreePartitionInstance parse_three_partition(std::string_view text);

/// One group per line: three 1-based element indices.
hardness::PartitionSolution parse_groups(std::string_view text);

/// Sidecar for a generated reduction instance: budget, source and role tags.
std::string format_sidecar(const hardness::HardnessInstance& hi);

/// "shelfpack-radii v1" listing integer radii and the scaled budget.
std::string format_integer_radii(const hardness::IntegerRadii& radii);

}  // namespace shelfpack::io
