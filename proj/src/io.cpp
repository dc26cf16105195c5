#include "shelfpack/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace shelfpack::io {
namespace {

struct Line {
  std::vector<std::string> fields;
  int number;
};

// Splits into non-empty, comment-stripped lines of whitespace-separated fields.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::istringstream in{std::string(raw)};
    Line line{{}, number};
    for (std::string field; in >> field;) line.fields.push_back(std::move(field));
    if (!line.fields.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

void expect_header(const std::vector<Line>& lines, std::string_view header) {
  if (lines.empty()) throw ParseError("empty file, expected header '" + std::string(header) + "'");
  std::string joined;
  for (const auto& f : lines.front().fields) joined += (joined.empty() ? "" : " ") + f;
  if (joined != header) {
    throw ParseError("expected header '" + std::string(header) + "'", lines.front().number);
  }
}

// Folds literal kinds into a file kind; rejects rational/decimal mixes.
class KindTracker {
 public:
  void add(const std::string& literal, int line) {
    switch (classify_literal(literal)) {
      case LiteralKind::integer: break;
      case LiteralKind::rational: rational_ = true; break;
      case LiteralKind::decimal: decimal_ = true; break;
    }
    if (rational_ && decimal_) {
      throw ParseError("file mixes rational and decimal literals", line);
    }
  }
  FileKind kind() const { return decimal_ ? FileKind::decimal : FileKind::exact; }

 private:
  bool rational_ = false;
  bool decimal_ = false;
};

template <class F>
auto with_line(int line, F&& f) {
  try {
    return f();
  } catch (const ParseError& e) {
    if (e.line() > 0) throw;
    throw ParseError(e.what(), line);
  }
}

long long parse_int(const std::string& s, int line) {
  return with_line(line, [&] {
    if (classify_literal(s) != LiteralKind::integer) throw ParseError("expected integer, got '" + s + "'");
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(s, &used);
    } catch (const std::exception&) {
      throw ParseError("integer out of range '" + s + "'");
    }
    return v;
  });
}

}  // namespace

InstanceFile parse_instance(std::string_view text) {
  const auto lines = tokenize(text);
  expect_header(lines, kInstanceHeader);
  InstanceFile file;
  KindTracker kinds;
  std::set<std::string> ids;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (l.fields.size() != 2) throw ParseError("expected '<id> <size>'", l.number);
    if (!ids.insert(l.fields[0]).second) {
      throw ParseError("duplicate disk id '" + l.fields[0] + "'", l.number);
    }
    with_line(l.number, [&] { kinds.add(l.fields[1], l.number); });
    file.entries.push_back({l.fields[0], l.fields[1], l.number});
  }
  if (file.entries.empty()) throw ParseError("instance has no disks");
  file.kind = kinds.kind();
  return file;
}

PlacementFile parse_placement(std::string_view text) {
  const auto lines = tokenize(text);
  expect_header(lines, kPlacementHeader);
  PlacementFile file;
  KindTracker kinds;
  std::set<std::string> ids;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (l.fields.size() != 3) throw ParseError("expected '<id> <size> <footpoint>'", l.number);
    if (!ids.insert(l.fields[0]).second) {
      throw ParseError("duplicate disk id '" + l.fields[0] + "'", l.number);
    }
    with_line(l.number, [&] {
      kinds.add(l.fields[1], l.number);
      kinds.add(l.fields[2], l.number);
    });
    file.entries.push_back({l.fields[0], l.fields[1], l.fields[2], l.number});
  }
  if (file.entries.empty()) throw ParseError("placement has no disks");
  file.kind = kinds.kind();
  return file;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << contents;
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

std::vector<Disk<double>> to_disks_from_radii(const InstanceFile& file) {
  std::vector<Disk<double>> disks;
  disks.reserve(file.entries.size());
  for (const auto& e : file.entries) {
    disks.emplace_back(DiskId(e.id), size_from_radius(parse_double(e.size)));
  }
  return disks;
}

hardness::ThreePartitionInstance parse_three_partition(std::string_view text) {
  std::vector<std::pair<std::string, int>> tokens;
  for (const auto& l : tokenize(text)) {
    for (const auto& f : l.fields) tokens.emplace_back(f, l.number);
  }
  if (tokens.size() < 2) throw ParseError("expected 'm B' followed by 3m integers");
  const long long m = parse_int(tokens[0].first, tokens[0].second);
  hardness::ThreePartitionInstance inst;
  inst.bound = parse_int(tokens[1].first, tokens[1].second);
  if (m < 1) throw ParseError("m must be at least 1", tokens[0].second);
  if (tokens.size() != 2 + 3 * static_cast<std::size_t>(m)) {
    throw ParseError("expected " + std::to_string(3 * m) + " elements, found " +
                     std::to_string(tokens.size() - 2));
  }
  for (std::size_t i = 2; i < tokens.size(); ++i) {
    inst.elements.push_back(parse_int(tokens[i].first, tokens[i].second));
  }
  return inst;
}

hardness::PartitionSolution parse_groups(std::string_view text) {
  hardness::PartitionSolution sol;
  for (const auto& l : tokenize(text)) {
    if (l.fields.size() != 3) throw ParseError("expected three element indices", l.number);
    std::array<std::size_t, 3> group{};
    for (std::size_t k = 0; k < 3; ++k) {
      const long long v = parse_int(l.fields[k], l.number);
      if (v < 1) throw ParseError("element indices are 1-based", l.number);
      group[k] = static_cast<std::size_t>(v - 1);
    }
    sol.groups.push_back(group);
  }
  return sol;
}

std::string format_sidecar(const hardness::HardnessInstance& hi) {
  nlohmann::ordered_json j;
  j["format"] = "shelfpack-hardness v1";
  j["m"] = hi.m();
  j["B"] = hi.source.bound;
  j["elements"] = hi.source.elements;
  j["budget"] = hi.budget.str();
  auto& disks = j["disks"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < hi.disks.size(); ++i) {
    nlohmann::ordered_json d;
    d["id"] = hi.disks[i].id.str();
    d["role"] = hardness::to_string(hi.roles[i].role);
    d["index"] = hi.roles[i].index;
    d["size"] = hi.disks[i].size.str();
    disks.push_back(std::move(d));
  }
  return j.dump(2) + "\n";
}

std::string format_integer_radii(const hardness::IntegerRadii& radii) {
  std::string out = "shelfpack-radii v1\n";
  out += "# scale " + radii.scale.str() + "\n";
  out += "# budget " + radii.budget.str() + "\n";
  for (const auto& [id, r] : radii.radii) out += id.str() + ' ' + r.str() + '\n';
  return out;
}

}  // namespace shelfpack::io
