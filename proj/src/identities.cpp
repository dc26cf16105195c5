#include <cctype>
#include <string>
#include <vector>

#include "shelfpack/geometry.hpp"
#include "shelfpack/hardness.hpp"

namespace shelfpack::hardness {
namespace {

const Rational& symbol_value(std::string_view sym) {
  const auto& f = family_sizes();
  static const Rational one(1);
  if (sym == "1") return one;
  if (sym == "s0") return f.inner;
  if (sym == "s1") return f.large;
  if (sym == "s2") return f.small;
  if (sym == "s3") return f.end;
  if (sym == "s4") return f.minimal;
  throw ParseError("unknown size symbol '" + std::string(sym) + "'");
}

// "1.0964" -> 10964/10000, exactly.
Rational decimal(std::string_view text) {
  const auto dot = text.find('.');
  std::string digits(text.substr(0, dot));
  long long scale = 1;
  if (dot != std::string_view::npos) {
    for (char c : text.substr(dot + 1)) {
      digits += c;
      scale *= 10;
    }
  }
  return parse_rational(digits + "/" + std::to_string(scale));
}

struct ChainRow {
  const char* group;
  const char* sequence;
  const char* closed_form;
  const char* printed;  // printed 4-decimal lower bound
};

// Right end of the shelf: the chain runs from the outer frame disk's
// footpoint to the wall, whose distance is 1, so widths must exceed 1.
constexpr ChainRow kEndRows[] = {
    {"large filler", "1 s0 s1 s0", "2s0+4s0s1+s0^2", "1.0964"},
    {"large filler", "1 s0 s0 s1", "2s0+2s0^2+2s0s1+s1^2", "1.1031"},
    {"large filler", "1 s1 s1 s0 s0", "2s1+2s1^2+2s0s1+3s0^2", "1.1098"},
    {"small filler", "1 s0 s2 s0", "2s0+4s0s2+s0^2", "1.0313"},
    {"small filler", "1 s0 s0 s2", "2s0+2s0^2+2s0s2+s2^2", "1.0485"},
    {"small filler", "1 s1 s2 s0 s0", "2s1+2s1s2+2s2s0+3s0^2", "1.0528"},
    {"small filler", "1 s2 s2 s1 s0 s0", "2s2+2s2^2+2s2s1+2s1s0+3s0^2", "1.0657"},
    {"end/partition", "1 s0 s0 s4", "2s0+2s0^2+2s0s4+s4^2", "1.0201"},
    {"end/partition", "1 s1 s4 s0 s0", "2s1+2s1s4+2s0s4+3s0^2", "1.0209"},
    {"end/partition", "1 s2 s4 s1 s0 s0", "2s2+2s2s4+2s1s4+2s1s0+3s0^2", "1.0411"},
    {"end/partition", "1 s0 s4 s4 s0", "2s0+4s0s4+2s4^2+s0^2", "1.0536"},
    {"end/partition", "1 s4 s4 s2 s1 s0 s0", "2s4+2s4^2+2s2s4+2s1s2+2s1s0+3s0^2", "1.0584"},
    {"end/partition", "1 s4 s2 s1 s0 s4 s0", "2s4+2s2s4+2s1s2+2s1s0+4s0s4+s0^2", "1.0080"},
};

// Between two touching outer frame disks: footpoint distance 2 available.
constexpr ChainRow kGapRows[] = {
    {"small filler", "1 s0 s2 s0 s0 s0 1", "4s0+4s0s2+4s0^2", "2.0180"},
    {"small filler", "1 s1 s2 s0 s0 s0 s0 1", "2s1+2s1s2+2s2s0+6s0^2+2s0", "2.0395"},
    {"small filler", "1 s2 s2 s1 s0 s0 s0 s0 1", "2s2+2s2^2+2s2s1+2s1s0+6s0^2+2s0", "2.0524"},
    {"end/partition", "1 s1 s4 s0 s0 s0 s0 1", "2s1+2s1s4+2s0s4+6s0^2+2s0", "2.0076"},
    {"end/partition", "1 s2 s4 s1 s0 s0 s0 s0 1", "2s2+2s2s4+2s4s1+2s1s0+6s0^2+2s0", "2.0278"},
    {"end/partition", "1 s0 s4 s4 s0 s0 s0 1", "4s0+4s0s4+2s4^2+4s0^2", "2.0403"},
    {"end/partition", "1 s4 s4 s2 s1 s0 s0 s0 s0 1", "2s4+2s4^2+2s4s2+2s2s1+2s1s0+6s0^2+2s0",
     "2.0451"},
    {"end/partition", "1 s4 s2 s1 s0 s4 s0 s4 s0 s0 1", "2s4+2s4s2+2s2s1+2s1s0+8s0s4+2s0^2+2s0",
     "2.0030"},
    {"end/partition", "1 s4 s2 s1 s0 s4 s0 s0 s0 s1 s2 s4 1",
     "4s4+4s4s2+4s2s1+4s1s0+4s0s4+4s0^2", "2.0078"},
};

class Suite {
 public:
  void check(std::string name, std::string expression, Rational value, Relation rel,
             Rational bound) {
    bool ok = false;
    switch (rel) {
      case Relation::equal: ok = value == bound; break;
      case Relation::greater: ok = value > bound; break;
    }
    report_.checks.push_back(
        {std::move(name), std::move(expression), std::move(value), rel, std::move(bound), ok});
  }

  // Chain width vs its closed form, printed bound and capacity.
  void chain(const std::string& label, std::string_view sequence, std::string_view closed_form,
             bool to_wall, std::string_view printed, Relation printed_rel, long capacity) {
    const Rational width = chain_width(sequence, to_wall);
    const std::string seq(sequence);
    check(label + " closed form", std::string(closed_form) + " = width(" + seq + ")",
          evaluate_closed_form(closed_form), Relation::equal, width);
    check(label + " printed bound", "width(" + seq + ")", width, printed_rel, decimal(printed));
    check(label + " capacity", "width(" + seq + ")", width, Relation::greater,
          Rational(capacity));
  }

  IdentityReport take() { return std::move(report_); }

 private:
  IdentityReport report_;
};

}  // namespace

const char* to_string(Relation rel) {
  switch (rel) {
    case Relation::equal: return "=";
    case Relation::greater: return ">";
  }
  return "?";
}

bool IdentityReport::all_passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

std::vector<const IdentityCheck*> IdentityReport::failures() const {
  std::vector<const IdentityCheck*> out;
  for (const auto& c : checks) {
    if (!c.passed) out.push_back(&c);
  }
  return out;
}

Rational chain_width(std::string_view sequence, bool to_wall) {
  std::vector<const Rational*> sizes;
  std::size_t pos = 0;
  while (pos < sequence.size()) {
    while (pos < sequence.size() && sequence[pos] == ' ') ++pos;
    const std::size_t end = std::min(sequence.find(' ', pos), sequence.size());
    if (end > pos) sizes.push_back(&symbol_value(sequence.substr(pos, end - pos)));
    pos = end;
  }
  if (sizes.empty()) throw ParseError("empty chain");
  Rational width(0);
  for (std::size_t i = 1; i < sizes.size(); ++i) width += footpoint_distance(*sizes[i - 1], *sizes[i]);
  if (to_wall) width += *sizes.back() * *sizes.back();
  return width;
}

Rational evaluate_closed_form(std::string_view expression) {
  Rational total(0);
  std::size_t pos = 0;
  auto at = [&](std::size_t i) { return i < expression.size() ? expression[i] : '\0'; };
  while (pos < expression.size()) {
    long long coefficient = 0;
    bool has_coefficient = false;
    while (std::isdigit(static_cast<unsigned char>(at(pos)))) {
      coefficient = coefficient * 10 + (at(pos) - '0');
      has_coefficient = true;
      ++pos;
    }
    Rational term(has_coefficient ? coefficient : 1);
    while (at(pos) == 's') {
      const std::string sym(expression.substr(pos, 2));
      pos += 2;
      int power = 1;
      if (at(pos) == '^') {
        power = at(pos + 1) - '0';
        pos += 2;
      }
      for (int k = 0; k < power; ++k) term *= symbol_value(sym);
    }
    total += term;
    if (at(pos) == '+') {
      ++pos;
    } else if (pos < expression.size()) {
      throw ParseError("unexpected '" + std::string(1, at(pos)) + "' in closed form");
    }
  }
  return total;
}

IdentityReport reduction_identity_suite() {
  const auto& f = family_sizes();
  const Rational& s0 = f.inner;
  const Rational& s1 = f.large;
  const Rational& s2 = f.small;
  const Rational& s3 = f.end;
  const Rational& s4 = f.minimal;
  Suite suite;

  // Family sizes and the exact-fit relations they are built from.
  suite.check("s0", "33/100", s0, Relation::equal, make_rational(33, 100));
  suite.check("s1", "s0/(1+s0)", s1, Relation::equal, make_rational(33, 133));
  suite.check("s2", "s1/(1+s1)", s2, Relation::equal, make_rational(33, 166));
  suite.check("s3", "(1-s0^2-2s0)/(4s0)", s3, Relation::equal, make_rational(2311, 13200));
  suite.check("s4", "(17/99)(399/400)", make_rational(17, 99) * make_rational(399, 400),
              Relation::equal, make_rational(2261, 13200));
  suite.check("s4 decimal", "s4", s4, Relation::greater, decimal("0.17128"));
  suite.check("1/s1 = 1 + 1/s0", "1/s1", 1 / s1, Relation::equal, 1 + 1 / s0);
  suite.check("1/s2 = 1 + 1/s1", "1/s2", 1 / s2, Relation::equal, 1 + 1 / s1);

  // Gap fits: outer+inner holds a large filler, outer+large a small filler.
  suite.check("gap(1, s0) = s1", "gap_fit(1, s0, 2 s0)", gap_fit_size(Rational(1), s0, 2 * s0),
              Relation::equal, s1);
  suite.check("gap(1, s1) = s2", "gap_fit(1, s1, 2 s1)", gap_fit_size(Rational(1), s1, 2 * s1),
              Relation::equal, s2);
  suite.check("gap(s0, s0) = s0/2", "gap_fit(s0, s0, 2 s0^2)",
              gap_fit_size(s0, s0, 2 * s0 * s0), Relation::equal, s0 / 2);
  suite.check("end/partition never hide between inner disks", "s4", s4, Relation::greater, s0 / 2);

  // Minimal size and the size ratio bound.
  suite.check("end disks exceed s4", "s3", s3, Relation::greater, s4);
  suite.check("partition lower bound", "d(a = B/4)", partition_size(1, 4), Relation::equal, s4);
  suite.check("partition disks below s3", "d(a = B/2)", s3, Relation::greater,
              partition_size(1, 2));
  suite.check("size ratio below six", "s4", s4, Relation::greater, make_rational(1, 6));

  // End fit: an s3 disk between the two inner frame disks of an end fits exactly.
  suite.check("end fit", "2s0+4s0s3+s0^2", evaluate_closed_form("2s0+4s0s3+s0^2"),
              Relation::equal, Rational(1));
  suite.check("end fit chain", "width(1 s0 s3 s0)", chain_width("1 s0 s3 s0", true),
              Relation::equal, Rational(1));

  // Partition fit: three partition disks fit in a gap iff their sum <= 17/33.
  suite.check("triple capacity", "2/(4s0) - 1", triple_capacity(), Relation::equal,
              make_rational(17, 33));
  suite.check("partition size at B/3", "d(a = B/3)", partition_size(1, 3), Relation::equal,
              make_rational(17, 99));
  suite.check("balanced triple fills gap", "4s0(1 + 3 d(B/3))",
              4 * s0 * (1 + 3 * partition_size(1, 3)), Relation::equal, Rational(2));

  // Pattern observations.
  suite.check("five inner disks closed form", "4s0+8s0^2", evaluate_closed_form("4s0+8s0^2"), Relation::equal,
              chain_width("1 s0 s0 s0 s0 s0 1", false));
  suite.check("five inner disks in a gap", "width(1 s0 s0 s0 s0 s0 1)",
              chain_width("1 s0 s0 s0 s0 s0 1", false), Relation::equal, decimal("2.1912"));
  suite.check("five inner disks capacity", "width(1 s0 s0 s0 s0 s0 1)",
              chain_width("1 s0 s0 s0 s0 s0 1", false), Relation::greater, Rational(2));
  // The exact width is 1.2045 itself: the printed strict bound does not hold.
  suite.chain("three inner disks in an end", "1 s0 s0 s0", "2s0+5s0^2", true, "1.2045",
              Relation::greater, 1);
  suite.chain("large filler between inner disks", "1 s0 s1 s0 s0 s0 1", "4s0+4s0^2+4s0s1",
              false, "2.0831", Relation::greater, 2);
  suite.chain("two consecutive large fillers", "1 s1 s1 s0 s0 s0 s0 1",
              "2s1+2s1^2+2s0s1+6s0^2+2s0", false, "2.0965", Relation::greater, 2);

  for (const auto& row : kEndRows) {
    suite.chain(std::string("end/") + row.group + ": " + row.sequence, row.sequence,
                row.closed_form, true, row.printed, Relation::greater, 1);
  }
  for (const auto& row : kGapRows) {
    suite.chain(std::string("gap/") + row.group + ": " + row.sequence, row.sequence,
                row.closed_form, false, row.printed, Relation::greater, 2);
  }
  return suite.take();
}

}  // namespace shelfpack::hardness
