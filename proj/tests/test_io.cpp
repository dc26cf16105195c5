#include <doctest.h>

#include <json.hpp>

#include "shelfpack/greedy.hpp"
#include "shelfpack/io.hpp"
#include "support.hpp"

using namespace shelfpack;
using shelfpack::testing::R;

TEST_CASE("instance parsing") {
  const auto file = io::parse_instance(
      "# sizes\n"
      "shelfpack-instance v1\n"
      "\n"
      "a 33/100   # inner\n"
      "b 2\n");
  REQUIRE(file.entries.size() == 2);
  CHECK(file.kind == io::FileKind::exact);
  const auto disks = io::to_disks<Rational>(file);
  CHECK(disks[0].size == R("33/100"));
  CHECK(disks[1].size == 2);
  CHECK(io::to_disks<double>(file)[0].size == doctest::Approx(0.33));

  const auto decimal = io::parse_instance("shelfpack-instance v1\na 0.5\nb 2\n");
  CHECK(decimal.kind == io::FileKind::decimal);
  CHECK_THROWS_AS(io::to_disks<Rational>(decimal), PreconditionError);
}

TEST_CASE("instance errors carry line numbers") {
  auto fails_at = [](const std::string& text, int line) {
    try {
      io::parse_instance(text);
    } catch (const ParseError& e) {
      CHECK(e.line() == line);
      return;
    }
    FAIL("no parse error for: " << text);
  };
  fails_at("shelfpack-instance v2\na 1\n", 1);
  fails_at("shelfpack-instance v1\na 1/2\nb 0.5\n", 3);
  fails_at("shelfpack-instance v1\na 1\na 2\n", 3);
  fails_at("shelfpack-instance v1\na\n", 2);
  fails_at("shelfpack-instance v1\na 1 2\n", 2);
  fails_at("shelfpack-instance v1\na x\n", 2);
  CHECK_THROWS_AS(io::parse_instance(""), ParseError);
  CHECK_THROWS_AS(io::parse_instance("shelfpack-instance v1\n"), ParseError);
  CHECK_THROWS_AS(io::to_disks<double>(io::parse_instance("shelfpack-instance v1\na -1\n")),
                  DomainError);
}

TEST_CASE("placement round trip, exact") {
  testing::Rng rng(97);
  for (int k = 0; k < 100; ++k) {
    const auto disks = testing::random_rational_disks(rng, 1 + rng() % 20, 1, 900, 7);
    const auto p = greedy_solve(disks).placement;
    const auto text = io::format_placement(p, {"span: x"});
    const auto file = io::parse_placement(text);
    CHECK(file.kind == io::FileKind::exact);
    CHECK(io::to_placement<Rational>(file) == p);
  }
}

TEST_CASE("placement round trip, float") {
  testing::Rng rng(101);
  for (int k = 0; k < 100; ++k) {
    const auto disks = testing::random_float_disks(rng, 1 + rng() % 20, 0.01, 50.0);
    const auto p = greedy_solve(disks).placement;
    const auto file = io::parse_placement(io::format_placement(p));
    CHECK(file.kind == io::FileKind::decimal);
    CHECK(io::to_placement<double>(file) == p);
  }
}

TEST_CASE("instance round trip") {
  const auto disks = make_disks<Rational>({R("33/133"), R("2261/13200"), Rational(5)});
  const auto text = io::format_instance(std::span<const Disk<Rational>>(disks));
  CHECK(text == "shelfpack-instance v1\n0 33/133\n1 2261/13200\n2 5\n");
  const auto back = io::to_disks<Rational>(io::parse_instance(text));
  for (std::size_t i = 0; i < disks.size(); ++i) CHECK(back[i].size == disks[i].size);

  const auto floats = make_disks<double>({4.0, 0.1});
  CHECK(io::format_instance(std::span<const Disk<double>>(floats)) ==
        "shelfpack-instance v1\n0 4.0\n1 0.1\n");
}

TEST_CASE("placements are sorted by footpoint on read") {
  const auto file = io::parse_placement("shelfpack-placement v1\nb 1 3\na 1 1\n");
  const auto p = io::to_placement<Rational>(file);
  CHECK(p[0].disk.id.str() == "a");
  CHECK_THROWS_AS(
      io::to_placement<Rational>(io::parse_placement("shelfpack-placement v1\na 1 1\nb 1 1\n")),
      DomainError);
}

TEST_CASE("radii column") {
  const auto file = io::parse_instance("shelfpack-instance v1\na 4\nb 0.25\n");
  const auto disks = io::to_disks_from_radii(file);
  CHECK(disks[0].size == 2.0);
  CHECK(disks[1].size == 0.5);
}

TEST_CASE("3-partition and group files") {
  const auto inst = io::parse_three_partition("# two groups\n2 100\n30 33 37\n26 35 39\n");
  CHECK(inst.bound == 100);
  CHECK(inst.elements == std::vector<std::int64_t>{30, 33, 37, 26, 35, 39});
  CHECK_THROWS_AS(io::parse_three_partition("2 100\n30 33 37\n"), ParseError);
  CHECK_THROWS_AS(io::parse_three_partition("1 100\n30 33 3.5\n"), ParseError);
  CHECK_THROWS_AS(io::parse_three_partition(""), ParseError);

  const auto groups = io::parse_groups("1 2 3\n4 5 6\n");
  REQUIRE(groups.groups.size() == 2);
  CHECK(groups.groups[1] == std::array<std::size_t, 3>{3, 4, 5});
  CHECK_THROWS_AS(io::parse_groups("0 1 2\n"), ParseError);
  CHECK_THROWS_AS(io::parse_groups("1 2\n"), ParseError);
}

TEST_CASE("sidecar") {
  const auto hi = hardness::build_instance({{30, 33, 37, 26, 35, 39}, 100});
  const auto j = nlohmann::json::parse(io::format_sidecar(hi));
  CHECK(j["m"] == 2);
  CHECK(j["B"] == 100);
  CHECK(j["budget"] == "6");
  REQUIRE(j["disks"].size() == 35);
  std::size_t partitions = 0;
  for (const auto& d : j["disks"]) {
    CHECK(hardness::role_from_string(d["role"].get<std::string>()).has_value());
    if (d["role"] == "partition") ++partitions;
  }
  CHECK(partitions == 6);
  CHECK(j["disks"][0]["id"] == hi.disks[0].id.str());
  CHECK(j["disks"][0]["size"] == hi.disks[0].size.str());
}
