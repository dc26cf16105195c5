#include <doctest.h>

#include <algorithm>

#include "shelfpack/geometry.hpp"
#include "support.hpp"

using namespace shelfpack;
using shelfpack::testing::R;

namespace {

template <class T>
std::vector<T> footpoints(const Placement<T>& p) {
  std::vector<T> out;
  for (const auto& d : p) out.push_back(d.footpoint);
  return out;
}

template <class T>
std::vector<DiskId> ids(const std::vector<Disk<T>>& disks) {
  std::vector<DiskId> out;
  for (const auto& d : disks) out.push_back(d.id);
  return out;
}

}  // namespace

TEST_CASE("footpoint distance") {
  CHECK(footpoint_distance(1.0, 1.0) == 2.0);
  CHECK(footpoint_distance(Rational(1), R("33/100")) == R("33/50"));
  CHECK_THROWS_AS(footpoint_distance(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(footpoint_distance(1.0, -1.0), DomainError);
}

TEST_CASE("gap fit size") {
  const Rational a = R("7/5");
  CHECK(gap_fit_size(a, a, 2 * a * a) == a / 2);
  const Rational s0 = R("33/100");
  CHECK(gap_fit_size(Rational(1), s0, 2 * s0) == R("33/133"));
  CHECK(gap_fit_size(R("33/133"), Rational(1), 2 * R("33/133")) == R("33/166"));
  CHECK(gap_fit_size(2.0, 2.0, 8.0) == 1.0);
  CHECK_THROWS_AS(gap_fit_size(1.0, 1.0, -0.5), DomainError);
}

TEST_CASE("wall fit") {
  CHECK(wall_fit_exceeds(Rational(3), Rational(3)));
  CHECK_FALSE(wall_fit_exceeds(R("41/100"), Rational(1)));
  CHECK(wall_fit_exceeds(R("42/100"), Rational(1)));
  CHECK_FALSE(wall_fit_exceeds(0.41, 1.0));
  CHECK(wall_fit_exceeds(0.42, 1.0));
}

TEST_CASE("compact examples") {
  auto p = compact(make_disks<Rational>({Rational(1), Rational(1)}));
  CHECK(footpoints(p) == std::vector<Rational>{1, 3});
  CHECK(span(p).span == 4);

  p = compact(make_disks<Rational>({R("4/5"), Rational(2)}));
  CHECK(footpoints(p) == std::vector<Rational>{R("16/25"), Rational(4)});
  const auto report = span(p);
  CHECK(report.span == 8);
  CHECK(report.left_disk_id.str() == "1");
  CHECK(report.right_disk_id.str() == "1");

  p = compact(make_disks<Rational>({Rational(8), Rational(10), Rational(7), Rational(9)}));
  CHECK(span(p).span == 571);

  std::vector<Rational> units(7, Rational(1));
  CHECK(span(compact(make_disks<Rational>(units))).span == 14);
}

TEST_CASE("span of one disk and of nothing") {
  const auto p = compact(make_disks<Rational>({R("3/2")}));
  CHECK(p[0].footpoint == R("9/4"));
  CHECK(span(p).span == R("9/2"));
  CHECK_THROWS_AS(span(Placement<double>{}), DomainError);
}

TEST_CASE("verify rejects overlap with deficit") {
  using P = PlacedDisk<Rational>;
  const Disk<Rational> a(DiskId("a"), Rational(1)), b(DiskId("b"), Rational(1));
  const Placement<Rational> p({P{a, Rational(0)}, P{b, R("19/10")}});
  const auto v = verify(p, Rational(0));
  CHECK_FALSE(v.accepted);
  REQUIRE(v.violation);
  CHECK(v.violation->left_disk_id.str() == "a");
  CHECK(v.violation->right_disk_id.str() == "b");
  CHECK(v.violation->deficit == R("1/10"));

  const Placement<double> q({PlacedDisk<double>{Disk<double>(DiskId("a"), 1.0), 0.0},
                             PlacedDisk<double>{Disk<double>(DiskId("b"), 1.0), 1.9}});
  CHECK_FALSE(verify(q).accepted);
  CHECK(verify(q, 0.1).accepted);
  CHECK_THROWS_AS(verify(q, -1.0), DomainError);
  CHECK_THROWS_AS(verify(p, Rational(1)), PreconditionError);
}

TEST_CASE("verify catches a distant overlap behind small disks") {
  // Two large disks overlap although each neighbouring pair is fine.
  using P = PlacedDisk<Rational>;
  const Disk<Rational> big1(DiskId("a"), Rational(3)), tiny(DiskId("b"), R("1/10")),
      big2(DiskId("c"), Rational(3));
  const Placement<Rational> p({P{big1, Rational(9)}, P{tiny, Rational(10)}, P{big2, Rational(11)}});
  const auto v = verify(p, Rational(0));
  CHECK_FALSE(v.accepted);
  REQUIRE(v.violation);
  CHECK(v.violation->left_disk_id.str() == "a");
  CHECK(v.violation->right_disk_id.str() == "c");
}

TEST_CASE("support lower bound") {
  CHECK(support_lower_bound(make_disks<Rational>({1, 1, 1, 1})) == 8);
  CHECK(support_lower_bound(make_disks<Rational>({R("5/3")})) == 2 * R("25/9"));
  CHECK(support_lower_bound(make_disks<Rational>({2, 2, 1})) == 14);
  CHECK_THROWS_AS(support_lower_bound(std::vector<Disk<Rational>>{}), DomainError);
}

TEST_CASE("closed forms on random inputs") {
  testing::Rng rng(11);
  for (int k = 0; k < 1000; ++k) {
    const Rational a = testing::random_rational(rng, 1, 600, 100);
    const Rational b = testing::random_rational(rng, 1, 600, 100);
    const Rational g = testing::random_rational(rng, 0, 5000, 100);
    CHECK(footpoint_distance(a, b) == 2 * a * b);

    // A disk of the fit size placed touching the left disk touches the right one too.
    const Rational d = gap_fit_size(a, b, g);
    CHECK(2 * a * d + 2 * b * d == g);

    // Touching `a` (resting against the left wall) from the left: the
    // smaller disk sticks out past the wall exactly when the test says so.
    const Rational extent = a * a - 2 * a * b - b * b;
    CHECK(wall_fit_exceeds(b, a) == (extent < 0));

    const double af = a.convert_to<double>(), bf = b.convert_to<double>();
    const double gf = g.convert_to<double>();
    CHECK(testing::rel_diff(footpoint_distance(af, bf), 2 * af * bf) <= 1e-12);
    CHECK(testing::rel_diff(gap_fit_size(af, bf, gf), gf / (2 * (af + bf))) <= 1e-12);
  }
}

TEST_CASE("compact is span-minimal and verified") {
  testing::Rng rng(5);
  for (int k = 0; k < 500; ++k) {
    const std::size_t n = 1 + rng() % 9;
    const auto disks = testing::random_rational_disks(rng, n, 10, 600, 100);
    const auto p = compact(disks);
    CHECK(verify(p, Rational(0)).accepted);
    CHECK(verify_pairwise(p, Rational(0)).accepted);
    CHECK(ids(p.order()) == ids(disks));

    std::vector<Rational> sizes;
    for (const auto& d : disks) sizes.push_back(d.size);
    CHECK(span(p).span == testing::naive_order_span(sizes));

    // Every disk is pinned: pulling it left by any amount breaks feasibility.
    for (std::size_t i = 0; i < n; ++i) {
      const Rational s = p[i].disk.size;
      bool pinned = p[i].footpoint == s * s;
      for (std::size_t j = 0; j < i; ++j) {
        pinned = pinned || p[i].footpoint - p[j].footpoint == 2 * p[j].disk.size * s;
      }
      CHECK(pinned);
    }
  }
}

TEST_CASE("verify agrees with the pairwise reference") {
  testing::Rng rng(9);
  for (int k = 0; k < 500; ++k) {
    const std::size_t n = 2 + rng() % 8;
    auto disks = testing::random_rational_disks(rng, n, 10, 600, 100);
    auto p = compact(disks);
    // Nudge one footpoint left, sometimes creating an overlap.
    std::vector<PlacedDisk<Rational>> moved(p.begin(), p.end());
    const std::size_t i = 1 + rng() % (n - 1);
    const Rational shift = testing::random_rational(rng, 0, 300, 100);
    moved[i].footpoint -= shift;
    if (moved[i].footpoint <= moved[i - 1].footpoint) continue;
    const Placement<Rational> q(std::move(moved));
    const auto fast = verify(q, Rational(0));
    const auto slow = verify_pairwise(q, Rational(0));
    CHECK(fast.accepted == slow.accepted);
    if (!fast.accepted) {
      REQUIRE(fast.violation);
      CHECK(fast.violation->deficit > 0);
    }
  }
}

TEST_CASE("support intervals are disjoint and bound the span") {
  testing::Rng rng(21);
  for (int k = 0; k < 500; ++k) {
    const std::size_t n = 1 + rng() % 10;
    const auto disks = testing::random_rational_disks(rng, n, 50, 600, 100);
    auto order = disks;
    std::shuffle(order.begin(), order.end(), rng);
    const auto p = compact(order);
    auto intervals = support_intervals(p);
    std::sort(intervals.begin(), intervals.end(),
              [](const auto& x, const auto& y) { return x.lo < y.lo; });
    for (std::size_t i = 1; i < intervals.size(); ++i) {
      CHECK(intervals[i - 1].hi <= intervals[i].lo);
    }
    CHECK(support_lower_bound(disks) <= span(p).span);
  }
}
