#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "oracles.hpp"
#include "wreathmix/diagrams.hpp"

using namespace wreathmix;

TEST_CASE("partition enumeration is complete, ordered, and capped") {
  REQUIRE(partitions_of(0) == std::vector<Partition>{{}});
  REQUIRE(partitions_of(4) ==
          std::vector<Partition>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
  REQUIRE(partitions_of(12).size() == 77);

  for (int L = 0; L <= 14; ++L) {
    auto parts = partitions_of(L);
    REQUIRE(static_cast<long>(parts.size()) == oracles::partition_count(L));
    std::set<Partition> distinct(parts.begin(), parts.end());
    REQUIRE(distinct.size() == parts.size());
    for (const auto& p : parts) {
      REQUIRE(is_partition(p));
      REQUIRE(partition_size(p) == L);
    }
  }

  REQUIRE_THROWS_AS(partitions_of(kPartitionEnumerationCap + 1), capacity_error);
}

TEST_CASE("conjugation transposes diagrams") {
  REQUIRE(conjugate({4}) == Partition{1, 1, 1, 1});
  REQUIRE(conjugate({3, 1}) == Partition{2, 1, 1});
  REQUIRE(conjugate({2, 2}) == Partition{2, 2});
  REQUIRE(conjugate({}) == Partition{});
  for (const auto& p : partitions_of(9)) {
    REQUIRE(conjugate(conjugate(p)) == p);
    REQUIRE(conjugate(p)[0] == static_cast<int>(p.size()));
  }
}

TEST_CASE("standard tableau counts agree with direct enumeration") {
  REQUIRE(hook_count({7}) == 1);
  REQUIRE(hook_count({3, 1}) == 3);
  REQUIRE(hook_count({2, 2}) == 2);
  REQUIRE(hook_count({3, 2}) == 5);
  REQUIRE(hook_count({1, 1, 1, 1, 1}) == 1);
  REQUIRE(hook_count({}) == 1);

  for (int L = 1; L <= 8; ++L)
    for (const auto& p : partitions_of(L))
      REQUIRE(hook_count(p) == Int(oracles::syt_count(p)));

  for (int L = 1; L <= 10; ++L) {
    Int sum = 0;
    for (const auto& p : partitions_of(L)) sum += hook_count(p) * hook_count(p);
    REQUIRE(sum == factorial(L));
  }
}

TEST_CASE("removable corners carry their contents") {
  auto one_row = removable_corners(Partition{6});
  REQUIRE(one_row.size() == 1);
  REQUIRE(one_row[0].row == 0);
  REQUIRE(one_row[0].col == 5);
  REQUIRE(content_of(one_row[0]) == 5);

  auto two = removable_corners(Partition{3, 2});
  REQUIRE(two.size() == 2);
  REQUIRE(content_of(two[0]) == 2);
  REQUIRE(content_of(two[1]) == 0);

  REQUIRE(removable_corners(Partition{2, 2}).size() == 1);
  REQUIRE(removable_corners(Partition{}).empty());

  for (const auto& p : partitions_of(10)) {
    std::set<int> values(p.begin(), p.end());
    REQUIRE(removable_corners(p).size() == values.size());
    for (const auto& c : removable_corners(p)) {
      Partition smaller = remove_cell(p, c);
      REQUIRE(is_partition(smaller));
      REQUIRE(partition_size(smaller) == 9);
    }
  }
}

TEST_CASE("binomial and multinomial coefficients") {
  REQUIRE(binomial(10, 3) == 120);
  REQUIRE(binomial(5, 0) == 1);
  REQUIRE(binomial(5, 6) == 0);
  REQUIRE(multinomial(7, {3, 2, 2}) == 210);
  REQUIRE(multinomial(10, {5, 2, 2, 1}) == 7560);
  REQUIRE(multinomial(4, {4}) == 1);
}

TEST_CASE("diagram tuples enumerate all shape splittings") {
  auto d0 = enumerate_young_g_diagrams(0, 3);
  REQUIRE(d0.size() == 1);
  REQUIRE(total_size(d0[0]) == 0);

  auto d22 = enumerate_young_g_diagrams(2, 2);
  REQUIRE(d22.size() == 5);
  REQUIRE(d22[0].components == std::vector<Partition>{{2}, {}});
  REQUIRE(d22[1].components == std::vector<Partition>{{1, 1}, {}});
  REQUIRE(d22[2].components == std::vector<Partition>{{1}, {1}});
  REQUIRE(d22[3].components == std::vector<Partition>{{}, {2}});
  REQUIRE(d22[4].components == std::vector<Partition>{{}, {1, 1}});

  REQUIRE(enumerate_young_g_diagrams(3, 2).size() == 10);

  long expected = 0;
  for (int m = 0; m <= 4; ++m)
    expected += oracles::partition_count(m) * oracles::partition_count(4 - m);
  REQUIRE(enumerate_young_g_diagrams(4, 2).size() == static_cast<std::size_t>(expected));

  for (const auto& mu : enumerate_young_g_diagrams(4, 3)) REQUIRE(total_size(mu) == 4);
}

TEST_CASE("tableau counts over colored diagrams") {
  YoungGDiagram trivial_row{{{5}, {}, {}}};
  REQUIRE(count_syt_g(trivial_row) == 1);

  YoungGDiagram split{{{1}, {1}}};
  REQUIRE(count_syt_g(split) == 2);

  // Ten boxes over four occupied components: 10!/(5!2!2!1!) * 5 * 1 * 1 * 1.
  YoungGDiagram ten{{{3, 2}, {1, 1}, {}, {}, {}, {}, {}, {1, 1}, {}, {1}}};
  REQUIRE(count_syt_g(ten) == 37800);

  for (int t = 1; t <= 3; ++t)
    for (int n = 0; n <= 4; ++n)
      for (const auto& mu : enumerate_young_g_diagrams(n, t))
        REQUIRE(count_syt_g(mu) == Int(oracles::syt_g_count(mu)));
}

TEST_CASE("removing one box at a time accounts for every tableau") {
  for (int t = 1; t <= 3; ++t) {
    for (int n = 1; n <= 6 - t; ++n) {
      for (const auto& mu : enumerate_young_g_diagrams(n, t)) {
        Int sum = 0;
        for (const auto& c : removable_corners(mu)) sum += count_syt_g(remove_corner(mu, c));
        REQUIRE(sum == count_syt_g(mu));
      }
    }
  }
}

TEST_CASE("corner bookkeeping across components") {
  YoungGDiagram mu{{{3, 1}, {2}}};
  auto corners = removable_corners(mu);
  REQUIRE(corners.size() == 3);
  REQUIRE(corners[0].component == 0);
  REQUIRE(content_of(corners[0]) == 2);
  REQUIRE(corners[1].component == 0);
  REQUIRE(content_of(corners[1]) == -1);
  REQUIRE(corners[2].component == 1);
  REQUIRE(content_of(corners[2]) == 1);

  YoungGDiagram smaller = remove_corner(mu, corners[2]);
  REQUIRE(smaller.components == std::vector<Partition>{{3, 1}, {1}});
  REQUIRE(total_size(smaller) == 5);
}

TEST_CASE("diagram and partition rendering") {
  REQUIRE(partition_string({3, 2}) == "(3,2)");
  REQUIRE(partition_string({}) == "()");
  REQUIRE(diagram_string(YoungGDiagram{{{3, 2}, {1, 1}, {}}}) == "[(3,2)|(1,1)|()]");
}
