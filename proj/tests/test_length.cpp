#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "gmpn/cycles.hpp"
#include "gmpn/enumerate.hpp"
#include "gmpn/length.hpp"
#include "gmpn/text.hpp"
#include "test_helpers.hpp"

using namespace gmpn;

TEST_CASE("cycle data", "[length]") {
  GroupParams g3056(30, 5, 6);
  Element g = parse_element(g3056, "[(1 2)(3 4 5); (1,21,2,3,2,6)]");
  CycleData data = cycle_data(g);
  REQUIRE(data.count() == 3);
  CHECK(data.cycles[0].seq == std::vector<int>{1, 2});
  CHECK(data.cycles[0].weight == 22);
  CHECK(data.cycles[1].seq == std::vector<int>{3, 4, 5});
  CHECK(data.cycles[1].weight == 7);
  CHECK(data.cycles[2].seq == std::vector<int>{6});
  CHECK(data.cycles[2].weight == 6);

  CycleData id_data = cycle_data(Element::identity(GroupParams(4, 4, 4)));
  REQUIRE(id_data.count() == 4);
  for (const Cycle& c : id_data.cycles) {
    CHECK(c.seq.size() == 1);
    CHECK(c.weight == 0);
  }

  // Cycle order follows the permutation, starting at the smallest element.
  Element h = parse_element(GroupParams(2, 1, 3), "[(1 3 2); (0,1,1)]");
  CHECK(cycle_data(h).cycles[0].seq == std::vector<int>{1, 3, 2});
}

TEST_CASE("cycle partitions of [id;(1,1)] in G(2,1,2)", "[length]") {
  Element g = parse_element(GroupParams(2, 1, 2), "[id;(1,1)]");
  std::vector<CyclePartition> all = enumerate_cycle_partitions(g);
  REQUIRE(all.size() == 2); // {{c1},{c2}} and {{c1,c2}}
  CHECK(all[0].blocks == std::vector<std::vector<int>>{{0}, {1}});
  CHECK(all[1].blocks == std::vector<std::vector<int>>{{0, 1}});
  CHECK(partition_value(all[0]) == 2); // two blocks, neither weight 0 mod 2... both weight 1
  CHECK(partition_value(all[1]) == 2); // one block of weight 0 mod m
  std::vector<CyclePartition> maxima = max_cycle_partitions(g);
  CHECK(maxima.size() == 2);
}

TEST_CASE("partition values", "[length]") {
  // One-block partition of the identity in G(2,1,2): weight 0 -> value 2.
  Element id = Element::identity(GroupParams(2, 1, 2));
  for (const CyclePartition& partition : enumerate_cycle_partitions(id))
    if (partition.size() == 1) CHECK(partition_value(partition) == 2);

  // v(P) <= 2|P|, equality iff all blocks have weight 0 mod m.
  GroupParams params(4, 2, 3);
  for (const Element& g : enumerate_group(params)) {
    for (const CyclePartition& partition : enumerate_cycle_partitions(g)) {
      int v = partition_value(partition);
      CHECK(v <= 2 * partition.size());
      bool all_zero = std::all_of(partition.block_weights.begin(),
                                  partition.block_weights.end(),
                                  [](int w) { return w == 0; });
      CHECK((v == 2 * partition.size()) == all_zero);
    }
  }
}

TEST_CASE("single-cycle elements have a unique partition", "[length]") {
  Element g = parse_element(GroupParams(3, 1, 3), "[(1 2 3); (1,0,0)]");
  std::vector<CyclePartition> all = enumerate_cycle_partitions(g);
  REQUIRE(all.size() == 1);
  CHECK(all[0].blocks == std::vector<std::vector<int>>{{0}});
}

TEST_CASE("worked (30,5,6) length computation", "[length][worked]") {
  GroupParams params(30, 5, 6);
  Element g = parse_element(params, "[(1 2)(3 4 5); (1,21,2,3,2,6)]");
  // Cycle weights 22, 7, 6: no proper nonempty subset sums to 0 mod 5, so the
  // one-block partition is the only cycle partition; its weight is 5, nonzero
  // mod 30, so the maximum value is 1.
  std::vector<CyclePartition> all = enumerate_cycle_partitions(g);
  REQUIRE(all.size() == 1);
  CHECK(all[0].size() == 1);
  CHECK(all[0].block_weights[0] == 5);
  CHECK(partition_value(all[0]) == 1);
  CHECK(reflection_length(g) == 8); // 6 + 3 - 1
}

TEST_CASE("worked G(4,4,4) and G(4,2,4) partition examples", "[length][worked]") {
  Element g444 = parse_element(GroupParams(4, 4, 4), "[id;(2,2,2,2)]");
  std::vector<CyclePartition> par = enumerate_cycle_partitions(g444);
  CHECK(par.size() == 4); // the three 2+2 pairings and the single 4-block
  std::vector<CyclePartition> maxima = max_cycle_partitions(g444);
  REQUIRE(maxima.size() == 3);
  for (const CyclePartition& partition : maxima) {
    CHECK(partition.size() == 2);
    CHECK(partition_value(partition) == 4);
  }
  CHECK(reflection_length(g444) == 4); // 4 + 4 - 4

  // In G(4,2,4) every block weight is even, so all 15 set partitions qualify.
  Element g424 = parse_element(GroupParams(4, 2, 4), "[id;(2,2,2,2)]");
  CHECK(enumerate_cycle_partitions(g424).size() == 15);
}

TEST_CASE("reflection length basics", "[length]") {
  CHECK(reflection_length(Element::identity(GroupParams(5, 1, 4))) == 0);
  GroupParams g442(4, 4, 2);
  Element d = parse_element(g442, "[id;(2,2)]");
  CHECK(reflection_length(d) == 2);
  CHECK(reflection_length_bruteforce(d) == 2);
  for (const Reflection& r : enumerate_reflections(GroupParams(6, 2, 3)))
    CHECK(reflection_length(r.to_element()) == 1);
}

TEST_CASE("brute-force BFS oracle", "[length]") {
  GroupParams g212(2, 1, 2);
  CHECK(reflection_length_bruteforce(Element::identity(g212)) == 0);
  for (const Reflection& r : enumerate_reflections(g212))
    CHECK(reflection_length_bruteforce(r.to_element()) == 1);
  CHECK(reflection_length_bruteforce(parse_element(g212, "[id;(1,1)]")) == 2);

  Guards tight;
  tight.max_states = 100;
  CHECK_THROWS_AS(
      reflection_length_bruteforce(Element::identity(GroupParams(30, 5, 6)), tight),
      guard_exceeded);
}

TEST_CASE("Shi's formula matches BFS on whole small groups", "[length]") {
  for (GroupParams params : {GroupParams(2, 1, 2), GroupParams(4, 2, 2),
                             GroupParams(3, 3, 2), GroupParams(2, 2, 3)}) {
    LengthTable table(params);
    CHECK(table.size() == params.order_within(1'000'000).value());
    for (const Element& g : enumerate_group(params))
      CHECK(reflection_length(g) == table.at(g));
  }
}

TEST_CASE("special-case formulas", "[length]") {
  GroupParams g212(2, 1, 2);
  CHECK(reflection_length_special(parse_element(g212, "[id;(1,1)]")) == 2);
  GroupParams g442(4, 4, 2);
  CHECK(reflection_length_special(parse_element(g442, "[id;(2,2)]")) == 2);
  CHECK_THROWS_AS(
      reflection_length_special(Element::identity(GroupParams(4, 2, 2))),
      domain_error);

  for (GroupParams params : {GroupParams(3, 1, 2), GroupParams(2, 1, 3),
                             GroupParams(4, 4, 2), GroupParams(3, 3, 3)}) {
    for (const Element& g : enumerate_group(params))
      CHECK(reflection_length_special(g) == reflection_length(g));
  }
}

TEST_CASE("subadditivity on random pairs", "[length]") {
  GroupParams params(4, 2, 3);
  std::vector<Element> all = enumerate_group(params);
  auto rng = gmpn_test::seeded_rng(2);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  for (int trial = 0; trial < 300; ++trial) {
    const Element& a = all[pick(rng)];
    const Element& b = all[pick(rng)];
    CHECK(reflection_length(multiply(a, b)) <=
          reflection_length(a) + reflection_length(b));
  }
}

TEST_CASE("partition enumeration guard", "[length]") {
  Guards guards;
  guards.max_cycles_for_partitions = 3;
  Element id = Element::identity(GroupParams(2, 1, 4)); // 4 cycles
  CHECK_THROWS_AS(enumerate_cycle_partitions(id, guards), guard_exceeded);
}
