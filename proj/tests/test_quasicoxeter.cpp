#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "gmpn/enumerate.hpp"
#include "gmpn/quasicoxeter.hpp"
#include "gmpn/subgroup.hpp"
#include "gmpn/text.hpp"
#include "test_helpers.hpp"

using namespace gmpn;

TEST_CASE("quasi-Coxeter report examples", "[qc]") {
  GroupParams g212(2, 1, 2);

  SECTION("a single 2-cycle of weight 1 generates") {
    QcReport rep = qc_report(parse_element(g212, "[(1 2); (1,0)]"));
    CHECK(rep.cond_i);
    CHECK(rep.cond_ii);
    CHECK(rep.cond_iii);
    CHECK(rep.weak);
    CHECK(rep.strong);
  }

  SECTION("the full-weight diagonal does not") {
    QcReport rep = qc_report(parse_element(g212, "[id; (1,1)]"));
    CHECK(rep.cond_i);        // gcd(2, 1, 1) = 1
    CHECK_FALSE(rep.cond_ii); // gcd(2, 2) = 2 != 1
    CHECK_FALSE(rep.cond_iii); // mod p = 1 every subset sums to zero
    CHECK_FALSE(rep.weak);
    CHECK_FALSE(rep.strong);
  }

  SECTION("the identity never does for n >= 2") {
    CHECK_FALSE(qc_report(Element::identity(g212)).weak);
    CHECK_FALSE(qc_report(Element::identity(GroupParams(2, 2, 2))).weak);
    CHECK_FALSE(qc_report(Element::identity(GroupParams(3, 3, 3))).weak);
  }

  SECTION("the three conditions are independent dials") {
    // i fails alone: single cycle of imprimitive weight.
    QcReport a = qc_report(parse_element(GroupParams(4, 2, 2), "[(1 2); (1,1)]"));
    CHECK_FALSE(a.cond_i);
    CHECK(a.cond_ii);
    CHECK(a.cond_iii);
    // iii fails alone: a single fixed point already sums to 0 mod p.
    QcReport b = qc_report(parse_element(GroupParams(4, 2, 3), "[id; (1,2,3)]"));
    CHECK(b.cond_i);
    CHECK(b.cond_ii);
    CHECK_FALSE(b.cond_iii);
    // All three hold: the group is generated.
    QcReport c = qc_report(parse_element(GroupParams(4, 2, 2), "[id; (1,1)]"));
    CHECK(c.cond_i);
    CHECK(c.cond_ii);
    CHECK(c.cond_iii);
    CHECK(c.weak);
  }
}

TEST_CASE("rank-length classification examples", "[qc]") {
  SECTION("p = 1: one cycle of primitive weight") {
    for (GroupParams params : {GroupParams(3, 1, 3), GroupParams(4, 1, 2),
                               GroupParams(2, 1, 3)}) {
      std::vector<int> images(params.n);
      for (int v = 1; v <= params.n; ++v) images[v - 1] = v % params.n + 1;
      std::vector<long long> w(params.n, 0);
      w[0] = 1;
      RankLengthClassification cls =
          classify_rank_length(params, Element(params, images, w));
      CHECK(cls.qc_rank_length);
      CHECK(cls.length == params.n);
    }
    RankLengthClassification imprimitive = classify_rank_length(
        GroupParams(4, 1, 2), parse_element(GroupParams(4, 1, 2), "[(1 2); (2,0)]"));
    CHECK_FALSE(imprimitive.qc_rank_length);
    RankLengthClassification split = classify_rank_length(
        GroupParams(4, 1, 2), parse_element(GroupParams(4, 1, 2), "[id; (1,1)]"));
    CHECK_FALSE(split.qc_rank_length);
  }

  SECTION("p = m: two cycles of primitive weight") {
    GroupParams g332(3, 3, 2);
    RankLengthClassification cls =
        classify_rank_length(g332, parse_element(g332, "[id; (1,2)]"));
    CHECK(cls.qc_rank_length);
    CHECK(cls.length == 2);
    // A 2-cycle is a single cycle: too few.
    RankLengthClassification one =
        classify_rank_length(g332, parse_element(g332, "[(1 2); (1,2)]"));
    CHECK_FALSE(one.qc_rank_length);
  }

  SECTION("1 < p < m: nothing qualifies") {
    GroupParams g422(4, 2, 2);
    for (const Element& g : enumerate_group(g422)) {
      RankLengthClassification cls = classify_rank_length(g422, g);
      CHECK_FALSE(cls.qc_rank_length);
      if (reflection_length(g) == 2) CHECK_FALSE(cls.qc_rank_length);
    }
  }

  SECTION("m = 1: the long cycle generates but is too short") {
    GroupParams s3(1, 1, 3);
    Element coxeter = parse_element(s3, "[(1 2 3); (0,0,0)]");
    CHECK(qc_report(coxeter).weak);
    RankLengthClassification cls = classify_rank_length(s3, coxeter);
    CHECK_FALSE(cls.qc_rank_length);
    CHECK(cls.length == 2);
    CHECK(cls.reason.find("length") != std::string::npos);
  }

  SECTION("wrong ambient group") {
    GroupParams g212(2, 1, 2);
    CHECK_THROWS_AS(
        classify_rank_length(GroupParams(3, 1, 2), Element::identity(g212)),
        domain_error);
  }
}

TEST_CASE("quasi-Coxeter flags across small groups", "[qc][exhaustive]") {
  for (GroupParams params :
       {GroupParams(1, 1, 3), GroupParams(2, 1, 2), GroupParams(2, 2, 2),
        GroupParams(3, 3, 2), GroupParams(3, 1, 2), GroupParams(4, 4, 2),
        GroupParams(4, 2, 2), GroupParams(2, 2, 3), GroupParams(2, 1, 3),
        GroupParams(3, 3, 3)}) {
    CAPTURE(params.str());
    auto order = params.order_within(1'000'000);
    REQUIRE(order.has_value());
    for (const Element& g : enumerate_group(params)) {
      CAPTURE(print(g));
      QcReport rep = qc_report(g);
      CHECK(rep.weak == (rep.cond_i && rep.cond_ii && rep.cond_iii));
      CHECK(rep.strong == rep.weak);

      // The meaning of weak/strong, checked against every shortest
      // factorization's generated subgroup.
      bool any_generates = false, all_generate = true;
      for (const Factorization& f : enumerate_shortest_factorizations(g)) {
        bool whole = generated_subgroup(f).size() == *order;
        any_generates = any_generates || whole;
        all_generate = all_generate && whole;
      }
      CHECK(rep.weak == any_generates);
      CHECK(rep.strong == all_generate);

      // Quasi-Coxeter elements have a single Hurwitz orbit.
      if (rep.weak) CHECK(count_orbits_formula(g) == 1);

      // The classification is exactly "generates and has full length".
      RankLengthClassification cls = classify_rank_length(params, g);
      CHECK(cls.length == reflection_length(g));
      CHECK(cls.qc_rank_length == (rep.weak && cls.length == params.n));
      CHECK_FALSE(cls.reason.empty());
    }
  }
}
