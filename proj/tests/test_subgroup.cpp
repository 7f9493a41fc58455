#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "gmpn/enumerate.hpp"
#include "gmpn/subgroup.hpp"
#include "gmpn/text.hpp"
#include "test_helpers.hpp"

using namespace gmpn;

namespace {

const char* kWorkedFactorization =
    "[(1 3); 1]; [(1 3); 23]; [(3 6); 0]; [(3 6); 29]; [id; (0,0,0,0,0,5)]; "
    "[(1 2); 1]; [(3 4); 2]; [(4 5); 3]";

/** Independent closure oracle: right-multiplication fixpoint over the factor
 *  set together with the factor inverses.  The library closes from the left
 *  and leans on finiteness to skip inverses; this does neither. */
std::set<Element> oracle_subgroup(const Factorization& f) {
  std::vector<Element> gens;
  for (const Reflection& t : f.factors) {
    gens.push_back(t.to_element());
    gens.push_back(inverse(t.to_element()));
  }
  std::set<Element> s{Element::identity(f.params)};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Element> cur(s.begin(), s.end());
    for (const Element& x : cur)
      for (const Element& g : gens)
        if (s.insert(multiply(x, g)).second) grew = true;
  }
  return s;
}

/** Membership in the group a fingerprint describes, after conjugating the
 *  closure by delta: vertices outside every support are fixed with weight 0;
 *  each component's vertices map within the component with weights divisible
 *  by its r; each component's total weight is divisible by gcd(m, d). */
bool in_embedded_product(const Element& y, const SubgroupFingerprint& fp) {
  const GroupParams& P = fp.params;
  std::map<int, std::size_t> comp_of;
  for (std::size_t ci = 0; ci < fp.components.size(); ++ci)
    for (int v : fp.components[ci].support) comp_of[v] = ci;
  std::vector<long long> comp_weight(fp.components.size(), 0);
  for (int v = 1; v <= P.n; ++v) {
    auto it = comp_of.find(v);
    if (it == comp_of.end()) {
      if (y.image(v) != v || y.weight(v) != 0) return false;
      continue;
    }
    auto jt = comp_of.find(y.image(v));
    if (jt == comp_of.end() || jt->second != it->second) return false;
    if (y.weight(v) % fp.components[it->second].r != 0) return false;
    comp_weight[it->second] += y.weight(v);
  }
  for (std::size_t ci = 0; ci < fp.components.size(); ++ci) {
    long long gmd = std::gcd(static_cast<long long>(P.m),
                             static_cast<long long>(fp.components[ci].d));
    if (comp_weight[ci] % gmd != 0) return false;
  }
  return true;
}

/** The conjugating diagonal [id; w] a fingerprint carries: delta weights on
 *  each support, zero elsewhere.  Its weight sum owes nothing to p, so it
 *  lives in the overgroup G(m, 1, n). */
Element delta_element(const SubgroupFingerprint& fp) {
  GroupParams ambient(fp.params.m, 1, fp.params.n);
  std::vector<int> images(ambient.n);
  std::iota(images.begin(), images.end(), 1);
  std::vector<long long> w(ambient.n, 0);
  for (const ComponentFingerprint& c : fp.components)
    for (std::size_t i = 0; i < c.support.size(); ++i)
      w[c.support[i] - 1] = c.delta[i];
  return Element(ambient, images, w);
}

/** The same matrix seen in G(m, 1, n), where conjugation by any diagonal
 *  stays legal. */
Element lift(const Element& x) {
  GroupParams ambient(x.m(), 1, x.n());
  std::vector<int> images(x.n());
  std::vector<long long> w(x.n());
  for (int v = 1; v <= x.n(); ++v) {
    images[v - 1] = x.image(v);
    w[v - 1] = x.weight(v);
  }
  return Element(ambient, images, w);
}

std::vector<std::size_t> sample_indices(std::size_t count, std::size_t cap,
                                        std::mt19937_64& rng) {
  std::vector<std::size_t> idx(count);
  std::iota(idx.begin(), idx.end(), 0);
  if (count <= cap) return idx;
  std::shuffle(idx.begin(), idx.end(), rng);
  idx.resize(cap);
  std::sort(idx.begin(), idx.end());
  return idx;
}

} // namespace

TEST_CASE("generated subgroup closure", "[subgroup]") {
  GroupParams g212(2, 1, 2);
  Factorization transpositions =
      parse_factorization(g212, "[(1 2); 0]; [(1 2); 1]");
  Factorization diagonals = parse_factorization(g212, "[id; (1,0)]; [id; (0,1)]");

  SECTION("two transpositions over the same edge") {
    std::vector<Element> closure = generated_subgroup(transpositions);
    REQUIRE(closure.size() == 4);
    CHECK(std::is_sorted(closure.begin(), closure.end()));
    std::set<Element> got(closure.begin(), closure.end());
    std::set<Element> want{parse_element(g212, "[id; (0,0)]"),
                           parse_element(g212, "[(1 2); (0,0)]"),
                           parse_element(g212, "[(1 2); (1,1)]"),
                           parse_element(g212, "[id; (1,1)]")};
    CHECK(got == want);
  }

  SECTION("two diagonal reflections") {
    std::vector<Element> closure = generated_subgroup(diagonals);
    REQUIRE(closure.size() == 4);
    for (const Element& x : closure) CHECK(x.is_identity_perm());
  }

  SECTION("empty factorization") {
    std::vector<Element> closure = generated_subgroup(Factorization{g212, {}});
    REQUIRE(closure.size() == 1);
    CHECK(closure[0] == Element::identity(g212));
  }

  SECTION("matches the inverse-closed oracle") {
    for (const Factorization& f : {transpositions, diagonals}) {
      std::vector<Element> closure = generated_subgroup(f);
      std::set<Element> want = oracle_subgroup(f);
      CHECK(std::set<Element>(closure.begin(), closure.end()) == want);
    }
  }

  SECTION("closure guard") {
    GroupParams g3056(30, 5, 6);
    Factorization worked = parse_factorization(g3056, kWorkedFactorization);
    // The factors generate all of G(30,5,6): ~1.1e11 elements.
    CHECK_THROWS_AS(generated_subgroup(worked), guard_exceeded);
    Guards tight;
    tight.max_closure = 3;
    CHECK_NOTHROW(generated_subgroup(Factorization{g3056, {}}, tight));
    Guards tiny;
    tiny.max_closure = 2;
    Factorization small = parse_factorization(GroupParams(2, 1, 2),
                                              "[(1 2); 0]; [(1 2); 1]");
    CHECK_THROWS_AS(generated_subgroup(small, tiny), guard_exceeded);
  }
}

TEST_CASE("fingerprint examples", "[subgroup]") {
  GroupParams g212(2, 1, 2);

  SECTION("edge pair: one component isomorphic to G(2,2,2)") {
    Factorization f = parse_factorization(g212, "[(1 2); 0]; [(1 2); 1]");
    SubgroupFingerprint fp = identify_generated_subgroup(f);
    REQUIRE(fp.components.size() == 1);
    const ComponentFingerprint& c = fp.components[0];
    CHECK(c.support == std::vector<int>{1, 2});
    CHECK(c.r == 1);
    CHECK(c.d == 0);
    CHECK(c.sub_params == GroupParams(2, 2, 2));
    REQUIRE(fp.order_within(100).has_value());
    CHECK(*fp.order_within(100) == 4);
    CHECK(c.str().find("G(2,2,2)") != std::string::npos);
  }

  SECTION("diagonal pair: two components isomorphic to G(2,1,1)") {
    Factorization f = parse_factorization(g212, "[id; (1,0)]; [id; (0,1)]");
    SubgroupFingerprint fp = identify_generated_subgroup(f);
    REQUIRE(fp.components.size() == 2);
    CHECK(fp.components[0].support == std::vector<int>{1});
    CHECK(fp.components[1].support == std::vector<int>{2});
    for (const ComponentFingerprint& c : fp.components) {
      CHECK(c.r == 1);
      CHECK(c.d == 1);
      CHECK(c.sub_params == GroupParams(2, 1, 1));
      CHECK(c.delta == std::vector<int>{0});
    }
    REQUIRE(fp.order_within(100).has_value());
    CHECK(*fp.order_within(100) == 4);
  }

  SECTION("connected with coprime cycle weights and gcd(m,d)=p: everything") {
    GroupParams g3056(30, 5, 6);
    Factorization worked = parse_factorization(g3056, kWorkedFactorization);
    SubgroupFingerprint fp = identify_generated_subgroup(worked);
    REQUIRE(fp.components.size() == 1);
    const ComponentFingerprint& c = fp.components[0];
    CHECK(c.support == std::vector<int>{1, 2, 3, 4, 5, 6});
    CHECK(c.r == 1);
    CHECK(c.d == 5);
    CHECK(c.sub_params == g3056);
  }

  SECTION("reduced pair weights shift delta") {
    GroupParams g442(4, 4, 2);
    Factorization even = parse_factorization(g442, "[(1 2); 0]; [(1 2); 2]");
    Factorization odd = parse_factorization(g442, "[(1 2); 1]; [(1 2); 3]");
    SubgroupFingerprint fpe = identify_generated_subgroup(even);
    SubgroupFingerprint fpo = identify_generated_subgroup(odd);
    REQUIRE(fpe.components.size() == 1);
    REQUIRE(fpo.components.size() == 1);
    CHECK(fpe.components[0].r == 2);
    CHECK(fpo.components[0].r == 2);
    CHECK(fpe.components[0].sub_params == GroupParams(2, 2, 2));
    CHECK(fpo.components[0].sub_params == GroupParams(2, 2, 2));
    CHECK(fpe.components[0].delta == std::vector<int>{0, 0});
    CHECK(fpo.components[0].delta == std::vector<int>{0, 3});
    CHECK(fpe != fpo); // different subgroups: delta tells them apart
  }

  SECTION("empty factorization is trivial") {
    SubgroupFingerprint fp =
        identify_generated_subgroup(Factorization{g212, {}});
    CHECK(fp.components.empty());
    CHECK(fp.str() == "trivial");
    REQUIRE(fp.order_within(100).has_value());
    CHECK(*fp.order_within(100) == 1);
  }

  SECTION("rejects non-shortest input") {
    Factorization stutter = parse_factorization(g212, "[(1 2); 0]; [(1 2); 0]");
    CHECK_THROWS_AS(identify_generated_subgroup(stutter), domain_error);
  }
}

TEST_CASE("orbit equivalence examples", "[subgroup]") {
  GroupParams g212(2, 1, 2);
  Factorization ts = parse_factorization(g212, "[(1 2); 0]; [(1 2); 1]");
  Factorization st = parse_factorization(g212, "[(1 2); 1]; [(1 2); 0]");
  Factorization ds = parse_factorization(g212, "[id; (1,0)]; [id; (0,1)]");

  CHECK(same_orbit(ts, st));
  CHECK(same_orbit(st, ts));
  CHECK_FALSE(same_orbit(ts, ds));
  CHECK_FALSE(same_orbit(ds, ts));
  CHECK(same_orbit(ts, ts));
  CHECK(same_orbit(ds, ds));

  GroupParams g3056(30, 5, 6);
  Factorization worked = parse_factorization(g3056, kWorkedFactorization);
  CHECK(same_orbit(worked, worked));

  SECTION("weight residues mod r decide the congruence") {
    GroupParams g442(4, 4, 2);
    Factorization f0 = parse_factorization(g442, "[(1 2); 0]; [(1 2); 2]");
    Factorization f2 = parse_factorization(g442, "[(1 2); 2]; [(1 2); 0]");
    Factorization f1 = parse_factorization(g442, "[(1 2); 1]; [(1 2); 3]");
    CHECK(same_orbit(f0, f2));
    CHECK_FALSE(same_orbit(f0, f1));
    CHECK_FALSE(same_orbit(f2, f1));
  }

  SECTION("errors") {
    Factorization other = parse_factorization(g212, "[(1 2); 0]");
    Factorization one = parse_factorization(g212, "[(1 2); 1]");
    CHECK_THROWS_AS(same_orbit(other, one), domain_error); // products differ
    Factorization stutter = parse_factorization(g212, "[(1 2); 0]; [(1 2); 0]");
    Factorization empty{g212, {}};
    CHECK_THROWS_AS(same_orbit(empty, stutter), domain_error); // not shortest
    CHECK_THROWS_AS(same_orbit(stutter, empty), domain_error);
    GroupParams g312(3, 1, 2);
    Factorization foreign = parse_factorization(g312, "[(1 2); 0]");
    Factorization local = parse_factorization(g212, "[(1 2); 0]");
    CHECK_THROWS_AS(same_orbit(local, foreign), domain_error);
  }
}

TEST_CASE("subgroup structure across small groups", "[subgroup][exhaustive]") {
  std::mt19937_64 rng = gmpn_test::seeded_rng(21);
  for (GroupParams params :
       {GroupParams(2, 1, 2), GroupParams(2, 2, 2), GroupParams(3, 3, 2),
        GroupParams(3, 1, 2), GroupParams(4, 4, 2), GroupParams(4, 2, 2),
        GroupParams(2, 1, 3), GroupParams(2, 2, 3), GroupParams(3, 3, 3)}) {
    CAPTURE(params.str());
    for (const Element& g : enumerate_group(params)) {
      CAPTURE(print(g));
      std::vector<Factorization> fs = enumerate_shortest_factorizations(g);
      OrbitPartition orbits = hurwitz_orbit_partition(fs);

      // Index of one representative per orbit, then a sample of further
      // factorizations to test against the representatives.
      std::vector<std::size_t> reps;
      {
        std::set<std::size_t> seen;
        for (std::size_t i = 0; i < fs.size(); ++i)
          if (seen.insert(orbits.orbit_of[i]).second) reps.push_back(i);
      }
      std::vector<std::size_t> picks = sample_indices(fs.size(), 5, rng);
      for (std::size_t r : reps)
        if (std::find(picks.begin(), picks.end(), r) == picks.end())
          picks.push_back(r);

      std::map<std::size_t, std::vector<Element>> closure;
      std::map<std::size_t, SubgroupFingerprint> fp;
      for (std::size_t i : picks) {
        closure[i] = generated_subgroup(fs[i]);
        fp[i] = identify_generated_subgroup(fs[i]);
      }

      for (std::size_t i : picks) {
        CAPTURE(print(fs[i]));
        const std::vector<Element>& cl = closure[i];
        const SubgroupFingerprint& f = fp[i];

        // Structure theorem: the closure has the order the fingerprint
        // predicts, and conjugating it by delta gives exactly the standard
        // copy of the component product (membership plus matching size).
        auto order = f.order_within(1'000'000);
        REQUIRE(order.has_value());
        CHECK(*order == cl.size());
        Element d = delta_element(f);
        Element dinv = inverse(d);
        bool embedded = true;
        std::size_t diagonal_in_closure = 0;
        for (const Element& x : cl) {
          if (!in_embedded_product(multiply(multiply(d, lift(x)), dinv), f))
            embedded = false;
          if (x.is_identity_perm()) ++diagonal_in_closure;
        }
        CHECK(embedded);

        // Diagonal part of the closure: weights divisible by r on each
        // component, component total divisible by gcd(m, d), zero elsewhere.
        std::uint64_t predicted_diagonal = 1;
        for (const ComponentFingerprint& c : f.components) {
          std::uint64_t count = 1;
          for (std::size_t v = 0; v < c.support.size(); ++v)
            count *= static_cast<std::uint64_t>(c.sub_params.m);
          predicted_diagonal *= count / c.sub_params.p;
        }
        CHECK(diagonal_in_closure == predicted_diagonal);
        for (const Element& x : cl)
          if (x.is_identity_perm()) CHECK(in_embedded_product(x, f));
      }

      // The braid action fixes the closure pointwise as a set.
      if (!fs.empty() && fs[0].size() >= 2) {
        std::size_t i = picks[rng() % picks.size()];
        BraidWord w;
        int span = static_cast<int>(fs[i].size()) - 1;
        for (int k = 0; k < 6; ++k) {
          int letter = 1 + static_cast<int>(rng() % span);
          w.push_back(rng() % 2 ? letter : -letter);
        }
        CHECK(generated_subgroup(apply_braid(fs[i], w)) == closure[i]);
      }

      // Structural equivalence against the orbit search, closure equality,
      // and fingerprint equality: all four decisions must coincide.
      for (std::size_t i : picks) {
        for (std::size_t r : reps) {
          bool via_orbit = orbits.orbit_of[i] == orbits.orbit_of[r];
          bool via_structure = same_orbit(fs[i], fs[r]);
          bool via_closure = closure[i] == closure[r];
          bool via_fingerprint = fp[i] == fp[r];
          CAPTURE(print(fs[i]), print(fs[r]));
          CHECK(via_structure == via_orbit);
          CHECK(via_closure == via_orbit);
          CHECK(via_fingerprint == via_orbit);
        }
      }
    }
  }
}
