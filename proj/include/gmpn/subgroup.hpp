#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gmpn/element.hpp"
#include "gmpn/errors.hpp"
#include "gmpn/factorization.hpp"
#include "gmpn/graph.hpp"
#include "gmpn/guards.hpp"
#include "gmpn/hurwitz.hpp"
#include "gmpn/length.hpp"
#include "gmpn/standard_form.hpp"

namespace gmpn {

// ---------------------------------------------------------------------------
// Explicit closure: the subgroup generated by the factors, at desk scale.
// ---------------------------------------------------------------------------

/** The subgroup generated by the factors of `f`, as a sorted vector of
 *  elements.  Worklist closure under left-multiplication by the factor set;
 *  since the group is finite, the generated submonoid is the subgroup.
 *  Contains the identity even when `f` is empty.  Throws guard_exceeded when
 *  the closure would pass guards.max_closure elements. */
inline std::vector<Element> generated_subgroup(const Factorization& f,
                                               const Guards& guards = {}) {
  Element id = Element::identity(f.params);

  std::vector<Element> gens;
  gens.reserve(f.size());
  for (const Reflection& t : f.factors) gens.push_back(t.to_element());

  std::set<Element> closure{id};
  std::vector<Element> work{id};
  while (!work.empty()) {
    Element x = std::move(work.back());
    work.pop_back();
    for (const Element& t : gens) {
      Element y = multiply(t, x);
      if (closure.insert(y).second) {
        if (closure.size() > guards.max_closure)
          throw guard_exceeded("generated_subgroup: closure passed the cap of " +
                               std::to_string(guards.max_closure) + " elements");
        work.push_back(std::move(y));
      }
    }
  }
  return {closure.begin(), closure.end()};
}

// ---------------------------------------------------------------------------
// Structural identification: each connected component of a shortest
// factorization generates a reflection group G(m/r, gcd(m,d)/r, n_B),
// exhibited by conjugation with an explicit diagonal element.
// ---------------------------------------------------------------------------

/** One connected component of the factorization graph: its support, the
 *  parameters of the group its factors generate, and the conjugating diagonal
 *  delta with delta t delta^-1 a true transposition for every spanning-tree
 *  factor t.  Delta is computed from the canonical representative of the
 *  component (pair weights reduced mod r, forest rebuilt from the product)
 *  and anchored with weight 0 at the smallest support vertex, so that two
 *  factorizations generating the same subgroup get identical fingerprints. */
struct ComponentFingerprint {
  std::vector<int> support;        // sorted vertices
  int r = 1;                       // gcd of m with the component cycle weights
  int d = 0;                       // component weight, canonical residue mod m
  GroupParams sub_params;          // (m/r, gcd(m,d)/r, |support|)
  std::vector<int> delta;          // diagonal weights on support, mod m

  bool operator==(const ComponentFingerprint& o) const {
    return support == o.support && r == o.r && d == o.d &&
           sub_params == o.sub_params && delta == o.delta;
  }
  bool operator!=(const ComponentFingerprint& o) const { return !(*this == o); }

  std::string str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < support.size(); ++i)
      s += (i ? "," : "") + std::to_string(support[i]);
    s += "}: " + sub_params.str() + ", r=" + std::to_string(r) +
         ", d=" + std::to_string(d) + ", delta=(";
    for (std::size_t i = 0; i < delta.size(); ++i)
      s += (i ? "," : "") + std::to_string(delta[i]);
    return s + ")";
  }
};

/** The generated subgroup of a shortest factorization, component by
 *  component: a direct product of the groups described by the component
 *  fingerprints.  Components are ordered by smallest support vertex. */
struct SubgroupFingerprint {
  GroupParams params; // ambient group
  std::vector<ComponentFingerprint> components;

  bool operator==(const SubgroupFingerprint& o) const {
    return params == o.params && components == o.components;
  }
  bool operator!=(const SubgroupFingerprint& o) const { return !(*this == o); }

  /** Order of the generated subgroup: the product of the component orders,
   *  or nullopt past `cap`. */
  std::optional<std::uint64_t> order_within(std::uint64_t cap) const {
    std::uint64_t total = 1;
    for (const ComponentFingerprint& c : components) {
      auto o = c.sub_params.order_within(cap);
      if (!o) return std::nullopt;
      if (*o != 0 && total > cap / *o) return std::nullopt;
      total *= *o;
    }
    return total;
  }

  std::string str() const {
    if (components.empty()) return "trivial";
    std::string s;
    for (std::size_t i = 0; i < components.size(); ++i)
      s += (i ? "; " : "") + components[i].str();
    return s;
  }
};

namespace detail {

/** Spanning-tree weight propagation for one block of a standard-form
 *  factorization: the tree is the first factor of every doubled-path pair
 *  plus all forest factors.  Anchored at the smallest support vertex with
 *  weight 0; along a tree edge [(i j); a] the weights satisfy w_j = w_i - a,
 *  which makes the conjugate delta t delta^-1 a true transposition. */
inline std::vector<int> block_delta(const Factorization& f,
                                    const StandardLayout::Block& b,
                                    const std::vector<int>& support) {
  const int m = f.params.m;
  const int k = static_cast<int>(b.path.size());
  std::vector<const Reflection*> tree;
  for (int q = 0; q + 1 < k; ++q) tree.push_back(&f.factors[b.first + 2 * q]);
  std::size_t rest = 2 * static_cast<std::size_t>(k - 1) +
                     (b.block_weight != 0 ? 1 : 0);
  for (std::size_t t = rest; t < b.count; ++t)
    tree.push_back(&f.factors[b.first + t]);

  std::map<int, int> w;
  w[support.front()] = 0;
  bool progressed = true;
  while (w.size() < support.size() && progressed) {
    progressed = false;
    for (const Reflection* t : tree) {
      auto wi = w.find(t->i()), wj = w.find(t->j());
      if (wi != w.end() && wj == w.end()) {
        w[t->j()] = mod_m(wi->second - t->a(), m);
        progressed = true;
      } else if (wj != w.end() && wi == w.end()) {
        w[t->i()] = mod_m(wj->second + t->a(), m);
        progressed = true;
      }
    }
  }
  if (w.size() != support.size())
    throw std::logic_error("block_delta: tree does not span the component");
  std::vector<int> out;
  out.reserve(support.size());
  for (int v : support) out.push_back(w.at(v));
  return out;
}

} // namespace detail

/** Identifies the subgroup generated by a shortest factorization, one
 *  fingerprint per connected component.  Accepts any shortest factorization:
 *  a non-standard one is normalized first (Hurwitz moves do not change the
 *  generated subgroup).  Throws when f is not shortest. */
inline SubgroupFingerprint identify_generated_subgroup(const Factorization& f,
                                                       const Guards& guards = {}) {
  Element g = product(f);
  detail::require_shortest(f, g, "identify_generated_subgroup");
  Factorization s = f;
  if (!detail::is_standard_form_impl(s, detail::standard_layout(s, g)))
    s = normalize(f, guards).standard;

  detail::StandardLayout L = detail::standard_layout(s, g);
  std::vector<std::vector<int>> weights = pair_weights(s);

  // Canonical representative: reduce each pair weight mod r and rebuild, so
  // the forest part and hence delta are independent of how s was reached.
  CyclePartition partition{f.params, {}, {}};
  std::vector<std::vector<int>> reduced;
  std::vector<int> block_r;
  for (std::size_t bi = 0; bi < L.blocks.size(); ++bi) {
    const auto& b = L.blocks[bi];
    partition.blocks.push_back(b.cycles);
    partition.block_weights.push_back(b.block_weight);
    int r = block_gcd(L.data, b.cycles);
    block_r.push_back(r);
    std::vector<int> a = weights[bi];
    for (int& x : a) x = mod_m(x, r);
    reduced.push_back(std::move(a));
  }
  Factorization canon = f.size() == 0
                            ? s
                            : build_standard_factorization(g, partition, reduced);
  detail::StandardLayout LC = detail::standard_layout(canon, g);

  SubgroupFingerprint fp{f.params, {}};
  for (std::size_t bi = 0; bi < LC.blocks.size(); ++bi) {
    const auto& b = LC.blocks[bi];
    if (b.count == 0) continue; // untouched fixed points generate nothing
    ComponentFingerprint c;
    for (int ci : b.cycles)
      for (int v : LC.data.cycles[ci].seq) c.support.push_back(v);
    std::sort(c.support.begin(), c.support.end());
    c.r = block_r[bi];
    c.d = b.block_weight;
    int gmd = static_cast<int>(std::gcd(static_cast<long long>(f.params.m),
                                        static_cast<long long>(c.d)));
    c.sub_params = GroupParams(f.params.m / c.r, gmd / c.r,
                               static_cast<int>(c.support.size()));
    c.delta = detail::block_delta(canon, b, c.support);
    fp.components.push_back(std::move(c));
  }
  return fp;
}

// ---------------------------------------------------------------------------
// Structural orbit equivalence: same induced partition and pair weights
// congruent mod r per block.  Never walks the orbit.
// ---------------------------------------------------------------------------

/** Verdict of a structural orbit comparison, with the deciding criterion. */
struct OrbitComparison {
  bool equivalent = false;
  std::string reason;
};

/** Whether two shortest factorizations of the same element belong to the same
 *  Hurwitz orbit -- equivalently, whether they generate the same subgroup.
 *  Decided structurally: both are normalized, then the induced cycle
 *  partitions must match and the pair weights of matching blocks must be
 *  congruent mod that block's r.  Throws when the products differ or either
 *  factorization is not shortest. */
inline OrbitComparison compare_orbits(const Factorization& f,
                                      const Factorization& f2,
                                      const Guards& guards = {}) {
  if (f.params != f2.params)
    throw domain_error("same_orbit: factorizations live in different groups");
  Element g = product(f);
  if (!(product(f2) == g)) throw domain_error("same_orbit: products differ");
  detail::require_shortest(f, g, "same_orbit");
  detail::require_shortest(f2, g, "same_orbit");

  auto to_standard = [&](const Factorization& x) {
    if (detail::is_standard_form_impl(x, detail::standard_layout(x, g)))
      return x;
    return normalize(x, guards).standard;
  };
  Factorization s1 = to_standard(f), s2 = to_standard(f2);
  detail::StandardLayout L1 = detail::standard_layout(s1, g);
  detail::StandardLayout L2 = detail::standard_layout(s2, g);

  bool partitions_match = L1.blocks.size() == L2.blocks.size();
  for (std::size_t bi = 0; partitions_match && bi < L1.blocks.size(); ++bi)
    if (L1.blocks[bi].cycles != L2.blocks[bi].cycles) partitions_match = false;
  if (!partitions_match) return {false, "partition mismatch"};

  std::vector<std::vector<int>> w1 = pair_weights(s1), w2 = pair_weights(s2);
  for (std::size_t bi = 0; bi < L1.blocks.size(); ++bi) {
    int r = block_gcd(L1.data, L1.blocks[bi].cycles);
    for (std::size_t q = 0; q < w1[bi].size(); ++q)
      if (mod_m(w1[bi][q] - w2[bi][q], r) != 0)
        return {false, "pair-weight residue mismatch"};
  }
  return {true, "same partition and pair-weight residues"};
}

inline bool same_orbit(const Factorization& f, const Factorization& f2,
                       const Guards& guards = {}) {
  return compare_orbits(f, f2, guards).equivalent;
}

} // namespace gmpn
