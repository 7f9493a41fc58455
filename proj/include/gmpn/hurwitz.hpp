#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <numeric>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "gmpn/cycles.hpp"
#include "gmpn/errors.hpp"
#include "gmpn/factorization.hpp"
#include "gmpn/guards.hpp"
#include "gmpn/length.hpp"

namespace gmpn {

/** A braid word in application order: entry +i means the Hurwitz move
 *  sigma_i, entry -i its inverse; the first entry acts first. */
using BraidWord = std::vector<int>;

inline BraidWord inverse_word(const BraidWord& w) {
  BraidWord inv(w.rbegin(), w.rend());
  for (int& letter : inv) letter = -letter;
  return inv;
}

/** w repeated e times (|e| inverse copies when e < 0). */
inline BraidWord power_word(const BraidWord& w, long long e) {
  BraidWord base = e >= 0 ? w : inverse_word(w);
  BraidWord out;
  out.reserve(w.size() * static_cast<std::size_t>(e < 0 ? -e : e));
  for (long long k = e < 0 ? -e : e; k > 0; --k)
    out.insert(out.end(), base.begin(), base.end());
  return out;
}

/** Shift every letter index by `offset`, keeping signs: used to lift a word
 *  acting on a factor range to the whole factorization. */
inline BraidWord offset_word(const BraidWord& w, int offset) {
  BraidWord out = w;
  for (int& letter : out) letter += letter > 0 ? offset : -offset;
  return out;
}

inline std::string print(const BraidWord& w) {
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out += " ";
    out += std::to_string(w[k]);
  }
  return out;
}

inline BraidWord parse_braid_word(std::string_view text) {
  detail::Cursor cur{text};
  BraidWord w;
  while (!cur.done()) {
    long long v = cur.integer();
    if (v == 0) throw parse_error("braid letters are nonzero signed indices");
    w.push_back(static_cast<int>(v));
  }
  return w;
}

/** One Hurwitz move.  sigma_i replaces (t_i, t_{i+1}) by
 *  (t_{i+1}, t_{i+1}^{-1} t_i t_{i+1}); its inverse replaces it by
 *  (t_i t_{i+1} t_i^{-1}, t_i).  1 <= i <= l-1. */
inline Factorization hurwitz_move(const Factorization& f, int i, bool inv = false) {
  if (i < 1 || i >= static_cast<int>(f.size()))
    throw domain_error("hurwitz_move: index " + std::to_string(i) +
                       " out of range 1.." + std::to_string(f.size() ? f.size() - 1 : 0));
  const Element a = f.factors[i - 1].to_element();
  const Element b = f.factors[i].to_element();
  Factorization out = f;
  if (!inv) {
    auto conj = as_reflection(conjugate(a, b)); // b^{-1} a b
    if (!conj) throw domain_error("hurwitz_move: conjugate is not a reflection");
    out.factors[i - 1] = f.factors[i];
    out.factors[i] = *conj;
  } else {
    auto conj = as_reflection(multiply(multiply(a, b), inverse(a))); // a b a^{-1}
    if (!conj) throw domain_error("hurwitz_move: conjugate is not a reflection");
    out.factors[i - 1] = *conj;
    out.factors[i] = f.factors[i - 1];
  }
  return out;
}

/** Applies a braid word left to right. */
inline Factorization apply_braid(const Factorization& f, const BraidWord& w) {
  Factorization cur = f;
  for (int letter : w) cur = hurwitz_move(cur, letter > 0 ? letter : -letter, letter < 0);
  return cur;
}

/** All shortest reflection factorizations of g, enumerated recursively by
 *  first factor: r extends to a shortest factorization of g exactly when
 *  l_R(r^{-1} g) = l_R(g) - 1.  Deterministic order (reflections tried in
 *  enumerate_reflections order at every level); results are distinct by
 *  construction.  Guarded by guards.max_factorizations. */
inline std::vector<Factorization> enumerate_shortest_factorizations(
    const Element& g, const Guards& guards = {}) {
  std::unordered_map<std::string, int> len_cache;
  std::function<int(const Element&)> len = [&](const Element& e) {
    std::string key = e.key();
    auto it = len_cache.find(key);
    if (it != len_cache.end()) return it->second;
    int l = reflection_length(e, guards);
    len_cache.emplace(std::move(key), l);
    return l;
  };

  std::vector<Reflection> refl = enumerate_reflections(g.params());
  std::vector<Element> refl_inverse;
  refl_inverse.reserve(refl.size());
  for (const Reflection& r : refl) refl_inverse.push_back(inverse(r.to_element()));

  std::vector<Factorization> out;
  std::vector<Reflection> prefix;
  std::uint64_t produced = 0;
  std::function<void(const Element&, int)> descend = [&](const Element& rest,
                                                         int remaining) {
    if (remaining == 0) {
      if (++produced > guards.max_factorizations)
        throw guard_exceeded(
            "enumerate_shortest_factorizations: more than " +
            std::to_string(guards.max_factorizations) + " factorizations");
      out.push_back(Factorization{g.params(), prefix});
      return;
    }
    for (std::size_t k = 0; k < refl.size(); ++k) {
      Element next = multiply(refl_inverse[k], rest);
      if (len(next) != remaining - 1) continue;
      prefix.push_back(refl[k]);
      descend(next, remaining - 1);
      prefix.pop_back();
    }
  };
  descend(g, len(g));
  return out;
}

/** Hurwitz-orbit decomposition by BFS with canonical hashing.  `orbits` hold
 *  every factorization reachable from the inputs (discovery order);
 *  `orbit_of[k]` is the orbit index of input k.  Inputs must share a product.
 *  When the input set is closed under the action (e.g. all shortest
 *  factorizations of one element), orbit sizes sum to the input count. */
struct OrbitPartition {
  std::vector<std::vector<Factorization>> orbits;
  std::vector<std::size_t> orbit_of;
};

inline OrbitPartition hurwitz_orbit_partition(const std::vector<Factorization>& fs,
                                              const Guards& guards = {}) {
  OrbitPartition result;
  if (fs.empty()) return result;
  Element g = product(fs[0]);
  for (const Factorization& f : fs)
    if (product(f) != g)
      throw domain_error("hurwitz_orbit_partition: inputs do not share a product");

  std::unordered_map<std::string, std::size_t> orbit_of_key;
  std::uint64_t visited = 0;
  for (std::size_t k = 0; k < fs.size(); ++k) {
    std::string key = fs[k].key();
    auto hit = orbit_of_key.find(key);
    if (hit != orbit_of_key.end()) {
      result.orbit_of.push_back(hit->second);
      continue;
    }
    std::size_t orbit_index = result.orbits.size();
    result.orbits.emplace_back();
    std::vector<Factorization>& orbit = result.orbits.back();
    orbit_of_key.emplace(std::move(key), orbit_index);
    orbit.push_back(fs[k]);
    const int top = static_cast<int>(fs[k].size()) - 1;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      if (++visited > guards.max_states)
        throw guard_exceeded("hurwitz_orbit_partition: more than " +
                             std::to_string(guards.max_states) + " states");
      // orbit grows while we scan it; index access stays valid.
      for (int i = 1; i <= top; ++i) {
        for (bool inv : {false, true}) {
          Factorization next = hurwitz_move(orbit[head], i, inv);
          auto [it, inserted] = orbit_of_key.emplace(next.key(), orbit_index);
          if (inserted) orbit.push_back(std::move(next));
        }
      }
    }
    result.orbit_of.push_back(orbit_index);
  }
  return result;
}

/** gcd(m, k_1, ..., k_{|B|}) over the cycle weights of a block. */
inline int block_gcd(const CycleData& data, const std::vector<int>& block) {
  int r = data.params.m;
  for (int ci : block) r = std::gcd(r, data.cycles[ci].weight);
  return r;
}

/** Number of Hurwitz orbits on the shortest factorizations of g, by the
 *  closed formula  sum over maximum partitions P of  prod_B r(B)^(|B|-1). */
inline std::uint64_t count_orbits_formula(const Element& g, const Guards& guards = {}) {
  CycleData data = cycle_data(g);
  std::uint64_t total = 0;
  for (const CyclePartition& partition : max_cycle_partitions(data, guards)) {
    std::uint64_t term = 1;
    for (const auto& block : partition.blocks) {
      std::uint64_t r = static_cast<std::uint64_t>(block_gcd(data, block));
      for (std::size_t e = 1; e < block.size(); ++e) {
        if (term > UINT64_MAX / r)
          throw domain_error("count_orbits_formula: count exceeds 64-bit range");
        term *= r;
      }
    }
    if (total > UINT64_MAX - term)
      throw domain_error("count_orbits_formula: count exceeds 64-bit range");
    total += term;
  }
  return total;
}

/** The Hurwitz action on shortest factorizations of g is transitive iff the
 *  maximum cycle partition is unique and every block B has |B| = 1 or
 *  r(B) = 1. */
inline bool is_hurwitz_transitive(const Element& g, const Guards& guards = {}) {
  CycleData data = cycle_data(g);
  std::vector<CyclePartition> maxima = max_cycle_partitions(data, guards);
  if (maxima.size() != 1) return false;
  for (const auto& block : maxima[0].blocks)
    if (block.size() > 1 && block_gcd(data, block) != 1) return false;
  return true;
}

} // namespace gmpn
