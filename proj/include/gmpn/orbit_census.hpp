#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gmpn/factorization.hpp"
#include "gmpn/guards.hpp"
#include "gmpn/hurwitz.hpp"
#include "gmpn/length.hpp"
#include "gmpn/subgroup.hpp"

namespace gmpn {

/** One Hurwitz orbit, aggregated for reporting: its cardinality, its
 *  lexicographically least member in canonical print order, and -- when the
 *  factorizations are shortest -- the generated-subgroup fingerprint every
 *  member shares. */
struct OrbitRecord {
  std::size_t size = 0;
  Factorization representative;
  std::optional<SubgroupFingerprint> fingerprint;
};

/** The orbit partition of a family of same-product factorizations, with
 *  records ordered by representative.  Sizes sum back to the family size. */
struct OrbitCensus {
  std::vector<OrbitRecord> orbits;

  std::size_t total() const {
    std::size_t t = 0;
    for (const OrbitRecord& o : orbits) t += o.size;
    return t;
  }
};

inline OrbitCensus hurwitz_orbits(const std::vector<Factorization>& fs,
                                  const Guards& guards = {}) {
  OrbitCensus census;
  if (fs.empty()) return census;
  OrbitPartition partition = hurwitz_orbit_partition(fs, guards);
  Element g = product(fs[0]);
  bool shortest =
      static_cast<int>(fs[0].size()) == reflection_length(g, guards);
  for (const std::vector<Factorization>& orbit : partition.orbits) {
    OrbitRecord rec;
    rec.size = orbit.size();
    const Factorization* least = &orbit.front();
    std::string least_text = print(*least);
    for (const Factorization& f : orbit) {
      std::string text = print(f);
      if (text < least_text) {
        least = &f;
        least_text = std::move(text);
      }
    }
    rec.representative = *least;
    if (shortest)
      rec.fingerprint = identify_generated_subgroup(rec.representative, guards);
    census.orbits.push_back(std::move(rec));
  }
  std::sort(census.orbits.begin(), census.orbits.end(),
            [](const OrbitRecord& a, const OrbitRecord& b) {
              return print(a.representative) < print(b.representative);
            });
  return census;
}

} // namespace gmpn
