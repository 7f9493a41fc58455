#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gmpn/element.hpp"
#include "gmpn/errors.hpp"
#include "gmpn/reflection.hpp"
#include "gmpn/text.hpp"

namespace gmpn {

/** An ordered tuple of reflections (t_1, ..., t_l), a candidate factorization
 *  of its left-to-right product t_1 t_2 ... t_l. */
struct Factorization {
  GroupParams params;
  std::vector<Reflection> factors;

  std::size_t size() const { return factors.size(); }

  bool operator==(const Factorization& o) const {
    return params == o.params && factors == o.factors;
  }
  bool operator!=(const Factorization& o) const { return !(*this == o); }

  /// Concatenated factor keys; canonical hashing key for orbit searches.
  std::string key() const {
    std::string k;
    k.reserve(5 * factors.size());
    for (const Reflection& r : factors) k += r.key();
    return k;
  }
};

inline Element product(const Factorization& f) {
  Element g = Element::identity(f.params);
  for (const Reflection& r : f.factors) g = multiply(g, r.to_element());
  return g;
}

/** "t_1; t_2; ...; t_l" with each factor in its canonical reflection form.
 *  The empty factorization prints as the empty string. */
inline std::string print(const Factorization& f) {
  std::string out;
  for (std::size_t k = 0; k < f.factors.size(); ++k) {
    if (k) out += "; ";
    out += print(f.factors[k]);
  }
  return out;
}

inline Factorization parse_factorization(const GroupParams& params,
                                         std::string_view text) {
  Factorization f{params, {}};
  for (std::string_view piece : split_top_level(text))
    f.factors.push_back(parse_reflection(params, piece));
  return f;
}

} // namespace gmpn
