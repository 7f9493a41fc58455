#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "gmpn/element.hpp"
#include "gmpn/errors.hpp"
#include "gmpn/guards.hpp"

namespace gmpn {

/** Every element of G(m,p,n) in a fixed deterministic order (permutations in
 *  lexicographic image order, weight vectors in lexicographic order).
 *  Refuses groups larger than guards.max_states. */
inline std::vector<Element> enumerate_group(const GroupParams& params,
                                            const Guards& guards = {}) {
  auto order = params.order_within(guards.max_states);
  if (!order)
    throw guard_exceeded("enumerate_group: order of " + params.str() +
                         " exceeds the state cap of " +
                         std::to_string(guards.max_states));
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(*order));
  std::vector<int> images(params.n);
  std::iota(images.begin(), images.end(), 1);
  do {
    std::vector<long long> w(params.n, 0);
    while (true) {
      long long total = std::accumulate(w.begin(), w.end(), 0LL);
      if (total % params.p == 0) out.emplace_back(params, images, w);
      int k = params.n - 1;
      while (k >= 0 && w[k] == params.m - 1) w[k--] = 0;
      if (k < 0) break;
      ++w[k];
    }
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

} // namespace gmpn
