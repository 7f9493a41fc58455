#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "gmpn/errors.hpp"

namespace gmpn {

/** Parameters of the complex reflection group G(m,p,n): n-by-n monomial
 *  matrices whose nonzero entries are m-th roots of unity with product an
 *  (m/p)-th root of unity.  Requires m >= 1, n >= 1 and p | m. */
struct GroupParams {
  int m = 1;
  int p = 1;
  int n = 1;

  GroupParams() = default;

  GroupParams(int m_, int p_, int n_) : m(m_), p(p_), n(n_) {
    if (m < 1 || n < 1 || p < 1)
      throw domain_error("GroupParams: m, p, n must be positive");
    if (m % p != 0)
      throw domain_error("GroupParams: p must divide m");
  }

  bool operator==(const GroupParams& o) const {
    return m == o.m && p == o.p && n == o.n;
  }
  bool operator!=(const GroupParams& o) const { return !(*this == o); }

  /** |G(m,p,n)| = m^n n! / p, or nullopt if it exceeds `cap` (overflow-safe). */
  std::optional<std::uint64_t> order_within(std::uint64_t cap) const {
    // m^n n! / p == m/p * m^(n-1) * n!, all factors integral.
    std::uint64_t order = static_cast<std::uint64_t>(m / p);
    if (order > cap) return std::nullopt;
    auto mul = [&](std::uint64_t f) {
      if (f != 0 && order > cap / f) return false;
      order *= f;
      return true;
    };
    for (int i = 1; i < n; ++i)
      if (!mul(static_cast<std::uint64_t>(m))) return std::nullopt;
    for (int i = 2; i <= n; ++i)
      if (!mul(static_cast<std::uint64_t>(i))) return std::nullopt;
    return order;
  }

  std::string str() const {
    return "G(" + std::to_string(m) + "," + std::to_string(p) + "," +
           std::to_string(n) + ")";
  }
};

/** Canonical residue of `x` in [0, m). */
inline int mod_m(long long x, int m) {
  long long r = x % m;
  if (r < 0) r += m;
  return static_cast<int>(r);
}

} // namespace gmpn
