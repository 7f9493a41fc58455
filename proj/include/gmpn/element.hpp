#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "gmpn/errors.hpp"
#include "gmpn/group_params.hpp"

namespace gmpn {

/** An element g = [u; (a_1,...,a_n)] of G(m,p,n): u the underlying
 *  permutation and a_j the exponent of omega = e^{2 pi i / m} in the nonzero
 *  entry of column j, i.e. g e_j = omega^{a_j} e_{u(j)}.  Roots of unity are
 *  never materialized; all arithmetic is on exponents mod m.
 *
 *  Stored 0-based internally; the public accessors speak 1-based vertex
 *  labels to match the [(i j); a] notation used throughout. */
class Element {
public:
  /** Builds [u; a] from a 1-based image sequence u (u[k] = image of k+1) and
   *  any-sign weight exponents; validates permutation shape and membership
   *  (weight sum must be 0 mod p). */
  Element(const GroupParams& params, const std::vector<int>& images_1based,
          const std::vector<long long>& weights)
      : params_(params) {
    const int n = params_.n;
    if (static_cast<int>(images_1based.size()) != n ||
        static_cast<int>(weights.size()) != n)
      throw domain_error("Element: image and weight sequences must have length n");
    perm_.resize(n);
    std::vector<char> seen(n, 0);
    for (int k = 0; k < n; ++k) {
      int img = images_1based[k];
      if (img < 1 || img > n || seen[img - 1])
        throw domain_error("Element: image sequence is not a permutation of 1..n");
      seen[img - 1] = 1;
      perm_[k] = img - 1;
    }
    weights_.resize(n);
    long long total = 0;
    for (int k = 0; k < n; ++k) {
      weights_[k] = mod_m(weights[k], params_.m);
      total += weights_[k];
    }
    if (total % params_.p != 0)
      throw domain_error("Element: weight sum " + std::to_string(total) +
                         " violates membership in " + params_.str() +
                         " (must be 0 mod p)");
  }

  static Element identity(const GroupParams& params) {
    Element e(params);
    std::iota(e.perm_.begin(), e.perm_.end(), 0);
    return e;
  }

  const GroupParams& params() const { return params_; }
  int n() const { return params_.n; }
  int m() const { return params_.m; }

  /// Image u(i) of 1-based index i.
  int image(int i) const { return perm_[i - 1] + 1; }
  /// Weight exponent a_i at 1-based index i, canonical in [0, m).
  int weight(int i) const { return weights_[i - 1]; }

  const std::vector<int>& perm0() const { return perm_; }
  const std::vector<int>& weights0() const { return weights_; }

  bool is_identity_perm() const {
    for (int k = 0; k < params_.n; ++k)
      if (perm_[k] != k) return false;
    return true;
  }

  /// Total weight sum mod m.
  int total_weight() const {
    long long s = 0;
    for (int w : weights_) s += w;
    return mod_m(s, params_.m);
  }

  bool operator==(const Element& o) const {
    return params_ == o.params_ && perm_ == o.perm_ && weights_ == o.weights_;
  }
  bool operator!=(const Element& o) const { return !(*this == o); }
  bool operator<(const Element& o) const {
    if (perm_ != o.perm_) return perm_ < o.perm_;
    return weights_ < o.weights_;
  }

  /** Compact byte key (perm bytes then weight bytes, 2 bytes each),
   *  suitable for hashing.  Valid for n <= 255 and m <= 65535. */
  std::string key() const {
    std::string k;
    k.reserve(3 * perm_.size());
    for (int v : perm_) k.push_back(static_cast<char>(v));
    for (int w : weights_) {
      k.push_back(static_cast<char>(w & 0xff));
      k.push_back(static_cast<char>((w >> 8) & 0xff));
    }
    return k;
  }

  friend Element multiply(const Element& a, const Element& b);
  friend Element inverse(const Element& g);

private:
  explicit Element(const GroupParams& params)
      : params_(params), perm_(params.n, 0), weights_(params.n, 0) {}

  GroupParams params_;
  std::vector<int> perm_;    // 0-based images: perm_[k] = u(k+1) - 1
  std::vector<int> weights_; // canonical residues in [0, m)
};

/** Group product "apply b first, then a":
 *  [u; a] [v; b] = [uv; (a_{v(1)}+b_1, ..., a_{v(n)}+b_n)]. */
inline Element multiply(const Element& a, const Element& b) {
  if (a.params_ != b.params_)
    throw domain_error("multiply: mixed group parameters");
  Element c(a.params_);
  const int n = a.params_.n, m = a.params_.m;
  for (int k = 0; k < n; ++k) {
    int bk = b.perm_[k];
    c.perm_[k] = a.perm_[bk];
    c.weights_[k] = (a.weights_[bk] + b.weights_[k]) % m;
  }
  return c;
}

/** Inverse: [u; a]^{-1} = [u^{-1}; a'] with a'_j = -a_{u^{-1}(j)}. */
inline Element inverse(const Element& g) {
  Element r(g.params_);
  const int n = g.params_.n, m = g.params_.m;
  for (int k = 0; k < n; ++k) r.perm_[g.perm_[k]] = k;
  for (int j = 0; j < n; ++j) {
    int w = g.weights_[r.perm_[j]];
    r.weights_[j] = w == 0 ? 0 : m - w;
  }
  return r;
}

/// h^{-1} g h.
inline Element conjugate(const Element& g, const Element& h) {
  return multiply(multiply(inverse(h), g), h);
}

} // namespace gmpn
