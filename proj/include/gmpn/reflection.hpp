#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gmpn/element.hpp"
#include "gmpn/errors.hpp"
#include "gmpn/group_params.hpp"

namespace gmpn {

/** A reflection of G(m,p,n), i.e. an element whose fixed space is a
 *  hyperplane.  Two kinds exist:
 *
 *   - transposition-like [(i j); a]: swaps i and j with weight a at i and
 *     m-a at j (a in [0,m)), for every pair i < j;
 *   - diagonal [id; b at i]: weight b at a single vertex, b a nonzero
 *     multiple of p (these exist only when p < m).
 *
 *  Canonical form keeps i < j for the transposition-like kind. */
class Reflection {
public:
  enum class Kind { transposition_like, diagonal };

  static Reflection transposition_like(const GroupParams& params, int i, int j,
                                       long long a) {
    check_vertex(params, i);
    check_vertex(params, j);
    if (i == j)
      throw domain_error("Reflection: transposition endpoints must differ");
    int aa = mod_m(a, params.m);
    if (i > j) {
      std::swap(i, j);
      aa = aa == 0 ? 0 : params.m - aa;
    }
    return Reflection(params, Kind::transposition_like, i, j, aa);
  }

  static Reflection diagonal(const GroupParams& params, int i, long long b) {
    check_vertex(params, i);
    int bb = mod_m(b, params.m);
    if (bb == 0)
      throw domain_error("Reflection: diagonal weight must be nonzero mod m");
    if (bb % params.p != 0)
      throw domain_error("Reflection: diagonal weight " + std::to_string(bb) +
                         " is not a multiple of p in " + params.str());
    return Reflection(params, Kind::diagonal, i, 0, bb);
  }

  const GroupParams& params() const { return params_; }
  Kind kind() const { return kind_; }
  bool is_diagonal() const { return kind_ == Kind::diagonal; }
  /// First vertex (the only vertex for a diagonal reflection).
  int i() const { return i_; }
  /// Second vertex (transposition-like only).
  int j() const {
    if (kind_ != Kind::transposition_like)
      throw domain_error("Reflection: diagonal reflection has no second vertex");
    return j_;
  }
  /// The weight parameter: a for [(i j); a], b for a diagonal.
  int a() const { return a_; }

  Element to_element() const {
    const int n = params_.n;
    std::vector<int> images(n);
    std::vector<long long> w(n, 0);
    for (int k = 1; k <= n; ++k) images[k - 1] = k;
    if (kind_ == Kind::transposition_like) {
      images[i_ - 1] = j_;
      images[j_ - 1] = i_;
      w[i_ - 1] = a_;
      w[j_ - 1] = a_ == 0 ? 0 : params_.m - a_;
    } else {
      w[i_ - 1] = a_;
    }
    return Element(params_, images, w);
  }

  bool operator==(const Reflection& o) const {
    return params_ == o.params_ && kind_ == o.kind_ && i_ == o.i_ &&
           j_ == o.j_ && a_ == o.a_;
  }
  bool operator!=(const Reflection& o) const { return !(*this == o); }

  /// Enumeration order: transposition-like by (i, j, a), then diagonals by (i, b).
  bool operator<(const Reflection& o) const {
    if (kind_ != o.kind_) return kind_ == Kind::transposition_like;
    if (i_ != o.i_) return i_ < o.i_;
    if (j_ != o.j_) return j_ < o.j_;
    return a_ < o.a_;
  }

  /// Compact byte key for hashing factor sequences.
  std::string key() const {
    std::string k;
    k.push_back(kind_ == Kind::diagonal ? '\1' : '\0');
    k.push_back(static_cast<char>(i_));
    k.push_back(static_cast<char>(j_));
    k.push_back(static_cast<char>(a_ & 0xff));
    k.push_back(static_cast<char>((a_ >> 8) & 0xff));
    return k;
  }

private:
  static void check_vertex(const GroupParams& params, int i) {
    if (i < 1 || i > params.n)
      throw domain_error("Reflection: vertex " + std::to_string(i) +
                         " out of range 1.." + std::to_string(params.n));
  }

  Reflection(const GroupParams& params, Kind kind, int i, int j, int a)
      : params_(params), kind_(kind), i_(i), j_(j), a_(a) {}

  GroupParams params_;
  Kind kind_;
  int i_;
  int j_; // 0 for diagonal reflections
  int a_;
};

/** All reflections of G(m,p,n) in a fixed deterministic order:
 *  [(i j); a] for i < j and a = 0..m-1, then diagonals [id; b at i] for
 *  i = 1..n and b = p, 2p, ..., m-p.  Census: m n(n-1)/2 + [p<m] n (m/p - 1). */
inline std::vector<Reflection> enumerate_reflections(const GroupParams& params) {
  std::vector<Reflection> out;
  for (int i = 1; i <= params.n; ++i)
    for (int j = i + 1; j <= params.n; ++j)
      for (int a = 0; a < params.m; ++a)
        out.push_back(Reflection::transposition_like(params, i, j, a));
  if (params.p < params.m)
    for (int i = 1; i <= params.n; ++i)
      for (int b = params.p; b < params.m; b += params.p)
        out.push_back(Reflection::diagonal(params, i, b));
  return out;
}

/** Recognizes a reflection by shape: a transposition (i j) with weights
 *  a at i, -a at j and 0 elsewhere, or a single nonzero diagonal weight
 *  (membership already forces it to be a multiple of p). */
inline std::optional<Reflection> as_reflection(const Element& g) {
  const int n = g.n(), m = g.m();
  int moved_i = 0, moved_j = 0;
  for (int k = 1; k <= n; ++k) {
    if (g.image(k) == k) continue;
    if (moved_i == 0) {
      moved_i = k;
      moved_j = g.image(k);
    } else if (k != moved_j || g.image(k) != moved_i) {
      return std::nullopt; // more than one nontrivial cycle
    }
  }
  if (moved_i == 0) {
    int vertex = 0, b = 0;
    for (int k = 1; k <= n; ++k) {
      if (g.weight(k) == 0) continue;
      if (vertex != 0) return std::nullopt;
      vertex = k;
      b = g.weight(k);
    }
    if (vertex == 0) return std::nullopt; // the identity is not a reflection
    return Reflection::diagonal(g.params(), vertex, b);
  }
  int a = g.weight(moved_i);
  if ((a + g.weight(moved_j)) % m != 0) return std::nullopt;
  for (int k = 1; k <= n; ++k)
    if (k != moved_i && k != moved_j && g.weight(k) != 0) return std::nullopt;
  return Reflection::transposition_like(g.params(), moved_i, moved_j, a);
}

inline bool is_reflection(const Element& g) { return as_reflection(g).has_value(); }

} // namespace gmpn
