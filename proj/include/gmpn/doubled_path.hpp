#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gmpn/errors.hpp"
#include "gmpn/factorization.hpp"
#include "gmpn/hurwitz.hpp"
#include "gmpn/reflection.hpp"

namespace gmpn {

/** A doubled path on vertices v_1, ..., v_c: factor pairs
 *
 *      [(v_q v_{q+1}); a_q], [(v_q v_{q+1}); a_q + d_q]      q = 1..c-1
 *
 *  (weights written at v_q), optionally followed by one diagonal loop
 *  [id; loop_weight at v_c].  These are the block prefixes of standard-form
 *  factorizations, and the shape every elementary braid below preserves:
 *  the braids move only the pair weights a_q, never the differences d_q,
 *  the loop weight, or the underlying path. */
struct DoubledPath {
  GroupParams params{1, 1, 1};
  std::vector<int> vertices;     // v_1..v_c in path order, all distinct
  std::vector<int> pair_weights; // a_1..a_{c-1}, residues mod m
  std::vector<int> pair_diffs;   // d_1..d_{c-1}, residues mod m
  int loop_weight = 0;           // 0 = no loop, else a residue in (0, m)

  int path_length() const { return static_cast<int>(vertices.size()); }
  bool has_loop() const { return loop_weight != 0; }
  /// Number of factors when materialized.
  int factor_count() const {
    return 2 * (path_length() - 1) + (has_loop() ? 1 : 0);
  }
};

/** Reads factors [begin, end) of f as a doubled path.  The pair sequence
 *  determines the vertex order (consecutive pairs share exactly one vertex);
 *  a single pair is read with its smaller vertex first.  Throws domain_error
 *  if the range is not a doubled path. */
inline DoubledPath extract_doubled_path(const Factorization& f,
                                        std::size_t begin, std::size_t end) {
  if (begin > end || end > f.size())
    throw domain_error("extract_doubled_path: bad factor range");
  const int m = f.params.m;
  const std::size_t count = end - begin;
  if (count == 0)
    throw domain_error("extract_doubled_path: empty factor range");
  const bool loop = count % 2 == 1;
  const std::size_t npairs = count / 2;

  DoubledPath dp;
  dp.params = f.params;
  auto fail = [](const std::string& why) -> DoubledPath {
    throw domain_error("extract_doubled_path: " + why);
  };

  // Walk the pairs, chaining the shared vertices into the path order.
  for (std::size_t q = 0; q < npairs; ++q) {
    const Reflection& first = f.factors[begin + 2 * q];
    const Reflection& second = f.factors[begin + 2 * q + 1];
    if (first.is_diagonal() || second.is_diagonal())
      return fail("pair position holds a diagonal factor");
    if (first.i() != second.i() || first.j() != second.j())
      return fail("pair factors sit on different transpositions");
    int x = first.i(), y = first.j();
    if (q == 0) {
      if (npairs > 1) {
        // Orient the first pair so its second vertex is the one shared
        // with the next pair.
        const Reflection& next = f.factors[begin + 2];
        if (next.is_diagonal())
          return fail("pair position holds a diagonal factor");
        bool x_shared = x == next.i() || x == next.j();
        bool y_shared = y == next.i() || y == next.j();
        if (x_shared && !y_shared) std::swap(x, y);
        // If both or neither are shared, a later check rejects the range.
      }
      dp.vertices.push_back(x);
      dp.vertices.push_back(y);
    } else {
      int prev = dp.vertices.back();
      if (x != prev && y != prev)
        return fail("consecutive pairs do not share a vertex");
      if (y == prev) std::swap(x, y);
      dp.vertices.push_back(y);
    }
    int vq = dp.vertices[q]; // path-order first vertex of this pair
    int a = first.i() == vq ? first.a() : mod_m(-first.a(), m);
    int b = second.i() == vq ? second.a() : mod_m(-second.a(), m);
    dp.pair_weights.push_back(a);
    dp.pair_diffs.push_back(mod_m(b - a, m));
  }

  if (loop) {
    const Reflection& last = f.factors[end - 1];
    if (!last.is_diagonal())
      return fail("odd factor count but the last factor is not a loop");
    if (npairs == 0) {
      dp.vertices.push_back(last.i());
    } else if (last.i() != dp.vertices.back()) {
      // A single pair leaves the orientation open; flip it if the loop sits
      // at the other end.
      if (npairs == 1 && last.i() == dp.vertices.front()) {
        std::swap(dp.vertices[0], dp.vertices[1]);
        dp.pair_weights[0] = mod_m(-dp.pair_weights[0], m);
        dp.pair_diffs[0] = mod_m(-dp.pair_diffs[0], m);
      } else {
        return fail("loop sits at vertex " + std::to_string(last.i()) +
                    ", expected the path end " +
                    std::to_string(dp.vertices.back()));
      }
    }
    dp.loop_weight = last.a();
  }

  // All vertices distinct (the chain could otherwise revisit one).
  std::vector<int> sorted = dp.vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    return fail("path revisits a vertex");
  return dp;
}

/** The factor sequence of a doubled path. */
inline Factorization doubled_path_factors(const DoubledPath& dp) {
  Factorization f{dp.params, {}};
  for (std::size_t q = 0; q + 1 < dp.vertices.size(); ++q) {
    int vq = dp.vertices[q], vq1 = dp.vertices[q + 1];
    int a = dp.pair_weights[q];
    f.factors.push_back(Reflection::transposition_like(dp.params, vq, vq1, a));
    f.factors.push_back(Reflection::transposition_like(
        dp.params, vq, vq1, a + dp.pair_diffs[q]));
  }
  if (dp.has_loop())
    f.factors.push_back(
        Reflection::diagonal(dp.params, dp.vertices.back(), dp.loop_weight));
  return f;
}

/** The pair-weight translations d_1, ..., d_{c-1}, d_c available on a doubled
 *  path: d_q is the q-th pair difference and d_c the loop weight (0 when the
 *  loop is absent).  sigma_pair(q) adds d_q to a_q, tau(i,j) adds d_j to a_i
 *  and d_i to a_j, gamma(q) adds d_c to a_q. */
inline std::vector<int> transfer_diffs(const DoubledPath& dp) {
  std::vector<int> d = dp.pair_diffs;
  d.push_back(dp.loop_weight);
  return d;
}

// ---------------------------------------------------------------------------
// Elementary braids, as braid words local to the doubled path (letter k acts
// on local factor positions k, k+1; offset_word lifts them to a block inside
// a longer factorization).
// ---------------------------------------------------------------------------

/** Adds d_i to a_i; everything else unchanged.  1 <= i <= c-1. */
inline BraidWord sigma_pair_word(int i) { return {2 * i - 1}; }

/** Adds d_j to a_i and d_i to a_j; everything else unchanged.
 *  1 <= i < j <= c-1. */
inline BraidWord tau_word(int i, int j) {
  if (!(1 <= i && i < j))
    throw domain_error("tau_word: need 1 <= i < j");
  BraidWord displayed;
  for (int k = j; k >= i + 2; --k) {
    displayed.push_back(2 * k - 2);
    displayed.push_back(2 * k - 1);
    displayed.push_back(-(2 * k - 3));
    displayed.push_back(-(2 * k - 2));
  }
  for (int letter : {-(2 * i), -(2 * i + 1), -(2 * i - 1), -(2 * i),
                     -(2 * i), -(2 * i + 1), -(2 * i - 1), -(2 * i)})
    displayed.push_back(letter);
  for (int k = i + 2; k <= j; ++k) {
    displayed.push_back(2 * k - 2);
    displayed.push_back(2 * k - 3);
    displayed.push_back(-(2 * k - 1));
    displayed.push_back(-(2 * k - 2));
  }
  // `displayed` lists the moves as a composition (rightmost acts first);
  // braid words apply left to right, so reverse it.
  return BraidWord(displayed.rbegin(), displayed.rend());
}

/** Adds the loop weight d to a_i; everything else unchanged.  Requires the
 *  loop, i.e. local positions 1..2c-1.  1 <= i <= c-1. */
inline BraidWord gamma_word(int i, int c) {
  if (!(1 <= i && i <= c - 1))
    throw domain_error("gamma_word: need 1 <= i <= c-1");
  BraidWord displayed;
  for (int k = c - 1; k >= i + 1; --k) {
    displayed.push_back(2 * k);
    displayed.push_back(-(2 * k - 1));
  }
  for (int letter : {2 * i, 2 * i - 1, 2 * i - 1, 2 * i}) displayed.push_back(letter);
  for (int k = i + 1; k <= c - 1; ++k) {
    displayed.push_back(2 * k - 1);
    displayed.push_back(-(2 * k));
  }
  // Read rightmost-first, `displayed` walks the loop leftward to the pair and
  // back, but under our column-weight convention that route subtracts d from
  // a_i (the diagonal conjugates through the pair with the opposite sign).
  // The inverse word -- negate without reversing, since the approach and
  // return legs mirror each other -- adds d.
  for (int& letter : displayed) letter = -letter;
  return displayed;
}

// ---------------------------------------------------------------------------
// Transfer matrices: integer recipes that move one pair-weight vector to
// another using the translations above.
// ---------------------------------------------------------------------------

/** Exponent matrix for a transfer: entry (i, j) with i, j <= c-1 is the
 *  exponent of tau(i,j) (of sigma_pair(j) on the diagonal), and entry (c, j)
 *  the exponent of gamma(j).  Symmetric in the first c-1 rows, so each
 *  tau exponent is stored consistently from both ends. */
struct TransferMatrix {
  int rows = 0, cols = 0; // rows = c, cols = c-1
  std::vector<long long> entries;

  long long at(int i, int j) const { // 1-based
    return entries[static_cast<std::size_t>(i - 1) * cols + (j - 1)];
  }
  long long& at(int i, int j) {
    return entries[static_cast<std::size_t>(i - 1) * cols + (j - 1)];
  }
};

namespace detail {

/** Extended gcd with the Bezout coefficient of b canonicalized into
 *  [0, a / gcd): returns (g, x, y) with a x + b y = g.  a, b > 0. */
struct Bezout {
  long long g, x, y;
};

inline Bezout ext_gcd_canonical(long long a, long long b) {
  long long old_r = a, r = b, old_x = 1, x = 0, old_y = 0, y = 1;
  while (r != 0) {
    long long q = old_r / r;
    long long t;
    t = old_r - q * r; old_r = r; r = t;
    t = old_x - q * x; old_x = x; x = t;
    t = old_y - q * y; old_y = y; y = t;
  }
  // old_r = g, a*old_x + b*old_y = g.  Shift y into [0, a/g).
  long long g = old_r, step = a / g;
  long long yy = ((old_y % step) + step) % step;
  long long xx = (g - b * yy) / a;
  return {g, xx, yy};
}

} // namespace detail

/** Solves for a transfer matrix M with a_from + d * M = a_to componentwise
 *  mod m, where d lists the c translations of a doubled path (c-1 pair
 *  differences plus the loop weight; see transfer_diffs).  Returns the
 *  matrix, or nullopt exactly when no transfer exists, i.e. when some
 *  a_to[q] - a_from[q] is not divisible by r = gcd(m, d_1, ..., d_c).
 *  When the loop is absent (d_c = 0 mod m) row c of the result is zero, so
 *  realizing it never needs a gamma move. */
inline std::optional<TransferMatrix> solve_transfer(int m,
                                                    const std::vector<int>& d,
                                                    const std::vector<int>& a_from,
                                                    const std::vector<int>& a_to) {
  const int c = static_cast<int>(d.size());
  if (c < 1) throw domain_error("solve_transfer: need at least one translation");
  if (a_from.size() != static_cast<std::size_t>(c - 1) ||
      a_to.size() != static_cast<std::size_t>(c - 1))
    throw domain_error("solve_transfer: weight vectors must have c-1 entries");

  // Positive representatives: a translation that is 0 mod m acts as m so the
  // gcd bookkeeping below never sees zero.
  std::vector<long long> D(c);
  for (int i = 0; i < c; ++i) {
    int rep = mod_m(d[i], m);
    D[i] = rep == 0 ? m : rep;
  }
  long long r = m;
  for (int i = 0; i < c; ++i) r = std::gcd(r, D[i]);

  for (int q = 0; q < c - 1; ++q)
    if (mod_m(a_to[q] - a_from[q], m) % r != 0) return std::nullopt;

  // Bezout chain: coefficients x with sum x_i D_i = r mod m, folding the
  // translations into gcd(m, D_1, ..., D_c) one at a time with canonical
  // Bezout coefficients so the result is deterministic.
  std::vector<long long> x(c, 0);
  long long g = m;
  for (int i = 0; i < c; ++i) {
    detail::Bezout bz = detail::ext_gcd_canonical(g, D[i]);
    for (int k = 0; k < i; ++k) x[k] *= bz.x;
    x[i] = bz.y;
    g = bz.g;
  }

  // Column targets u_j = (a_to - a_from)/r, canonical residues.
  std::vector<long long> u(c - 1, 0);
  for (int q = 0; q < c - 1; ++q) u[q] = mod_m(a_to[q] - a_from[q], m) / r;

  // Correction terms y making the first c-1 rows symmetric: for i < j both
  // <= c-1, add multiples of (D_j, -D_i)/gcd pairs, which leave every column
  // sum unchanged.
  std::vector<std::vector<long long>> y(c, std::vector<long long>(c, 0));
  for (int i = 0; i < c - 1; ++i)
    for (int j = i + 1; j < c - 1; ++j) {
      detail::Bezout bz = detail::ext_gcd_canonical(D[i], D[j]);
      long long q = u[j] * x[i] - u[i] * x[j];
      y[j][i] = bz.x * q;  // alpha * q
      y[i][j] = -bz.y * q; // -beta * q
    }

  TransferMatrix M;
  M.rows = c;
  M.cols = c - 1;
  M.entries.assign(static_cast<std::size_t>(c) * (c - 1), 0);
  for (int j = 0; j < c - 1; ++j) {
    for (int i = 0; i < c; ++i) {
      if (i == j) continue;
      long long gij = std::gcd(D[i], D[j]);
      M.at(i + 1, j + 1) = u[j] * x[i] + (D[j] / gij) * y[i][j];
    }
    long long diag = u[j] * x[j];
    for (int k = 0; k < c; ++k) {
      if (k == j) continue;
      diag -= (D[k] / std::gcd(D[k], D[j])) * y[k][j];
    }
    M.at(j + 1, j + 1) = diag;
  }
  if (D[c - 1] == m) // no loop: gamma moves are unavailable, zero its row
    for (int j = 1; j <= c - 1; ++j) M.at(c, j) = 0;

  // The construction above is exact; verify the defining congruence and the
  // symmetry the realization relies on.
  for (int j = 1; j <= c - 1; ++j) {
    long long sum = 0;
    for (int i = 1; i <= c; ++i)
      sum += mod_m(M.at(i, j), m) * (D[i - 1] % m);
    if (mod_m(a_from[j - 1] + sum, m) != mod_m(a_to[j - 1], m))
      throw std::logic_error("solve_transfer: congruence check failed");
    for (int i = 1; i < j; ++i)
      if (M.at(i, j) != M.at(j, i))
        throw std::logic_error("solve_transfer: symmetry check failed");
  }
  return M;
}

/** Turns a transfer matrix into a braid word, local to the doubled path:
 *  sigma_pair(j)^{M_jj}, tau(i,j)^{M_ij}, gamma(j)^{M_cj}.  Exponents act on
 *  the pair weights mod m, so they are reduced into [0, m) first. */
inline BraidWord realize_transfer(const TransferMatrix& M, int m) {
  const int c = M.rows;
  BraidWord w;
  auto append = [&w](const BraidWord& part) {
    w.insert(w.end(), part.begin(), part.end());
  };
  for (int j = 1; j <= c - 1; ++j) {
    long long e = mod_m(M.at(j, j), m);
    if (e != 0) append(power_word(sigma_pair_word(j), e));
  }
  for (int i = 1; i <= c - 1; ++i)
    for (int j = i + 1; j <= c - 1; ++j) {
      long long e = mod_m(M.at(i, j), m);
      if (e != 0) append(power_word(tau_word(i, j), e));
    }
  for (int j = 1; j <= c - 1; ++j) {
    long long e = mod_m(M.at(c, j), m);
    if (e != 0) append(power_word(gamma_word(j, c), e));
  }
  return w;
}

} // namespace gmpn
