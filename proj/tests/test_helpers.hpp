#pragma once

// Shared test utilities, including the independent oracles the example values
// are checked against.  Everything here deliberately avoids the library's own
// cycle/length machinery where it serves as an oracle for it.

#include <optional>
#include <random>
#include <vector>

#include "gmpn/element.hpp"
#include "gmpn/enumerate.hpp"
#include "gmpn/group_params.hpp"

namespace gmpn_test {

/** Exact monomial-matrix model: entry (r, c) holds the exponent e of the
 *  root-of-unity entry omega^e, or nothing if the entry is zero.  This is the
 *  oracle for the wreath-product multiplication rule. */
struct MonomialMatrix {
  int n = 0;
  int m = 1;
  // row-major; nullopt = zero entry
  std::vector<std::optional<int>> cells;

  std::optional<int>& at(int row, int col) { return cells[(row - 1) * n + (col - 1)]; }
  const std::optional<int>& at(int row, int col) const {
    return cells[(row - 1) * n + (col - 1)];
  }

  bool operator==(const MonomialMatrix& o) const {
    return n == o.n && m == o.m && cells == o.cells;
  }
};

/** Column j carries omega^{a_j} in row u(j). */
inline MonomialMatrix matrix_of(const gmpn::Element& g) {
  MonomialMatrix mat{g.n(), g.m(), {}};
  mat.cells.assign(static_cast<std::size_t>(g.n()) * g.n(), std::nullopt);
  for (int j = 1; j <= g.n(); ++j) mat.at(g.image(j), j) = g.weight(j);
  return mat;
}

inline MonomialMatrix matmul(const MonomialMatrix& A, const MonomialMatrix& B) {
  MonomialMatrix C{A.n, A.m, {}};
  C.cells.assign(static_cast<std::size_t>(A.n) * A.n, std::nullopt);
  for (int r = 1; r <= A.n; ++r)
    for (int c = 1; c <= A.n; ++c) {
      for (int k = 1; k <= A.n; ++k) {
        if (A.at(r, k) && B.at(k, c)) {
          C.at(r, c) = (*A.at(r, k) + *B.at(k, c)) % A.m;
          break; // monomial: at most one nonzero term
        }
      }
    }
  return C;
}

/** dim ker(M - I) for a monomial matrix, computed from the matrix alone: the
 *  nonzero entries form cycles over the coordinates, and each cycle whose
 *  exponent total is 0 mod m contributes exactly one fixed direction. */
inline int fixed_space_dimension(const MonomialMatrix& M) {
  std::vector<int> row_of_col(M.n + 1, 0);
  for (int c = 1; c <= M.n; ++c)
    for (int r = 1; r <= M.n; ++r)
      if (M.at(r, c)) row_of_col[c] = r;
  std::vector<char> seen(M.n + 1, 0);
  int dim = 0;
  for (int start = 1; start <= M.n; ++start) {
    if (seen[start]) continue;
    int total = 0, c = start;
    do {
      seen[c] = 1;
      total = (total + *M.at(row_of_col[c], c)) % M.m;
      c = row_of_col[c];
    } while (c != start);
    if (total == 0) ++dim;
  }
  return dim;
}

/** A matrix-model reflection test: codimension of the fixed space is 1. */
inline bool is_reflection_oracle(const gmpn::Element& g) {
  return fixed_space_dimension(matrix_of(g)) == g.n() - 1;
}

inline std::mt19937_64 seeded_rng(std::uint64_t salt = 0) {
  return std::mt19937_64(0x5eed5eedULL ^ salt);
}

} // namespace gmpn_test
