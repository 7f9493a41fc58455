#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "gmpn/cycles.hpp"
#include "gmpn/element.hpp"
#include "gmpn/errors.hpp"
#include "gmpn/length.hpp"

namespace gmpn {

// ---------------------------------------------------------------------------
// Quasi-Coxeter predicates: which elements have a shortest factorization
// generating the whole group, and the classification of those of reflection
// length n.
// ---------------------------------------------------------------------------

/** The three generation conditions and the resulting quasi-Coxeter verdicts.
 *  weak: some shortest factorization generates the whole group.  strong:
 *  every shortest factorization does.  In G(m,p,n) the two coincide (the
 *  conditions force a single Hurwitz orbit, and the generated subgroup is an
 *  orbit invariant). */
struct QcReport {
  bool cond_i = false;   // the cycle weights generate Z/mZ
  bool cond_ii = false;  // the element weight generates pZ/mZ
  bool cond_iii = false; // no nontrivial subset of the cycles has weight 0 mod p
  bool weak = false;     // = cond_i && cond_ii && cond_iii
  bool strong = false;   // = weak
};

inline QcReport qc_report(const Element& g) {
  const GroupParams& params = g.params();
  CycleData data = cycle_data(g);
  QcReport rep;

  long long r = params.m;
  for (const Cycle& cy : data.cycles)
    r = std::gcd(r, static_cast<long long>(cy.weight));
  rep.cond_i = (r == 1);

  // For p = m membership forces weight 0, and gcd(m, 0) = m = p: the
  // condition holds automatically (it is vacuous in that case).
  rep.cond_ii = std::gcd(static_cast<long long>(params.m),
                         static_cast<long long>(g.total_weight())) == params.p;

  // Size-tracking subset DP over Z/pZ: reach[k][s] = some k of the cycles
  // have total weight s mod p.  Polynomial in cyc(g) and p, so no guard is
  // needed; a nontrivial subset is one of size 1 .. cyc(g)-1.
  const int c = data.count(), p = params.p;
  std::vector<std::vector<char>> reach(
      static_cast<std::size_t>(c) + 1, std::vector<char>(p, 0));
  reach[0][0] = 1;
  int placed = 0;
  for (const Cycle& cy : data.cycles) {
    int w = mod_m(cy.weight, p);
    for (int k = placed; k >= 0; --k)
      for (int s = 0; s < p; ++s)
        if (reach[k][s]) reach[k + 1][(s + w) % p] = 1;
    ++placed;
  }
  rep.cond_iii = true;
  for (int k = 1; k < c; ++k)
    if (reach[k][0]) rep.cond_iii = false;

  rep.weak = rep.cond_i && rep.cond_ii && rep.cond_iii;
  rep.strong = rep.weak;
  return rep;
}

// ---------------------------------------------------------------------------
// Rank-length classification: the quasi-Coxeter elements whose reflection
// length equals n, by the shape of the parameters.
// ---------------------------------------------------------------------------

/** Verdict of the rank-length classification, with the deciding criterion
 *  spelled out.  qc_rank_length is equivalent to qc_report(g).weak together
 *  with reflection_length(g) == n. */
struct RankLengthClassification {
  bool qc_rank_length = false;
  int length = 0; // reflection length of g
  std::string reason;
};

inline RankLengthClassification classify_rank_length(const GroupParams& params,
                                                     const Element& g) {
  if (g.params() != params)
    throw domain_error("classify_rank_length: element does not live in " +
                       params.str());
  CycleData data = cycle_data(g);
  RankLengthClassification out;
  out.length = reflection_length(g);
  const int c = data.count();
  auto primitive = [&](int w) {
    return std::gcd(static_cast<long long>(params.m),
                    static_cast<long long>(w)) == 1;
  };

  bool criterion = false;
  if (params.p == 1) {
    if (c != 1)
      out.reason = "needs a single cycle; g has " + std::to_string(c);
    else if (!primitive(data.cycles[0].weight))
      out.reason = "cycle weight " + std::to_string(data.cycles[0].weight) +
                   " is not primitive mod " + std::to_string(params.m);
    else {
      criterion = true;
      out.reason = "single cycle of primitive weight";
    }
  } else if (params.p == params.m) {
    if (c != 2)
      out.reason = "needs exactly two cycles; g has " + std::to_string(c);
    else if (!primitive(data.cycles[0].weight) ||
             !primitive(data.cycles[1].weight))
      out.reason = "both cycle weights must be primitive mod " +
                   std::to_string(params.m);
    else {
      criterion = true;
      out.reason = "two cycles of primitive weight";
    }
  } else {
    out.reason = "no quasi-Coxeter elements of reflection length n exist when "
                 "1 < p < m";
  }

  out.qc_rank_length = criterion && out.length == params.n;
  if (criterion && out.length != params.n)
    out.reason += "; but reflection length " + std::to_string(out.length) +
                  " differs from n = " + std::to_string(params.n);
  return out;
}

} // namespace gmpn
