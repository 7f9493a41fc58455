#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gmpn/cycles.hpp"
#include "gmpn/doubled_path.hpp"
#include "gmpn/errors.hpp"
#include "gmpn/factorization.hpp"
#include "gmpn/graph.hpp"
#include "gmpn/guards.hpp"
#include "gmpn/hurwitz.hpp"
#include "gmpn/length.hpp"

namespace gmpn {

namespace detail {

/** Everything block-shaped about a factorization: the cycles of its product
 *  grouped by graph component, the doubled-path vertices of each block, and
 *  where each block's factors sit.  Blocks are ordered by their smallest
 *  vertex, the order standard form prescribes. */
struct StandardLayout {
  Element g;
  CycleData data;
  std::vector<int> comp;        // vertex -> component id (smallest vertex)
  std::vector<int> factor_comp; // factor position -> component id
  struct Block {
    int comp_id = 0;
    std::vector<int> cycles;       // ascending indices into data.cycles
    std::vector<int> path;         // v_1 < ... < v_k, the cycle minima
    std::vector<int> cycle_weights; // aligned with path, mod m
    int block_weight = 0;          // mod m
    std::size_t first = 0, count = 0; // factor interval (when contiguous)
  };
  std::vector<Block> blocks;
  bool contiguous = true; // factor comp ids non-decreasing = condition (a)

  /// Doubled-path translations d_1..d_{k-1} (cycle-weight prefix sums) plus
  /// d_k = block weight, the loop translation; see transfer_diffs.
  static std::vector<int> block_diffs(const Block& b, int m) {
    std::vector<int> d;
    long long acc = 0;
    for (std::size_t q = 0; q + 1 < b.path.size(); ++q) {
      acc += b.cycle_weights[q];
      d.push_back(mod_m(acc, m));
    }
    d.push_back(b.block_weight);
    return d;
  }
};

inline StandardLayout standard_layout(const Factorization& f, const Element& g) {
  StandardLayout L{g, cycle_data(g), {}, {}, {}, true};
  L.comp = graph_components(factorization_graph(f));

  std::map<int, std::size_t> block_of_comp; // ordered: blocks by smallest vertex
  for (int ci = 0; ci < L.data.count(); ++ci)
    block_of_comp.emplace(L.comp[L.data.cycles[ci].min_vertex()], 0);
  std::size_t idx = 0;
  for (auto& [cid, bidx] : block_of_comp) {
    bidx = idx++;
    L.blocks.emplace_back();
    L.blocks.back().comp_id = cid;
  }
  for (int ci = 0; ci < L.data.count(); ++ci) {
    auto& b = L.blocks[block_of_comp.at(L.comp[L.data.cycles[ci].min_vertex()])];
    b.cycles.push_back(ci);
    b.path.push_back(L.data.cycles[ci].min_vertex());
    b.cycle_weights.push_back(L.data.cycles[ci].weight);
  }
  for (auto& b : L.blocks) {
    long long w = 0;
    for (int cw : b.cycle_weights) w += cw;
    b.block_weight = mod_m(w, f.params.m);
  }

  L.factor_comp.reserve(f.size());
  std::vector<char> seen(f.params.n + 1, 0);
  for (std::size_t t = 0; t < f.size(); ++t) {
    int cid = L.comp[f.factors[t].i()];
    L.factor_comp.push_back(cid);
    if (t > 0 && cid < L.factor_comp[t - 1]) L.contiguous = false;
    auto& b = L.blocks[block_of_comp.at(cid)];
    if (b.count == 0) b.first = t;
    ++b.count;
  }
  return L;
}

inline StandardLayout standard_layout(const Factorization& f) {
  return standard_layout(f, product(f));
}

/** Conditions (b) and (c) on one block, given condition (a) holds: the first
 *  2k-2 factors are the doubled-path pairs on the cycle minima, and any loop
 *  sits exactly at relative position 2k-1 on the last path vertex. */
inline bool block_is_standard(const Factorization& f,
                              const StandardLayout::Block& b) {
  const int k = static_cast<int>(b.path.size());
  if (b.count < static_cast<std::size_t>(2 * (k - 1))) return false;
  for (int q = 0; q + 1 < k; ++q)
    for (int s = 0; s < 2; ++s) {
      const Reflection& r = f.factors[b.first + 2 * q + s];
      if (r.is_diagonal() || r.i() != b.path[q] || r.j() != b.path[q + 1])
        return false;
    }
  for (std::size_t t = 0; t < b.count; ++t) {
    const Reflection& r = f.factors[b.first + t];
    if (r.is_diagonal() &&
        (t != static_cast<std::size_t>(2 * (k - 1)) || r.i() != b.path.back()))
      return false;
  }
  return true;
}

inline bool is_standard_form_impl(const Factorization& f,
                                  const StandardLayout& L) {
  if (!L.contiguous) return false;
  for (const auto& b : L.blocks)
    if (!block_is_standard(f, b)) return false;
  return true;
}

inline void require_shortest(const Factorization& f, const Element& g,
                             const char* who) {
  if (static_cast<int>(f.size()) != reflection_length(g))
    throw domain_error(std::string(who) + ": not a shortest factorization of " +
                       "its product");
}

} // namespace detail

/** Standard form: (a) factors grouped by graph component, components ordered
 *  by smallest vertex; (b) each block starts with the doubled path on its
 *  cycle minima; (c) a loop, if present, sits right after the doubled path,
 *  at the last path vertex.  Requires f shortest (throws otherwise). */
inline bool is_standard_form(const Factorization& f) {
  Element g = product(f);
  detail::require_shortest(f, g, "is_standard_form");
  return detail::is_standard_form_impl(f, detail::standard_layout(f, g));
}

/** Builds the standard-shaped factorization of g realizing the cycle
 *  partition `partition` with the chosen pair weights (one sequence of
 *  |B|-1 residues per block, aligned with the canonical block order):
 *  per block, the doubled path on the cycle minima with differences forced
 *  to the cycle-weight prefix sums, a loop of weight wt(B) when that is
 *  nonzero, then one spanning path per cycle with forced weights.  The
 *  result is shortest exactly when the partition has maximum value. */
inline Factorization build_standard_factorization(
    const Element& g, const CyclePartition& partition,
    const std::vector<std::vector<int>>& pair_weight_lists) {
  const GroupParams& params = g.params();
  const int m = params.m;
  CycleData data = cycle_data(g);

  // Validate: blocks cover each cycle exactly once, block weights 0 mod p.
  std::vector<char> covered(data.count(), 0);
  for (const auto& block : partition.blocks)
    for (int ci : block) {
      if (ci < 0 || ci >= data.count() || covered[ci])
        throw domain_error("build_standard_factorization: partition does not "
                           "match the cycles of g");
      covered[ci] = 1;
    }
  for (char c : covered)
    if (!c)
      throw domain_error("build_standard_factorization: partition does not "
                         "cover every cycle of g");

  // Canonical block order with the pair-weight lists carried along.
  std::vector<std::pair<std::vector<int>, std::vector<int>>> work;
  if (pair_weight_lists.size() != partition.blocks.size())
    throw domain_error("build_standard_factorization: need one pair-weight "
                       "sequence per block");
  for (std::size_t b = 0; b < partition.blocks.size(); ++b) {
    std::vector<int> cycles = partition.blocks[b];
    std::sort(cycles.begin(), cycles.end());
    if (pair_weight_lists[b].size() + 1 != cycles.size())
      throw domain_error("build_standard_factorization: block of " +
                         std::to_string(cycles.size()) + " cycles needs " +
                         std::to_string(cycles.size() - 1) + " pair weights");
    work.emplace_back(std::move(cycles), pair_weight_lists[b]);
  }
  std::sort(work.begin(), work.end());

  Factorization out{params, {}};
  for (const auto& [cycles, a] : work) {
    long long block_weight = 0;
    for (int ci : cycles) block_weight += data.cycles[ci].weight;
    if (block_weight % params.p != 0)
      throw domain_error("build_standard_factorization: block weight " +
                         std::to_string(block_weight) +
                         " is not 0 mod p; not a cycle partition");
    const int k = static_cast<int>(cycles.size());
    std::vector<int> path(k);
    for (int q = 0; q < k; ++q) path[q] = data.cycles[cycles[q]].min_vertex();

    // Doubled path: pair q carries weights a_q and a_q + (k_1 + ... + k_q).
    long long prefix = 0;
    for (int q = 0; q + 1 < k; ++q) {
      prefix += data.cycles[cycles[q]].weight;
      out.factors.push_back(
          Reflection::transposition_like(params, path[q], path[q + 1], a[q]));
      out.factors.push_back(Reflection::transposition_like(
          params, path[q], path[q + 1], a[q] + prefix));
    }
    int wt = mod_m(block_weight, m);
    if (wt != 0)
      out.factors.push_back(Reflection::diagonal(params, path.back(), wt));

    // Spanning paths, with weights read off R = delta^{-1} * g restricted to
    // the block: the doubled path and loop multiply to the diagonal element
    // delta carrying each cycle's weight at its minimum, so R's weights are
    // exactly what the trees must produce.
    std::vector<int> id_images(params.n);
    for (int v = 1; v <= params.n; ++v) id_images[v - 1] = v;
    std::vector<long long> delta_w(params.n, 0);
    for (int q = 0; q < k; ++q)
      delta_w[path[q] - 1] = data.cycles[cycles[q]].weight;
    Element delta(params, id_images, delta_w);

    std::vector<int> rest_images = id_images;
    std::vector<long long> rest_w(params.n, 0);
    for (int ci : cycles)
      for (int v : data.cycles[ci].seq) {
        rest_images[v - 1] = g.image(v);
        rest_w[v - 1] = g.weight(v);
      }
    Element g_block(params, rest_images, rest_w);
    Element r = multiply(inverse(delta), g_block);

    for (int ci : cycles) {
      const std::vector<int>& seq = data.cycles[ci].seq;
      for (std::size_t t = 0; t + 1 < seq.size(); ++t)
        out.factors.push_back(Reflection::transposition_like(
            params, seq[t], seq[t + 1], r.weight(seq[t])));
    }
  }

  if (!(product(out) == g))
    throw std::logic_error("build_standard_factorization: product check failed");
  return out;
}

/** The pair weights of a standard-form factorization, one sequence per block
 *  in block order: entry q is the weight of the first factor of pair q at
 *  path vertex v_q.  Throws if f is not in standard form. */
inline std::vector<std::vector<int>> pair_weights(const Factorization& f) {
  Element g = product(f);
  detail::require_shortest(f, g, "pair_weights");
  detail::StandardLayout L = detail::standard_layout(f, g);
  if (!detail::is_standard_form_impl(f, L))
    throw domain_error("pair_weights: factorization is not in standard form");
  std::vector<std::vector<int>> out;
  for (const auto& b : L.blocks) {
    std::vector<int> a;
    for (std::size_t q = 0; q + 1 < b.path.size(); ++q)
      a.push_back(f.factors[b.first + 2 * q].a()); // canonical weight at v_q
    out.push_back(std::move(a));
  }
  return out;
}

namespace detail {

/** Breadth-first search in the Hurwitz orbit of `source`, restricted to the
 *  factor range it spans, for the exact factorization `target`.  Returns the
 *  connecting word (local letters), or throws guard_exceeded past
 *  guards.max_states visited states.  Returns nullopt when the orbit is
 *  exhausted without reaching the target. */
inline std::optional<BraidWord> orbit_search(const Factorization& source,
                                             const Factorization& target,
                                             const Guards& guards) {
  if (source == target) return BraidWord{};
  const int len = static_cast<int>(source.size());
  std::unordered_map<std::string, std::pair<std::size_t, int>> parent;
  // parent: state key -> (index of predecessor in `states`, letter applied)
  std::vector<Factorization> states{source};
  parent.emplace(source.key(), std::make_pair(std::size_t(0), 0));
  std::string target_key = target.key();
  for (std::size_t head = 0; head < states.size(); ++head) {
    for (int t = 1; t < len; ++t)
      for (int sign : {+1, -1}) {
        Factorization next = hurwitz_move(states[head], t, sign < 0);
        std::string key = next.key();
        if (parent.count(key)) continue;
        parent.emplace(key, std::make_pair(head, sign * t));
        if (key == target_key) {
          BraidWord w{sign * t};
          std::size_t at = head;
          while (at != 0) {
            auto& [prev, letter] = parent.at(states[at].key());
            w.push_back(letter);
            at = prev;
          }
          std::reverse(w.begin(), w.end());
          return w;
        }
        if (states.size() >= guards.max_states)
          throw guard_exceeded("orbit search exceeded max_states = " +
                               std::to_string(guards.max_states));
        states.push_back(std::move(next));
      }
  }
  return std::nullopt;
}

} // namespace detail

/** Finds a braid word w with apply_braid(f2, w) = f for standard-form
 *  factorizations of the same element, or nullopt exactly when they are not
 *  Hurwitz-equivalent (different induced partitions, or pair weights not
 *  congruent mod r(B) = gcd(m, cycle weights of the block)).  Per block, a
 *  transfer matrix moves f2's pair weights onto f's, which makes the doubled
 *  paths coincide; a search over the remaining spanning-forest factors (one
 *  Hurwitz orbit, since the forest multiplies to an element with all cycle
 *  weights zero) finishes the job. */
inline std::optional<BraidWord> connect_standard(const Factorization& f,
                                                 const Factorization& f2,
                                                 const Guards& guards = {}) {
  if (!(f.params == f2.params))
    throw domain_error("connect_standard: factorizations of different groups");
  Element g = product(f);
  if (!(product(f2) == g))
    throw domain_error("connect_standard: products differ");
  detail::require_shortest(f, g, "connect_standard");
  detail::StandardLayout Lf = detail::standard_layout(f, g);
  detail::StandardLayout L2 = detail::standard_layout(f2, g);
  if (!detail::is_standard_form_impl(f, Lf) ||
      !detail::is_standard_form_impl(f2, L2))
    throw domain_error("connect_standard: inputs must be in standard form");

  // Same induced partition?
  if (Lf.blocks.size() != L2.blocks.size()) return std::nullopt;
  for (std::size_t b = 0; b < Lf.blocks.size(); ++b)
    if (Lf.blocks[b].cycles != L2.blocks[b].cycles) return std::nullopt;

  // Pair weights congruent mod r(B)?
  const int m = f.params.m;
  std::vector<std::vector<int>> af = pair_weights(f), a2 = pair_weights(f2);
  for (std::size_t b = 0; b < Lf.blocks.size(); ++b) {
    int r = block_gcd(Lf.data, Lf.blocks[b].cycles);
    for (std::size_t q = 0; q < af[b].size(); ++q)
      if (mod_m(af[b][q] - a2[b][q], m) % r != 0) return std::nullopt;
  }

  // Same partition and both standard: the blocks occupy identical intervals.
  Factorization cur = f2;
  BraidWord total;
  auto absorb = [&](const BraidWord& w) {
    cur = apply_braid(cur, w);
    total.insert(total.end(), w.begin(), w.end());
  };
  for (std::size_t b = 0; b < Lf.blocks.size(); ++b) {
    const auto& blk = Lf.blocks[b];
    if (blk.count == 0) continue;
    const int start = static_cast<int>(blk.first);
    const int k = static_cast<int>(blk.path.size());
    const std::size_t pre = 2 * (k - 1) + (blk.block_weight != 0 ? 1 : 0);

    std::optional<TransferMatrix> M = solve_transfer(
        m, detail::StandardLayout::block_diffs(blk, m), a2[b], af[b]);
    if (!M)
      throw std::logic_error("connect_standard: transfer vanished after the "
                             "congruence check");
    absorb(offset_word(realize_transfer(*M, m), start));

    // The doubled paths now coincide; align the forests inside their range.
    Factorization forest_cur{f.params, {}}, forest_target{f.params, {}};
    for (std::size_t t = pre; t < blk.count; ++t) {
      forest_cur.factors.push_back(cur.factors[blk.first + t]);
      forest_target.factors.push_back(f.factors[blk.first + t]);
    }
    std::optional<BraidWord> w =
        detail::orbit_search(forest_cur, forest_target, guards);
    if (!w)
      throw std::logic_error("connect_standard: forest factors were not "
                             "Hurwitz-equivalent");
    absorb(offset_word(*w, start + static_cast<int>(pre)));
  }

  if (!(cur == f))
    throw std::logic_error("connect_standard: verification failed");
  return total;
}

namespace detail {

/** The label of a factor the normalization search tracks: the underlying
 *  transposition {i, j} for a transposition-like factor, (v, v) for a loop.
 *  Hurwitz moves act on labels independently of the weights, so the search
 *  can run in this much smaller space. */
using EdgeLabel = std::pair<int, int>;

inline EdgeLabel edge_label(const Reflection& r) {
  return r.is_diagonal() ? EdgeLabel{r.i(), r.i()} : EdgeLabel{r.i(), r.j()};
}

inline EdgeLabel conjugate_label(const EdgeLabel& e, const EdgeLabel& by) {
  if (by.first == by.second) return e; // diagonal factors fix labels
  auto swap_through = [&by](int v) {
    if (v == by.first) return by.second;
    if (v == by.second) return by.first;
    return v;
  };
  int x = swap_through(e.first), y = swap_through(e.second);
  return x <= y ? EdgeLabel{x, y} : EdgeLabel{y, x};
}

/** Best-first search for a word shaping one block's labels into the standard
 *  pattern: doubled-path pairs on the cycle minima first, then the loop.
 *  States are label sequences; the priority counts prefix positions not yet
 *  matching, so already-standard blocks cost nothing. */
inline BraidWord shape_block(const std::vector<EdgeLabel>& start,
                             const std::vector<EdgeLabel>& prefix_pattern,
                             const Guards& guards, std::uint64_t& visited) {
  const int len = static_cast<int>(start.size());
  auto mismatch_count = [&prefix_pattern](const std::vector<EdgeLabel>& s) {
    int h = 0;
    for (std::size_t t = 0; t < prefix_pattern.size(); ++t)
      if (s[t] != prefix_pattern[t]) ++h;
    return h;
  };
  struct Node {
    std::vector<EdgeLabel> labels;
    BraidWord word;
  };
  std::vector<Node> nodes{{start, {}}};
  // (mismatches, insertion order) priority; insertion order breaks ties
  // deterministically and keeps the queue stable.
  using Entry = std::pair<std::pair<int, std::size_t>, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  std::map<std::vector<EdgeLabel>, char> seen;
  seen.emplace(start, 1);
  queue.push({{mismatch_count(start), 0}, 0});
  while (!queue.empty()) {
    auto [prio, at] = queue.top();
    queue.pop();
    if (prio.first == 0) return nodes[at].word;
    for (int t = 1; t < len; ++t)
      for (int sign : {+1, -1}) {
        std::vector<EdgeLabel> next = nodes[at].labels;
        if (sign > 0) {
          EdgeLabel moved = conjugate_label(next[t - 1], next[t]);
          next[t - 1] = next[t];
          next[t] = moved;
        } else {
          EdgeLabel moved = conjugate_label(next[t], next[t - 1]);
          next[t] = next[t - 1];
          next[t - 1] = moved;
        }
        if (seen.count(next)) continue;
        seen.emplace(next, 1);
        if (++visited > guards.max_states)
          throw guard_exceeded("normalize exceeded max_states = " +
                               std::to_string(guards.max_states));
        BraidWord w = nodes[at].word;
        w.push_back(sign * t);
        int h = mismatch_count(next);
        nodes.push_back({std::move(next), std::move(w)});
        queue.push({{h, nodes.size() - 1}, nodes.size() - 1});
      }
  }
  throw std::logic_error("normalize: no standard shape reachable in a block");
}

} // namespace detail

struct NormalizeResult {
  Factorization standard;
  BraidWord word; // apply_braid(input, word) == standard
};

/** Normalizes a shortest factorization to standard form: first sorts the
 *  factors by graph component with adjacent swaps of commuting factors, then
 *  shapes each block by a search over factor labels (Hurwitz moves act on
 *  underlying transpositions and loop vertices independently of weights).
 *  Returns the standard form and the braid word that reaches it. */
inline NormalizeResult normalize(const Factorization& f,
                                 const Guards& guards = {}) {
  Element g = product(f);
  detail::require_shortest(f, g, "normalize");

  Factorization cur = f;
  BraidWord total;

  // Phase 1: make blocks contiguous and ordered by smallest vertex.  Factors
  // in different components commute, and a Hurwitz move on a commuting pair
  // swaps the two factors exactly, so this is a bubble sort.
  std::vector<int> comp = graph_components(factorization_graph(cur));
  const int len = static_cast<int>(cur.size());
  for (bool sorted = false; !sorted;) {
    sorted = true;
    for (int t = 0; t + 1 < len; ++t) {
      int ca = comp[cur.factors[t].i()], cb = comp[cur.factors[t + 1].i()];
      if (ca > cb) {
        cur = hurwitz_move(cur, t + 1);
        total.push_back(t + 1);
        sorted = false;
      }
    }
  }

  // Phase 2: shape each block's prefix into the doubled path plus loop.
  detail::StandardLayout L = detail::standard_layout(cur, g);
  std::uint64_t visited = 0;
  for (const auto& blk : L.blocks) {
    if (blk.count == 0) continue;
    const int k = static_cast<int>(blk.path.size());
    std::vector<detail::EdgeLabel> labels, pattern;
    for (std::size_t t = 0; t < blk.count; ++t)
      labels.push_back(detail::edge_label(cur.factors[blk.first + t]));
    for (int q = 0; q + 1 < k; ++q) {
      pattern.push_back({blk.path[q], blk.path[q + 1]});
      pattern.push_back({blk.path[q], blk.path[q + 1]});
    }
    if (blk.block_weight != 0)
      pattern.push_back({blk.path.back(), blk.path.back()});
    BraidWord local = detail::shape_block(labels, pattern, guards, visited);
    BraidWord global = offset_word(local, static_cast<int>(blk.first));
    cur = apply_braid(cur, global);
    total.insert(total.end(), global.begin(), global.end());
  }

  if (!detail::is_standard_form_impl(cur, detail::standard_layout(cur, g)))
    throw std::logic_error("normalize: result failed the standard-form check");
  return {std::move(cur), std::move(total)};
}

} // namespace gmpn
