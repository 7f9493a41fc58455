#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "gmpn/element.hpp"
#include "gmpn/errors.hpp"
#include "gmpn/guards.hpp"

namespace gmpn {

/** One cycle of the underlying permutation: `seq` lists the support in cycle
 *  order starting from its smallest element (so seq[k+1] = u(seq[k])), and
 *  `weight` is the sum of the element's weights over the support, mod m.
 *  Fixed points count as cycles of length one. */
struct Cycle {
  std::vector<int> seq; // 1-based vertices
  int weight = 0;       // canonical residue in [0, m)

  int min_vertex() const { return seq.front(); }
};

/** The cycles of an element, sorted by smallest support element. */
struct CycleData {
  GroupParams params;
  std::vector<Cycle> cycles;

  int count() const { return static_cast<int>(cycles.size()); }
};

inline CycleData cycle_data(const Element& g) {
  const int n = g.n(), m = g.m();
  CycleData data{g.params(), {}};
  std::vector<char> seen(n + 1, 0);
  for (int start = 1; start <= n; ++start) {
    if (seen[start]) continue;
    Cycle c;
    long long w = 0;
    int v = start;
    do {
      seen[v] = 1;
      c.seq.push_back(v);
      w += g.weight(v);
      v = g.image(v);
    } while (v != start);
    c.weight = mod_m(w, m);
    data.cycles.push_back(std::move(c));
  }
  return data; // iteration from 1..n already yields min-vertex sorted cycles
}

/** A cycle partition: a set partition of the cycles in which every block's
 *  total weight is 0 mod p.  Blocks store 0-based indices into
 *  CycleData::cycles; each block is sorted and blocks are sorted by their
 *  smallest member, which is also the canonical comparison encoding. */
struct CyclePartition {
  GroupParams params;
  std::vector<std::vector<int>> blocks;
  std::vector<int> block_weights; // mod m, aligned with blocks

  int size() const { return static_cast<int>(blocks.size()); }

  bool operator==(const CyclePartition& o) const { return blocks == o.blocks; }
  bool operator<(const CyclePartition& o) const { return blocks < o.blocks; }
};

/** v(P) = |P| + #{blocks of weight exactly 0 mod m}. */
inline int partition_value(const CyclePartition& partition) {
  int zero_blocks = 0;
  for (int w : partition.block_weights)
    if (w == 0) ++zero_blocks;
  return partition.size() + zero_blocks;
}

namespace detail {

inline void canonicalize_partition(CyclePartition& partition) {
  std::vector<std::size_t> order(partition.blocks.size());
  for (std::size_t b = 0; b < order.size(); ++b) order[b] = b;
  for (auto& block : partition.blocks) std::sort(block.begin(), block.end());
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return partition.blocks[x].front() < partition.blocks[y].front();
  });
  std::vector<std::vector<int>> blocks;
  std::vector<int> weights;
  for (std::size_t b : order) {
    blocks.push_back(std::move(partition.blocks[b]));
    weights.push_back(partition.block_weights[b]);
  }
  partition.blocks = std::move(blocks);
  partition.block_weights = std::move(weights);
}

} // namespace detail

/** All cycle partitions of `data`, i.e. set partitions of the cycles whose
 *  every block weight is 0 mod p, in canonical (block-encoding lexicographic)
 *  order.  Guarded: refuses more than guards.max_cycles_for_partitions cycles. */
inline std::vector<CyclePartition> enumerate_cycle_partitions(
    const CycleData& data, const Guards& guards = {}) {
  const int c = data.count();
  if (c > guards.max_cycles_for_partitions)
    throw guard_exceeded("enumerate_cycle_partitions: " + std::to_string(c) +
                         " cycles exceeds the partition-enumeration cap of " +
                         std::to_string(guards.max_cycles_for_partitions));
  const int p = data.params.p, m = data.params.m;
  std::vector<CyclePartition> out;
  // Restricted-growth-string sweep over all set partitions of the c cycles.
  std::vector<int> rgs(c, 0);
  auto emit = [&]() {
    int nblocks = 1 + *std::max_element(rgs.begin(), rgs.end());
    CyclePartition partition{data.params, {}, {}};
    partition.blocks.assign(nblocks, {});
    std::vector<long long> w(nblocks, 0);
    for (int k = 0; k < c; ++k) {
      partition.blocks[rgs[k]].push_back(k);
      w[rgs[k]] += data.cycles[k].weight;
    }
    for (long long bw : w) {
      if (bw % p != 0) return;
      partition.block_weights.push_back(mod_m(bw, m));
    }
    detail::canonicalize_partition(partition);
    out.push_back(std::move(partition));
  };
  // Iterative RGS enumeration: rgs[0] = 0, rgs[k] <= 1 + max(rgs[0..k-1]).
  while (true) {
    emit();
    int k = c - 1;
    for (; k > 0; --k) {
      int maxhead = 0;
      for (int t = 0; t < k; ++t) maxhead = std::max(maxhead, rgs[t]);
      if (rgs[k] <= maxhead) break;
    }
    if (k == 0) break;
    ++rgs[k];
    for (int t = k + 1; t < c; ++t) rgs[t] = 0;
  }
  std::sort(out.begin(), out.end());
  return out;
}

/** The cycle partitions of maximum value v(P), canonical order. */
inline std::vector<CyclePartition> max_cycle_partitions(
    const CycleData& data, const Guards& guards = {}) {
  std::vector<CyclePartition> all = enumerate_cycle_partitions(data, guards);
  int best = 0;
  for (const auto& partition : all)
    best = std::max(best, partition_value(partition));
  std::vector<CyclePartition> out;
  for (auto& partition : all)
    if (partition_value(partition) == best) out.push_back(std::move(partition));
  return out;
}

inline std::vector<CyclePartition> enumerate_cycle_partitions(
    const Element& g, const Guards& guards = {}) {
  return enumerate_cycle_partitions(cycle_data(g), guards);
}

inline std::vector<CyclePartition> max_cycle_partitions(
    const Element& g, const Guards& guards = {}) {
  return max_cycle_partitions(cycle_data(g), guards);
}

} // namespace gmpn
