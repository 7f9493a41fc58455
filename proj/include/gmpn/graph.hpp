#pragma once

#include <algorithm>
#include <vector>

#include "gmpn/cycles.hpp"
#include "gmpn/errors.hpp"
#include "gmpn/factorization.hpp"

namespace gmpn {

/** The multigraph of a factorization: vertices 1..n, and for each factor one
 *  positional edge — {i, j} for a transposition-like factor, a loop at i for
 *  a diagonal one. */
struct FactorizationGraph {
  struct Edge {
    int u, v; // 1-based; u == v encodes a loop
    bool is_loop() const { return u == v; }
  };
  int n = 0;
  std::vector<Edge> edges;
};

inline FactorizationGraph factorization_graph(const Factorization& f) {
  FactorizationGraph graph{f.params.n, {}};
  graph.edges.reserve(f.size());
  for (const Reflection& r : f.factors) {
    if (r.is_diagonal())
      graph.edges.push_back({r.i(), r.i()});
    else
      graph.edges.push_back({r.i(), r.j()});
  }
  return graph;
}

/** Connected-component id per vertex (index 0 unused); the id of a component
 *  is its smallest vertex. */
inline std::vector<int> graph_components(const FactorizationGraph& graph) {
  std::vector<int> parent(graph.n + 1);
  for (int v = 1; v <= graph.n; ++v) parent[v] = v;
  auto find = [&parent](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& e : graph.edges) {
    int a = find(e.u), b = find(e.v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> comp(graph.n + 1, 0);
  for (int v = 1; v <= graph.n; ++v) comp[v] = find(v);
  return comp;
}

/** The cycle partition of product(f) induced by the components of the
 *  factorization graph: cycles sharing a component share a block.  Every
 *  cycle's support lies inside one component, and block weights are
 *  automatically 0 mod p (transposition-like factors have weight 0 and
 *  diagonal factors have weight 0 mod p). */
inline CyclePartition induced_partition(const Factorization& f) {
  Element g = product(f);
  CycleData data = cycle_data(g);
  std::vector<int> comp = graph_components(factorization_graph(f));
  CyclePartition partition{f.params, {}, {}};
  std::vector<int> block_of_comp(f.params.n + 1, -1);
  std::vector<long long> weights;
  for (int ci = 0; ci < data.count(); ++ci) {
    int c = comp[data.cycles[ci].min_vertex()];
    if (block_of_comp[c] == -1) {
      block_of_comp[c] = static_cast<int>(partition.blocks.size());
      partition.blocks.emplace_back();
      weights.push_back(0);
    }
    partition.blocks[block_of_comp[c]].push_back(ci);
    weights[block_of_comp[c]] += data.cycles[ci].weight;
  }
  for (long long w : weights) partition.block_weights.push_back(mod_m(w, f.params.m));
  detail::canonicalize_partition(partition);
  return partition;
}

} // namespace gmpn
