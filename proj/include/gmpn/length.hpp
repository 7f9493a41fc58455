#pragma once

#include <cstdint>
#include <deque>
#include <string>
#include <unordered_map>
#include <vector>

#include "gmpn/cycles.hpp"
#include "gmpn/element.hpp"
#include "gmpn/errors.hpp"
#include "gmpn/guards.hpp"
#include "gmpn/reflection.hpp"

namespace gmpn {

/** Reflection length by Shi's formula:
 *  l_R(g) = n + cyc(g) - max{ v(P) : P a cycle partition of g }. */
inline int reflection_length(const Element& g, const Guards& guards = {}) {
  CycleData data = cycle_data(g);
  int best = 0;
  for (const auto& partition : enumerate_cycle_partitions(data, guards))
    best = std::max(best, partition_value(partition));
  return g.n() + data.count() - best;
}

/** The closed special cases of Shi's formula:
 *   - p = 1:  l_R(g) = n - #{cycles of weight 0 mod m};
 *   - p = m:  l_R(g) = n + cyc(g) - 2 max{|P| : P with all block weights 0 mod m}.
 *  Any other p is a domain error. */
inline int reflection_length_special(const Element& g, const Guards& guards = {}) {
  const GroupParams& params = g.params();
  CycleData data = cycle_data(g);
  if (params.p == 1) {
    int zero_cycles = 0;
    for (const Cycle& c : data.cycles)
      if (c.weight == 0) ++zero_cycles;
    return params.n - zero_cycles;
  }
  if (params.p == params.m) {
    // For p = m every block of a cycle partition has weight 0 mod m, so
    // v(P) = 2|P| and only the block count matters.
    int max_blocks = 0;
    for (const auto& partition : enumerate_cycle_partitions(data, guards))
      max_blocks = std::max(max_blocks, partition.size());
    return params.n + data.count() - 2 * max_blocks;
  }
  throw domain_error("reflection_length_special: closed form only for p=1 or p=m, group is " +
                     params.str());
}

/** Distances from the identity in the Cayley graph of G(m,p,n) with respect
 *  to its full reflection set, built by breadth-first search.  Refuses groups
 *  whose order exceeds guards.max_states. */
class LengthTable {
public:
  explicit LengthTable(const GroupParams& params, const Guards& guards = {})
      : params_(params) {
    if (!params.order_within(guards.max_states))
      throw guard_exceeded("LengthTable: order of " + params.str() +
                           " exceeds the BFS state cap of " +
                           std::to_string(guards.max_states));
    std::vector<Reflection> gens = enumerate_reflections(params);
    std::vector<Element> gen_elements;
    gen_elements.reserve(gens.size());
    for (const Reflection& r : gens) gen_elements.push_back(r.to_element());

    Element id = Element::identity(params);
    dist_.emplace(id.key(), 0);
    std::deque<Element> frontier{id};
    while (!frontier.empty()) {
      Element g = frontier.front();
      frontier.pop_front();
      int d = dist_.at(g.key());
      for (const Element& t : gen_elements) {
        Element h = multiply(g, t);
        auto [it, inserted] = dist_.emplace(h.key(), d + 1);
        if (inserted) frontier.push_back(h);
      }
    }
  }

  const GroupParams& params() const { return params_; }
  std::size_t size() const { return dist_.size(); }

  int at(const Element& g) const {
    if (g.params() != params_)
      throw domain_error("LengthTable: element from a different group");
    auto it = dist_.find(g.key());
    if (it == dist_.end())
      throw domain_error("LengthTable: element not reached by BFS");
    return it->second;
  }

private:
  GroupParams params_;
  std::unordered_map<std::string, int> dist_;
};

/** Reflection length by direct BFS over the Cayley graph (the oracle for
 *  Shi's formula).  Stops as soon as g is reached. */
inline int reflection_length_bruteforce(const Element& g, const Guards& guards = {}) {
  const GroupParams& params = g.params();
  if (!params.order_within(guards.max_states))
    throw guard_exceeded("reflection_length_bruteforce: order of " + params.str() +
                         " exceeds the BFS state cap of " +
                         std::to_string(guards.max_states));
  Element id = Element::identity(params);
  if (g == id) return 0;
  std::vector<Element> gen_elements;
  for (const Reflection& r : enumerate_reflections(params))
    gen_elements.push_back(r.to_element());
  std::unordered_map<std::string, int> dist;
  dist.emplace(id.key(), 0);
  std::deque<Element> frontier{id};
  while (!frontier.empty()) {
    Element h = frontier.front();
    frontier.pop_front();
    int d = dist.at(h.key());
    for (const Element& t : gen_elements) {
      Element next = multiply(h, t);
      auto [it, inserted] = dist.emplace(next.key(), d + 1);
      if (inserted) {
        if (next == g) return d + 1;
        frontier.push_back(next);
      }
    }
  }
  throw domain_error("reflection_length_bruteforce: element not generated by reflections");
}

} // namespace gmpn
