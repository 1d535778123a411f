#include <unordered_set>

#include "permuta/error.hpp"
#include "permuta/lattice.hpp"
#include "permuta/serial.hpp"

namespace permuta::serial {

std::vector<SubgroupSet> all_subgroups(const FiniteGroup& g, const Limits& limits) {
  if (g.order() > limits.lattice_cap)
    throw OrderCapExceeded("subgroup lattice of order " + std::to_string(g.order()) +
                           " exceeds cap " + std::to_string(limits.lattice_cap));
  const auto cyclic = cyclic_subgroups(g);
  std::unordered_set<IndexSet, IndexSetHash> seen;
  std::vector<SubgroupSet> found = cyclic;
  for (const auto& c : cyclic) seen.insert(c.members());

  std::vector<SubgroupSet> frontier = cyclic;
  while (!frontier.empty()) {
    std::vector<SubgroupSet> next;
    for (const auto& h : frontier)
      for (const auto& c : cyclic) {
        if (c.subgroup_of(h)) continue;
        auto j = join(h, c);
        if (seen.insert(j.members()).second) next.push_back(std::move(j));
      }
    for (const auto& s : next) found.push_back(s);
    frontier = std::move(next);
  }
  sort_canonical(found);
  return found;
}

std::vector<SubgroupReport> classify_subgroups(const FiniteGroup& g,
                                               const std::vector<SubgroupSet>& subgroups) {
  const auto cyclics = cyclic_subgroups(g);
  std::vector<SubgroupReport> out;
  out.reserve(subgroups.size());
  for (const auto& s : subgroups) out.push_back(analyze_subgroup(g, s, cyclics));
  return out;
}

}  // namespace permuta::serial
