#include "permuta/lattice.hpp"

#include <algorithm>
#include <unordered_set>

#include "parallel.hpp"
#include "permuta/error.hpp"

namespace permuta {

using Index = FiniteGroup::Index;

void sort_canonical(std::vector<SubgroupSet>& subgroups) {
  std::sort(subgroups.begin(), subgroups.end(), [](const SubgroupSet& a, const SubgroupSet& b) {
    return canonical_less(a.members(), b.members());
  });
}

std::vector<SubgroupSet> cyclic_subgroups(const FiniteGroup& g) {
  std::vector<SubgroupSet> out;
  std::unordered_set<IndexSet, IndexSetHash> seen;
  for (Index x = 0; x < g.order(); ++x) {
    auto c = cyclic_subgroup(g, x);
    if (seen.insert(c.members()).second) out.push_back(std::move(c));
  }
  sort_canonical(out);
  return out;
}

std::vector<SubgroupSet> all_subgroups(const FiniteGroup& g, const Limits& limits) {
  if (g.order() > limits.lattice_cap)
    throw OrderCapExceeded("subgroup lattice of order " + std::to_string(g.order()) +
                           " exceeds cap " + std::to_string(limits.lattice_cap));
  const auto cyclic = cyclic_subgroups(g);
  std::unordered_set<IndexSet, IndexSetHash> seen;
  std::vector<SubgroupSet> found;
  for (const auto& c : cyclic) {
    seen.insert(c.members());
    found.push_back(c);
  }
  std::vector<SubgroupSet> frontier = cyclic;

  while (!frontier.empty()) {
    const long long pairs = static_cast<long long>(frontier.size()) * static_cast<long long>(cyclic.size());
    std::vector<std::vector<SubgroupSet>> per_thread;
#pragma omp parallel
    {
#pragma omp single
      per_thread.resize(static_cast<std::size_t>(omp_thread_count()));
      std::vector<SubgroupSet> local;
      std::unordered_set<IndexSet, IndexSetHash> local_seen;
#pragma omp for schedule(dynamic, 16) nowait
      for (long long t = 0; t < pairs; ++t) {
        const auto& h = frontier[static_cast<std::size_t>(t) / cyclic.size()];
        const auto& c = cyclic[static_cast<std::size_t>(t) % cyclic.size()];
        if (c.subgroup_of(h)) continue;
        auto j = join(h, c);
        if (seen.count(j.members()) || !local_seen.insert(j.members()).second) continue;
        local.push_back(std::move(j));
      }
      per_thread[static_cast<std::size_t>(omp_thread_id())] = std::move(local);
    }
    std::vector<SubgroupSet> next;
    for (auto& bucket : per_thread)
      for (auto& s : bucket)
        if (seen.insert(s.members()).second) next.push_back(std::move(s));
    sort_canonical(next);
    for (const auto& s : next) found.push_back(s);
    frontier = std::move(next);
  }
  sort_canonical(found);
  return found;
}

}  // namespace permuta
