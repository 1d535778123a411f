#pragma once

#include <vector>

#include "permuta/config.hpp"
#include "permuta/finite_group.hpp"

namespace permuta {

// Distinct cyclic subgroups, canonically ordered.
std::vector<SubgroupSet> cyclic_subgroups(const FiniteGroup& g);

// Every subgroup of g, sorted by size then by member list. Bottom-up: the
// cyclic subgroups are closed under joins with cyclic subgroups, each round's
// join candidates split across OpenMP threads. Throws OrderCapExceeded when
// g.order() > limits.lattice_cap.
std::vector<SubgroupSet> all_subgroups(const FiniteGroup& g, const Limits& limits = {});

void sort_canonical(std::vector<SubgroupSet>& subgroups);

}  // namespace permuta
