#pragma once

// Single-threaded reference versions of the OpenMP kernels. Kept for the
// equivalence tests and as the benchmark baseline.

#include <vector>

#include "permuta/config.hpp"
#include "permuta/finite_group.hpp"
#include "permuta/subgroup_analysis.hpp"

namespace permuta::serial {

std::vector<SubgroupSet> all_subgroups(const FiniteGroup& g, const Limits& limits = {});

std::vector<SubgroupReport> classify_subgroups(const FiniteGroup& g,
                                               const std::vector<SubgroupSet>& subgroups);

}  // namespace permuta::serial
