#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "permuta/config.hpp"
#include "permuta/finite_group.hpp"

namespace permuta {

struct SubgroupReport {
  SubgroupSet subgroup;
  bool is_normal = false;
  bool is_permutable = false;
  bool is_subnormal = false;
  std::optional<std::size_t> defect;
  SubgroupSet core;
  SubgroupSet normal_closure;
  bool radical_over = false;
};

// N <| G.
bool is_normal(const FiniteGroup& g, const SubgroupSet& n);
// N <| K for subgroups N <= K of one parent.
bool is_normal_in(const SubgroupSet& k, const SubgroupSet& n);

// N<x> = <x>N for every x in G. The cyclic subgroups may be passed in when
// the caller already has them.
bool is_permutable(const FiniteGroup& g, const SubgroupSet& n);
bool is_permutable(const FiniteGroup& g, const SubgroupSet& n, const std::vector<SubgroupSet>& cyclics);

// Intersection of the conjugates g^-1 H g.
SubgroupSet core(const FiniteGroup& g, const SubgroupSet& h);
// Subgroup generated by the conjugates of H.
SubgroupSet normal_closure(const FiniteGroup& g, const SubgroupSet& h);
SubgroupSet normal_closure_in(const SubgroupSet& k, const SubgroupSet& h);

// Minimal r with N = N_r <| ... <| N_0 = G, read off the descending series
// G >= N^G >= N^(N^G) >= ...; nullopt when it stalls above N.
std::optional<std::size_t> subnormal_defect(const FiniteGroup& g, const SubgroupSet& n);

// Every x in G has a positive power in H.
bool is_radical_over(const FiniteGroup& g, const SubgroupSet& h);

SubgroupReport analyze_subgroup(const FiniteGroup& g, const SubgroupSet& n,
                                const std::vector<SubgroupSet>& cyclics);
SubgroupReport analyze_subgroup(const FiniteGroup& g, const SubgroupSet& n);

// One report per subgroup, in input order; subgroups are split across
// OpenMP threads.
std::vector<SubgroupReport> classify_subgroups(const FiniteGroup& g,
                                               const std::vector<SubgroupSet>& subgroups);

// The six permutability criteria evaluated independently.
struct PermutabilityCriteria {
  bool products_nm_subgroups = false;  // NM is a subgroup for all M
  bool products_mn_subgroups = false;  // MN is a subgroup for all M
  bool nm_equals_mn = false;           // NM = MN for all M
  bool cyclic_commute = false;         // N<x> = <x>N for all x
  bool left_exchange = false;          // ax = x^n a'
  bool right_exchange = false;         // xa = a' x^n
  bool all_agree() const;
  bool all_true() const;
};

PermutabilityCriteria check_permutability_criteria(const FiniteGroup& g, const SubgroupSet& n,
                                                   const std::vector<SubgroupSet>& all);
PermutabilityCriteria check_permutability_criteria(const FiniteGroup& g, const SubgroupSet& n,
                                                   const Limits& limits = {});

// H <| H^G, and H' <= H_G. Diagnostic only: a finite group never has the
// infinite cyclic subgroup the general statement asks for.
struct GrossConclusion {
  bool normal_in_closure = false;
  bool quotient_by_core_abelian = false;
};

GrossConclusion check_gross_conclusion(const FiniteGroup& g, const SubgroupSet& h);

}  // namespace permuta
