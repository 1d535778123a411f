#pragma once

// Test-only brute-force references. They use nothing from the library
// beyond the multiplication and inverse tables of FiniteGroup.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "permuta/finite_group.hpp"

namespace oracle {

using Index = permuta::FiniteGroup::Index;
using Set = std::vector<bool>;  // membership by element index

// Closure of a generating set under multiplication (finite groups only).
Set closure(const permuta::FiniteGroup& g, const std::vector<Index>& gens);

// Every subset that is a subgroup. Exponential; order <= 12.
std::set<std::vector<Index>> subgroups_by_subsets(const permuta::FiniteGroup& g);

// Every subgroup, found by extending <H, x> from the trivial group.
std::set<std::vector<Index>> subgroups_by_extension(const permuta::FiniteGroup& g);

std::vector<Index> members(const Set& s);
Set as_set(std::size_t order, const std::vector<Index>& members);

bool is_normal(const permuta::FiniteGroup& g, const Set& h);
// HK == KH for every subgroup K of the given list.
bool permutes_with_all(const permuta::FiniteGroup& g, const Set& h, const std::set<std::vector<Index>>& all);

// Kernel of the action of G on the right cosets of H.
Set coset_action_kernel(const permuta::FiniteGroup& g, const Set& h);

// Shortest chain N = N_r <| ... <| N_0 = G through subgroups of the list.
std::optional<std::size_t> subnormal_defect_by_chains(const permuta::FiniteGroup& g, const Set& n,
                                                      const std::set<std::vector<Index>>& all);

// ---- group algebra over a prime field Z/p, coefficient vectors by element index ----

using Coeffs = std::vector<int>;

Coeffs convolve(const permuta::FiniteGroup& g, int p, const Coeffs& a, const Coeffs& b);
bool is_nilpotent(const permuta::FiniteGroup& g, int p, const Coeffs& x);

// x in J(F_pG) iff the two-sided ideal F_pG x F_pG is nilpotent.
bool in_radical(const permuta::FiniteGroup& g, int p, const Coeffs& x);

// All of F_pG scanned; returns the radical's elements by base-p code.
// The scan is split across OpenMP threads.
std::vector<std::uint64_t> radical_elements(const permuta::FiniteGroup& g, int p);
std::vector<std::uint64_t> radical_elements_serial(const permuta::FiniteGroup& g, int p);

Coeffs decode(std::uint64_t code, std::size_t n, int p);
std::uint64_t encode(const Coeffs& c, int p);

// All b with ab = 1, by exhaustive search.
std::vector<Coeffs> inverses_by_search(const permuta::FiniteGroup& g, int p, const Coeffs& a);

}  // namespace oracle
