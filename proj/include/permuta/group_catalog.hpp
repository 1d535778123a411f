#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "permuta/config.hpp"
#include "permuta/finite_group.hpp"

namespace permuta {

// Group-spec grammar:
//   S(n)  C(n)  D(n) (dihedral of order 2n)  Q8  M16 (modular, order 16)
//   GL(n,q)  SL(n,q)  perm[(1 2),(1 2 3)]  cayley:<path>
// The cayley file holds whitespace-separated integers: the order, then the
// 0-indexed multiplication table row by row.
std::shared_ptr<const FiniteGroup> parse_group(std::string_view spec, const Limits& limits = {});

FiniteGroup symmetric_group(std::size_t n, const Limits& limits = {});
FiniteGroup cyclic_group(std::size_t n, const Limits& limits = {});
FiniteGroup dihedral_group(std::size_t n, const Limits& limits = {});
FiniteGroup quaternion_group();
FiniteGroup modular_group_16();
FiniteGroup cayley_group_from_file(const std::string& path);
FiniteGroup cayley_group_from_text(std::string_view text);

// Specs for the small-group corpus: every grammar instance of order <= 16.
std::vector<std::string> small_group_corpus();

}  // namespace permuta
