#pragma once

#include <cstddef>

namespace permuta {

// Hard limits. Exceeding one raises instead of running unbounded.
struct Limits {
  std::size_t closure_cap = 10000;  // elements produced by generate_group
  std::size_t lattice_cap = 500;    // group order accepted by all_subgroups
  std::size_t algebra_order_cap = 32;
  int algebra_field_cap = 9;
};

}  // namespace permuta
