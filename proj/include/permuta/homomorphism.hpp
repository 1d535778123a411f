#pragma once

#include <functional>
#include <vector>

#include "permuta/finite_group.hpp"

namespace permuta {

// A group homomorphism given as an index map source -> target. Both groups
// must outlive it.
struct Homomorphism {
  const FiniteGroup* source = nullptr;
  const FiniteGroup* target = nullptr;
  std::vector<FiniteGroup::Index> map;

  FiniteGroup::Index operator()(FiniteGroup::Index x) const { return map[x]; }
  bool is_surjective() const;
};

// Validates map as a homomorphism; throws InvalidGroup otherwise.
Homomorphism make_homomorphism(const FiniteGroup& source, const FiniteGroup& target,
                               std::vector<FiniteGroup::Index> map);

// Extends generator images (one per source generator) along the source's
// words; throws InvalidGroup if the assignment is not well defined.
Homomorphism homomorphism_from_generator_images(const FiniteGroup& source, const FiniteGroup& target,
                                                const std::vector<FiniteGroup::Index>& images);

// Applies f to each source element representation and looks the result up
// in target.
Homomorphism homomorphism_from_function(const FiniteGroup& source, const FiniteGroup& target,
                                        const std::function<Element(const Element&)>& f);

SubgroupSet preimage(const Homomorphism& h, const SubgroupSet& m);
SubgroupSet image(const Homomorphism& h, const SubgroupSet& n);

}  // namespace permuta
