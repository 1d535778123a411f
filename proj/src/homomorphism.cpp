#include "permuta/homomorphism.hpp"

#include "permuta/error.hpp"

namespace permuta {

using Index = FiniteGroup::Index;

bool Homomorphism::is_surjective() const {
  IndexSet hit(target->order());
  for (auto y : map) hit.insert(y);
  return hit.size() == target->order();
}

Homomorphism make_homomorphism(const FiniteGroup& source, const FiniteGroup& target, std::vector<Index> map) {
  if (map.size() != source.order()) throw InvalidGroup("homomorphism map has wrong length");
  for (auto y : map)
    if (y >= target.order()) throw InvalidGroup("homomorphism image out of range");
  for (Index a = 0; a < source.order(); ++a)
    for (Index b = 0; b < source.order(); ++b)
      if (map[source.mul(a, b)] != target.mul(map[a], map[b]))
        throw InvalidGroup("map is not a homomorphism");
  return Homomorphism{&source, &target, std::move(map)};
}

Homomorphism homomorphism_from_generator_images(const FiniteGroup& source, const FiniteGroup& target,
                                                const std::vector<Index>& images) {
  const auto& gens = source.generators();
  if (images.size() != gens.size()) throw InvalidGroup("need one image per source generator");
  constexpr Index unset = ~Index{0};
  std::vector<Index> map(source.order(), unset);
  std::vector<Index> queue{source.identity()};
  map[source.identity()] = target.identity();
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Index x = queue[i];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const Index y = source.mul(x, gens[k]);
      const Index fy = target.mul(map[x], images[k]);
      if (map[y] == unset) {
        map[y] = fy;
        queue.push_back(y);
      } else if (map[y] != fy) {
        throw InvalidGroup("generator images do not define a homomorphism");
      }
    }
  }
  return make_homomorphism(source, target, std::move(map));
}

Homomorphism homomorphism_from_function(const FiniteGroup& source, const FiniteGroup& target,
                                        const std::function<Element(const Element&)>& f) {
  std::vector<Index> map(source.order());
  for (Index x = 0; x < source.order(); ++x) {
    auto y = target.index_of(f(source.element(x)));
    if (!y) throw InvalidGroup("function image is not an element of the target group");
    map[x] = *y;
  }
  return make_homomorphism(source, target, std::move(map));
}

SubgroupSet preimage(const Homomorphism& h, const SubgroupSet& m) {
  IndexSet s(h.source->order());
  for (Index x = 0; x < h.source->order(); ++x)
    if (m.contains(h.map[x])) s.insert(x);
  return SubgroupSet(*h.source, std::move(s));
}

SubgroupSet image(const Homomorphism& h, const SubgroupSet& n) {
  IndexSet s(h.target->order());
  n.members().for_each([&](std::size_t x) { s.insert(h.map[x]); });
  return SubgroupSet(*h.target, std::move(s));
}

}  // namespace permuta
