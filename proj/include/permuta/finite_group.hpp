#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "permuta/config.hpp"
#include "permuta/index_set.hpp"
#include "permuta/matrix_fq.hpp"
#include "permuta/permutation.hpp"

namespace permuta {

// Abstract element of a group read from a multiplication table.
struct TableElement {
  std::size_t index = 0;
  friend bool operator==(TableElement, TableElement) = default;
};

using Element = std::variant<Permutation, MatrixFq, TableElement>;

// A finite group materialized as an indexed element list with full
// multiplication and inverse tables. Immutable once built; safe to share
// read-only across threads.
class FiniteGroup {
 public:
  using Index = std::uint32_t;

  // Breadth-first closure from the identity, generators in the order given.
  static FiniteGroup generate(const std::vector<Element>& generators, const Limits& limits = {});
  // table[i * order + j] = i * j, 0-indexed. Validates the group axioms.
  static FiniteGroup from_table(std::size_t order, std::vector<Index> table);

  std::size_t order() const { return order_; }
  Index identity() const { return identity_; }
  Index mul(Index a, Index b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  Index inv(Index a) const { return inv_[a]; }
  Index conjugate(Index x, Index g) const { return mul(mul(inv(g), x), g); }  // g^-1 x g
  Index power(Index x, long long e) const;
  std::size_t element_order(Index x) const;

  const Element& element(Index i) const { return elements_[i]; }
  std::optional<Index> index_of(const Element& e) const;
  const std::vector<Index>& generators() const { return generators_; }

  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }
  std::string element_label(Index i) const;

  bool is_abelian() const;

  // Latin square, inverse table, associativity (exhaustive up to order 64,
  // sampled above). Throws InvalidGroup on failure.
  void validate(std::uint64_t seed = 0) const;

 private:
  FiniteGroup() = default;
  static std::string key_of(const Element& e);

  std::size_t order_ = 0;
  Index identity_ = 0;
  std::vector<Index> table_;
  std::vector<Index> inv_;
  std::vector<Element> elements_;
  std::vector<Index> generators_;
  std::unordered_map<std::string, Index> index_;
  std::string label_;
};

// A subset of a group's element indices closed under product and inverse.
// Holds a non-owning pointer: the parent must outlive it.
class SubgroupSet {
 public:
  SubgroupSet() = default;
  // Checks closure, identity and Lagrange; throws InvalidGroup otherwise.
  SubgroupSet(const FiniteGroup& parent, IndexSet members);

  static SubgroupSet trivial(const FiniteGroup& g);
  static SubgroupSet whole(const FiniteGroup& g);

  const FiniteGroup& parent() const { return *parent_; }
  const IndexSet& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(FiniteGroup::Index i) const { return members_.contains(i); }
  bool subgroup_of(const SubgroupSet& other) const { return members_.subset_of(other.members_); }

  friend bool operator==(const SubgroupSet& a, const SubgroupSet& b) {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }

 private:
  struct Unchecked {};
  SubgroupSet(const FiniteGroup& parent, IndexSet members, Unchecked)
      : parent_(&parent), members_(std::move(members)) {}
  friend SubgroupSet generated_subgroup(const FiniteGroup&, const std::vector<FiniteGroup::Index>&);

  const FiniteGroup* parent_ = nullptr;
  IndexSet members_;
};

// {ab : a in A, b in B}; no closure is imposed.
IndexSet subset_product(const FiniteGroup& g, const IndexSet& a, const IndexSet& b);

bool is_closed(const FiniteGroup& g, const IndexSet& s);

SubgroupSet generated_subgroup(const FiniteGroup& g, const std::vector<FiniteGroup::Index>& gens);
SubgroupSet generated_subgroup(const FiniteGroup& g, const IndexSet& gens);
SubgroupSet cyclic_subgroup(const FiniteGroup& g, FiniteGroup::Index x);

// Join <H u K>.
SubgroupSet join(const SubgroupSet& h, const SubgroupSet& k);
SubgroupSet intersect(const SubgroupSet& h, const SubgroupSet& k);

SubgroupSet center(const FiniteGroup& g);
SubgroupSet commutator_subgroup(const FiniteGroup& g, const SubgroupSet& h);

bool is_prime_power(std::size_t n, std::size_t p);

}  // namespace permuta
