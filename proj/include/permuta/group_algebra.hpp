#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "permuta/algebra.hpp"
#include "permuta/config.hpp"
#include "permuta/finite_group.hpp"

namespace permuta {

class GroupAlgebra;

// Finite-support element sum a_g g of F_q[G]; zero coefficients are never
// stored.
class AlgebraElement {
 public:
  using Index = FiniteGroup::Index;

  AlgebraElement() = default;
  AlgebraElement(const GroupAlgebra& parent, const std::map<Index, FqElement>& coeffs);

  const GroupAlgebra& parent() const { return *parent_; }
  const std::map<Index, FqElement>& coefficients() const { return coeffs_; }
  FqElement coefficient(Index g) const;
  IndexSet support() const;
  bool is_zero() const { return coeffs_.empty(); }

  linalg::Vec dense() const;
  static AlgebraElement from_dense(const GroupAlgebra& parent, const linalg::Vec& v);

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.parent_ == b.parent_ && a.coeffs_ == b.coeffs_;
  }

 private:
  const GroupAlgebra* parent_ = nullptr;
  std::map<Index, FqElement> coeffs_;
};

// F_q[G] for a finite group G. Elements keep a pointer to it.
class GroupAlgebra {
 public:
  GroupAlgebra(std::shared_ptr<const FiniteGroup> group, const Field& field, const Limits& limits = {});

  const FiniteGroup& group() const { return *group_; }
  const std::shared_ptr<const FiniteGroup>& group_ptr() const { return group_; }
  const Field& field() const { return *field_; }
  const FiniteAlgebra& algebra() const { return algebra_; }

  AlgebraElement zero() const { return AlgebraElement(*this, {}); }
  AlgebraElement one() const;
  AlgebraElement basis(FiniteGroup::Index g, FqElement coefficient) const;
  AlgebraElement basis(FiniteGroup::Index g) const;

 private:
  std::shared_ptr<const FiniteGroup> group_;
  const Field* field_;
  FiniteAlgebra algebra_;
};

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
// sum_t (sum_{gh = t} a_g b_h) t
AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement scale(FqElement s, const AlgebraElement& a);
AlgebraElement power(const AlgebraElement& a, unsigned long long e);

struct UnitTest {
  bool is_unit = false;
  std::optional<AlgebraElement> inverse;
};

// Decided by invertibility of the left regular representation.
UnitTest is_unit(const AlgebraElement& a);

struct RadicalResult {
  std::vector<AlgebraElement> basis;  // reduced echelon form on group elements
  IdealBasis ideal;
  std::size_t nilpotency_index = 0;  // smallest k with J^k = 0
  bool two_sided = false;
  bool quotient_semisimple = false;  // radical of F_qG / J recomputed as 0
  std::size_t dimension() const { return basis.size(); }
};

// Throws CapExceeded beyond the configured group-order and field caps.
RadicalResult jacobson_radical(const GroupAlgebra& a, const Limits& limits = {});

// F_qG / J(F_qG), built from a computed radical.
class RadicalQuotient {
 public:
  RadicalQuotient(const GroupAlgebra& a, const RadicalResult& j);

  const GroupAlgebra& parent() const { return *parent_; }
  const QuotientAlgebra& quotient() const { return quotient_; }
  linalg::Vec project(const AlgebraElement& x) const;
  AlgebraElement lift(const linalg::Vec& cls) const;
  bool class_is_unit(const linalg::Vec& cls) const;

 private:
  const GroupAlgebra* parent_;
  QuotientAlgebra quotient_;
};

// Preimage of a unit class of F_qG / J, checked to be a unit of F_qG.
// Throws NotUnitModRadical when the class is not invertible.
AlgebraElement unit_lift(const RadicalQuotient& q, const linalg::Vec& cls);

// (1 - x)^(p^m) == 1 - x^(p^m) in characteristic p.
bool freshman_power_check(const AlgebraElement& x, unsigned m);

// Join of every normal p-subgroup.
SubgroupSet maximal_normal_p_subgroup(const FiniteGroup& g, std::size_t p, const Limits& limits = {});

struct Lemma64Result {
  SubgroupSet radical_side;  // {g : g - 1 in J(F_pG)}
  SubgroupSet op;            // O_p(G)
  bool equal = false;
};

Lemma64Result verify_lemma_6_4(std::shared_ptr<const FiniteGroup> g, int p, const Limits& limits = {});

// F_p[G] / J is commutative. Throws HypothesisFailed unless G' is a p-group.
bool quotient_commutativity_check(std::shared_ptr<const FiniteGroup> g, int p, const Limits& limits = {});

// dim Z(F_qG / J). Counts the simple components only over a splitting field.
std::size_t center_dimension_of_semisimple_quotient(std::shared_ptr<const FiniteGroup> g, int q,
                                                    const Limits& limits = {});

}  // namespace permuta
