#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <string_view>

#include "permuta/field.hpp"
#include "permuta/finite_group.hpp"
#include "permuta/free_word.hpp"

namespace permuta {

// Finite-support element sum a_g g of K[F] for a free group F of fixed rank.
class OrderedGroupAlgebraElement {
 public:
  using Terms = std::map<FreeWord, FqElement>;

  OrderedGroupAlgebraElement(const Field& field, std::size_t rank) : field_(&field), rank_(rank) {}
  OrderedGroupAlgebraElement(const Field& field, std::size_t rank, const Terms& terms);

  static OrderedGroupAlgebraElement monomial(const Field& field, FqElement c, const FreeWord& g);
  // "3*x1 + 2*x1x2^-1 - x2", a bare coefficient is a multiple of the identity.
  // Coefficients are integers reduced into the prime field, or canonical
  // encodings 0..q-1 for q not prime. With rank 0 the rank is inferred.
  static OrderedGroupAlgebraElement parse(const Field& field, std::string_view text, std::size_t rank = 0);

  const Field& field() const { return *field_; }
  std::size_t rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  FqElement coefficient(const FreeWord& g) const;

  friend bool operator==(const OrderedGroupAlgebraElement& a, const OrderedGroupAlgebraElement& b) {
    return a.field_ == b.field_ && a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;  // terms in Magnus order

 private:
  const Field* field_;
  std::size_t rank_;
  Terms terms_;
};

OrderedGroupAlgebraElement operator+(const OrderedGroupAlgebraElement& a, const OrderedGroupAlgebraElement& b);
OrderedGroupAlgebraElement kg_multiply(const OrderedGroupAlgebraElement& a, const OrderedGroupAlgebraElement& b);

// min supp(a) in the Magnus order. Throws ZeroElement for a = 0.
FreeWord valuation(const OrderedGroupAlgebraElement& a);

// Singleton support (the coefficient is then nonzero, hence invertible).
bool is_trivial_unit(const OrderedGroupAlgebraElement& a);

// Image of a word under the homomorphism fixed by generator images.
FiniteGroup::Index evaluate_word(const FiniteGroup& target, const std::vector<FiniteGroup::Index>& generator_images,
                                 const FreeWord& w);

// rho(v(a)) in M, with rho given on generators.
bool pullback_membership(const OrderedGroupAlgebraElement& a, const FiniteGroup& target,
                         const std::vector<FiniteGroup::Index>& generator_images,
                         const std::function<bool(FiniteGroup::Index)>& member);

}  // namespace permuta
