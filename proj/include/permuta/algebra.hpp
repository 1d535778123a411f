#pragma once

#include <cstddef>
#include <vector>

#include "permuta/field.hpp"
#include "permuta/linalg.hpp"

namespace permuta {

// Finite-dimensional associative unital algebra over F_q, given by its
// structure constants on a fixed basis.
class FiniteAlgebra {
 public:
  using Vec = linalg::Vec;

  // products[i * dim + j] = e_i e_j.
  FiniteAlgebra(const Field& field, std::size_t dim, std::vector<Vec> products, Vec one);

  const Field& field() const { return *field_; }
  std::size_t dim() const { return dim_; }
  const Vec& one() const { return one_; }
  const Vec& product(std::size_t i, std::size_t j) const { return products_[i * dim_ + j]; }
  Vec basis_vector(std::size_t i) const;
  Vec zero() const { return Vec(dim_, field_->zero()); }

  Vec multiply(const Vec& a, const Vec& b) const;
  Vec power(Vec a, unsigned long long e) const;
  // Matrix of x -> a x on the basis (rows indexed by output coordinate).
  linalg::Mat left_regular(const Vec& a) const;
  bool is_commutative() const;

  // The same ring viewed over the prime field: basis w^t e_i at index
  // i * k + t, k = [F_q : F_p].
  FiniteAlgebra restrict_to_prime_field() const;
  // Inverse coordinate change for restrict_to_prime_field.
  Vec extend_from_prime_field(const Vec& v) const;

 private:
  const Field* field_;
  std::size_t dim_;
  std::vector<Vec> products_;
  Vec one_;
};

// Basis of a subspace in reduced echelon form.
struct IdealBasis {
  linalg::Echelon echelon;
  std::size_t dimension() const { return echelon.rank(); }
};

// Jacobson radical by iterated kernels of the generalized trace forms
// g_i(x) = Tr(L~_x^(p^i)) / p^i mod p, with L~ an integer lift of the left
// regular representation: I_-1 = A, I_i = {x in I_(i-1) : g_i(xy) = 0 for
// all y}, J = I_l for l = floor(log_p dim). Extension fields are handled by
// restriction of scalars to F_p.
IdealBasis radical(const FiniteAlgebra& a);

// Closed under multiplication by A on both sides.
bool is_two_sided_ideal(const FiniteAlgebra& a, const IdealBasis& i);
// Smallest k with I^k = 0, or 0 if I is not nilpotent.
std::size_t nilpotency_index(const FiniteAlgebra& a, const IdealBasis& i);

// A / I with basis the images of the standard basis vectors outside the
// pivot columns of I.
class QuotientAlgebra {
 public:
  QuotientAlgebra(const FiniteAlgebra& parent, IdealBasis ideal);

  const FiniteAlgebra& algebra() const { return quotient_; }
  const IdealBasis& ideal() const { return ideal_; }
  const std::vector<std::size_t>& complement() const { return complement_; }

  linalg::Vec project(const linalg::Vec& x) const;
  // Canonical preimage supported on the complement columns.
  linalg::Vec lift(const linalg::Vec& qx) const;

 private:
  IdealBasis ideal_;
  std::vector<std::size_t> complement_;
  FiniteAlgebra quotient_;
};

// Dimension of the center {x : xy = yx for all y}.
std::size_t center_dimension(const FiniteAlgebra& a);

}  // namespace permuta
