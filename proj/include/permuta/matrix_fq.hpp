#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "permuta/field.hpp"

namespace permuta {

// Square matrix over F_q; entries row-major.
class MatrixFq {
 public:
  MatrixFq() = default;
  MatrixFq(const Field& field, std::size_t n);
  MatrixFq(const Field& field, std::size_t n, std::vector<FqElement> entries);

  static MatrixFq identity(const Field& field, std::size_t n);
  // E_ij: 1 at (i, j), 0 elsewhere; 0-based indices.
  static MatrixFq unit(const Field& field, std::size_t n, std::size_t i, std::size_t j);

  const Field& field() const { return *field_; }
  std::size_t dim() const { return n_; }
  FqElement operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  FqElement& at(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const std::vector<FqElement>& entries() const { return entries_; }

  MatrixFq operator+(const MatrixFq& other) const;
  MatrixFq operator*(const MatrixFq& other) const;
  MatrixFq scaled(FqElement s) const;
  FqElement determinant() const;
  bool is_identity() const;

  friend bool operator==(const MatrixFq& a, const MatrixFq& b) {
    return a.field_ == b.field_ && a.n_ == b.n_ && a.entries_ == b.entries_;
  }

  std::string to_string() const;  // "[[1,1],[0,1]]"

 private:
  const Field* field_ = nullptr;
  std::size_t n_ = 0;
  std::vector<FqElement> entries_;
};

}  // namespace permuta
