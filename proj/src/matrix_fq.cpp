#include "permuta/matrix_fq.hpp"

#include <sstream>
#include <utility>

#include "permuta/error.hpp"

namespace permuta {

MatrixFq::MatrixFq(const Field& field, std::size_t n)
    : field_(&field), n_(n), entries_(n * n, field.zero()) {}

MatrixFq::MatrixFq(const Field& field, std::size_t n, std::vector<FqElement> entries)
    : field_(&field), n_(n), entries_(std::move(entries)) {
  if (entries_.size() != n * n) throw InvalidGroup("matrix entry count mismatch");
}

MatrixFq MatrixFq::identity(const Field& field, std::size_t n) {
  MatrixFq m(field, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
  return m;
}

MatrixFq MatrixFq::unit(const Field& field, std::size_t n, std::size_t i, std::size_t j) {
  MatrixFq m(field, n);
  m.at(i, j) = field.one();
  return m;
}

MatrixFq MatrixFq::operator+(const MatrixFq& other) const {
  if (field_ != other.field_ || n_ != other.n_) throw ParentMismatch("matrix shape/field mismatch");
  MatrixFq r(*field_, n_);
  for (std::size_t k = 0; k < entries_.size(); ++k)
    r.entries_[k] = field_->add(entries_[k], other.entries_[k]);
  return r;
}

MatrixFq MatrixFq::operator*(const MatrixFq& other) const {
  if (field_ != other.field_ || n_ != other.n_) throw ParentMismatch("matrix shape/field mismatch");
  const Field& f = *field_;
  MatrixFq r(f, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      auto a = (*this)(i, k);
      if (a.value == 0) continue;
      for (std::size_t j = 0; j < n_; ++j)
        r.at(i, j) = f.add(r(i, j), f.mul(a, other(k, j)));
    }
  return r;
}

MatrixFq MatrixFq::scaled(FqElement s) const {
  MatrixFq r(*field_, n_);
  for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = field_->mul(s, entries_[k]);
  return r;
}

FqElement MatrixFq::determinant() const {
  const Field& f = *field_;
  auto a = entries_;
  FqElement det = f.one();
  for (std::size_t col = 0; col < n_; ++col) {
    std::size_t piv = col;
    while (piv < n_ && a[piv * n_ + col].value == 0) ++piv;
    if (piv == n_) return f.zero();
    if (piv != col) {
      for (std::size_t j = 0; j < n_; ++j) std::swap(a[piv * n_ + j], a[col * n_ + j]);
      det = f.neg(det);
    }
    auto pv = a[col * n_ + col];
    det = f.mul(det, pv);
    auto pinv = f.inv(pv);
    for (std::size_t r = col + 1; r < n_; ++r) {
      auto factor = f.mul(a[r * n_ + col], pinv);
      if (factor.value == 0) continue;
      for (std::size_t j = col; j < n_; ++j)
        a[r * n_ + j] = f.sub(a[r * n_ + j], f.mul(factor, a[col * n_ + j]));
    }
  }
  return det;
}

bool MatrixFq::is_identity() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if ((*this)(i, j).value != (i == j ? 1 : 0)) return false;
  return true;
}

std::string MatrixFq::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < n_; ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < n_; ++j) {
      if (j) os << ',';
      os << int((*this)(i, j).value);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace permuta
