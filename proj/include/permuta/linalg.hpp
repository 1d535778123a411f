#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "permuta/field.hpp"

namespace permuta::linalg {

using Vec = std::vector<FqElement>;
using Mat = std::vector<Vec>;  // row-major, rows of equal length

// Reduced row echelon basis of a row space; pivots[r] is the leading column
// of rows[r], whose entry there is 1.
struct Echelon {
  std::size_t ncols = 0;
  Mat rows;
  std::vector<std::size_t> pivots;

  std::size_t rank() const { return rows.size(); }
  // v minus its projection along the pivot columns; zero iff v is in the span.
  Vec reduce(const Field& f, Vec v) const;
  bool contains(const Field& f, const Vec& v) const;
  // Columns without a pivot, ascending.
  std::vector<std::size_t> free_columns() const;
};

Echelon row_reduce(const Field& f, Mat rows, std::size_t ncols);
std::size_t rank(const Field& f, const Mat& rows, std::size_t ncols);

// Basis of {x : A x = 0}, A given by rows with ncols columns.
Mat kernel(const Field& f, const Mat& a, std::size_t ncols);

// Some x with A x = b, if one exists.
std::optional<Vec> solve(const Field& f, const Mat& a, const Vec& b, std::size_t ncols);

std::optional<Mat> inverse(const Field& f, const Mat& a);

Vec add(const Field& f, const Vec& a, const Vec& b);
Vec scale(const Field& f, FqElement s, const Vec& a);
// a += s * b
void axpy(const Field& f, Vec& a, FqElement s, const Vec& b);
bool is_zero(const Vec& v);
Mat transpose(const Mat& a, std::size_t ncols);
Mat identity(const Field& f, std::size_t n);

}  // namespace permuta::linalg
