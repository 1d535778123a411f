#include "permuta/linalg.hpp"

#include <utility>

#include "permuta/error.hpp"

namespace permuta::linalg {

Vec add(const Field& f, const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
  return r;
}

Vec scale(const Field& f, FqElement s, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(s, a[i]);
  return r;
}

void axpy(const Field& f, Vec& a, FqElement s, const Vec& b) {
  if (s.value == 0) return;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (b[i].value) a[i] = f.add(a[i], f.mul(s, b[i]));
}

bool is_zero(const Vec& v) {
  for (auto x : v)
    if (x.value) return false;
  return true;
}

Mat transpose(const Mat& a, std::size_t ncols) {
  Mat t(ncols, Vec(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < ncols; ++j) t[j][i] = a[i][j];
  return t;
}

Mat identity(const Field& f, std::size_t n) {
  Mat m(n, Vec(n, f.zero()));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = f.one();
  return m;
}

Echelon row_reduce(const Field& f, Mat rows, std::size_t ncols) {
  Echelon e;
  e.ncols = ncols;
  std::size_t r = 0;
  for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][col].value == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    const auto inv = f.inv(rows[r][col]);
    for (auto& x : rows[r]) x = f.mul(x, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col].value == 0) continue;
      axpy(f, rows[i], f.neg(rows[i][col]), rows[r]);
    }
    e.pivots.push_back(col);
    ++r;
  }
  rows.resize(r);
  e.rows = std::move(rows);
  return e;
}

Vec Echelon::reduce(const Field& f, Vec v) const {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    auto c = v[pivots[r]];
    if (c.value) axpy(f, v, f.neg(c), rows[r]);
  }
  return v;
}

bool Echelon::contains(const Field& f, const Vec& v) const { return is_zero(reduce(f, v)); }

std::vector<std::size_t> Echelon::free_columns() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t c = 0; c < ncols; ++c) {
    if (k < pivots.size() && pivots[k] == c) {
      ++k;
      continue;
    }
    out.push_back(c);
  }
  return out;
}

std::size_t rank(const Field& f, const Mat& rows, std::size_t ncols) { return row_reduce(f, rows, ncols).rank(); }

Mat kernel(const Field& f, const Mat& a, std::size_t ncols) {
  const auto e = row_reduce(f, a, ncols);
  Mat basis;
  for (auto free : e.free_columns()) {
    Vec x(ncols, f.zero());
    x[free] = f.one();
    for (std::size_t r = 0; r < e.rows.size(); ++r) x[e.pivots[r]] = f.neg(e.rows[r][free]);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<Vec> solve(const Field& f, const Mat& a, const Vec& b, std::size_t ncols) {
  if (a.size() != b.size()) throw ParentMismatch("solve: row count mismatch");
  Mat aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  const auto e = row_reduce(f, std::move(aug), ncols + 1);
  Vec x(ncols, f.zero());
  for (std::size_t r = 0; r < e.rows.size(); ++r) {
    if (e.pivots[r] == ncols) return std::nullopt;
    x[e.pivots[r]] = e.rows[r][ncols];
  }
  return x;
}

std::optional<Mat> inverse(const Field& f, const Mat& a) {
  const std::size_t n = a.size();
  if (n == 0) return Mat{};
  Mat aug = a;
  for (std::size_t i = 0; i < n; ++i) {
    aug[i].resize(2 * n, f.zero());
    aug[i][n + i] = f.one();
  }
  const auto e = row_reduce(f, std::move(aug), 2 * n);
  if (e.rank() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Mat inv(n);
  for (std::size_t i = 0; i < n; ++i) inv[i] = Vec(e.rows[i].begin() + static_cast<long>(n), e.rows[i].end());
  return inv;
}

}  // namespace permuta::linalg
