#include "permuta/algebra.hpp"

#include <cstdint>
#include <stdexcept>

#include "permuta/error.hpp"

namespace permuta {

using linalg::Mat;
using linalg::Vec;

FiniteAlgebra::FiniteAlgebra(const Field& field, std::size_t dim, std::vector<Vec> products, Vec one)
    : field_(&field), dim_(dim), products_(std::move(products)), one_(std::move(one)) {
  if (products_.size() != dim_ * dim_) throw InvalidGroup("structure constant table has wrong size");
  if (one_.size() != dim_) throw InvalidGroup("unit vector has wrong length");
}

Vec FiniteAlgebra::basis_vector(std::size_t i) const {
  Vec v = zero();
  v[i] = field_->one();
  return v;
}

Vec FiniteAlgebra::multiply(const Vec& a, const Vec& b) const {
  const Field& f = *field_;
  Vec r = zero();
  for (std::size_t i = 0; i < dim_; ++i) {
    if (!a[i].value) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (!b[j].value) continue;
      linalg::axpy(f, r, f.mul(a[i], b[j]), products_[i * dim_ + j]);
    }
  }
  return r;
}

Vec FiniteAlgebra::power(Vec a, unsigned long long e) const {
  Vec r = one_;
  while (e) {
    if (e & 1) r = multiply(r, a);
    e >>= 1;
    if (e) a = multiply(a, a);
  }
  return r;
}

Mat FiniteAlgebra::left_regular(const Vec& a) const {
  Mat m(dim_, Vec(dim_, field_->zero()));
  for (std::size_t j = 0; j < dim_; ++j) {
    const Vec col = multiply(a, basis_vector(j));
    for (std::size_t i = 0; i < dim_; ++i) m[i][j] = col[i];
  }
  return m;
}

bool FiniteAlgebra::is_commutative() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      if (product(i, j) != product(j, i)) return false;
  return true;
}

FiniteAlgebra FiniteAlgebra::restrict_to_prime_field() const {
  const Field& f = *field_;
  const std::size_t k = static_cast<std::size_t>(f.degree());
  if (k == 1) return *this;
  const Field& fp = Field::get(f.characteristic());
  const std::size_t n = dim_ * k;
  auto omega_pow = [&](std::size_t t) {
    FqElement w = f.element(f.characteristic());  // the root of the modulus
    return f.pow(w, t);
  };
  std::vector<Vec> prods(n * n, Vec(n, fp.zero()));
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t s = 0; s < k; ++s)
      for (std::size_t j = 0; j < dim_; ++j)
        for (std::size_t t = 0; t < k; ++t) {
          Vec& out = prods[(i * k + s) * n + (j * k + t)];
          const FqElement scale = omega_pow(s + t);
          const Vec& c = products_[i * dim_ + j];
          for (std::size_t l = 0; l < dim_; ++l) {
            const auto digits = f.coefficients(f.mul(scale, c[l]));
            for (std::size_t d = 0; d < k; ++d) out[l * k + d] = fp.from_int(digits[d]);
          }
        }
  Vec one(n, fp.zero());
  for (std::size_t l = 0; l < dim_; ++l) {
    const auto digits = f.coefficients(one_[l]);
    for (std::size_t d = 0; d < k; ++d) one[l * k + d] = fp.from_int(digits[d]);
  }
  return FiniteAlgebra(fp, n, std::move(prods), std::move(one));
}

Vec FiniteAlgebra::extend_from_prime_field(const Vec& v) const {
  const Field& f = *field_;
  const std::size_t k = static_cast<std::size_t>(f.degree());
  const int p = f.characteristic();
  Vec out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    int enc = 0;
    for (std::size_t d = k; d-- > 0;) enc = enc * p + v[i * k + d].value;
    out[i] = f.element(enc);
  }
  return out;
}

namespace {

using IntMat = std::vector<std::vector<std::int64_t>>;

IntMat mat_mul_mod(const IntMat& a, const IntMat& b, std::int64_t m) {
  const std::size_t n = a.size();
  IntMat r(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const auto aik = a[i][k];
      if (!aik) continue;
      for (std::size_t j = 0; j < n; ++j) r[i][j] = (r[i][j] + aik * b[k][j]) % m;
    }
  return r;
}

// Tr(L~^e) mod m for an integer lift L~ of an F_p matrix.
std::int64_t lifted_trace_power(const Mat& l, std::uint64_t e, std::int64_t m) {
  const std::size_t n = l.size();
  IntMat base(n, std::vector<std::int64_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) base[i][j] = l[i][j].value;
  IntMat acc(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) acc[i][i] = 1 % m;
  while (e) {
    if (e & 1) acc = mat_mul_mod(acc, base, m);
    e >>= 1;
    if (e) base = mat_mul_mod(base, base, m);
  }
  std::int64_t t = 0;
  for (std::size_t i = 0; i < n; ++i) t = (t + acc[i][i]) % m;
  return t;
}

IdealBasis radical_prime(const FiniteAlgebra& a) {
  const Field& f = a.field();
  const std::int64_t p = f.characteristic();
  const std::size_t n = a.dim();

  std::size_t levels = 0;  // floor(log_p n)
  for (std::int64_t pw = p; pw <= static_cast<std::int64_t>(n); pw *= p) ++levels;

  Mat basis = linalg::identity(f, n);
  std::int64_t p_i = 1;  // p^i
  for (std::size_t i = 0; i <= levels && !basis.empty(); ++i, p_i *= p) {
    const std::int64_t modulus = p_i * p;
    Mat g(basis.size(), Vec(n));
    for (std::size_t k = 0; k < basis.size(); ++k)
      for (std::size_t j = 0; j < n; ++j) {
        const Vec prod = a.multiply(basis[k], a.basis_vector(j));
        const auto t = lifted_trace_power(a.left_regular(prod), static_cast<std::uint64_t>(p_i), modulus);
        if (t % p_i != 0) throw std::logic_error("generalized trace not divisible by p^i");
        g[k][j] = f.from_int(t / p_i);
      }
    const Mat coeffs = linalg::kernel(f, linalg::transpose(g, n), basis.size());
    Mat next;
    for (const auto& c : coeffs) {
      Vec v = a.zero();
      for (std::size_t k = 0; k < basis.size(); ++k) linalg::axpy(f, v, c[k], basis[k]);
      next.push_back(std::move(v));
    }
    basis = linalg::row_reduce(f, std::move(next), n).rows;
  }
  return IdealBasis{linalg::row_reduce(f, std::move(basis), n)};
}

}  // namespace

IdealBasis radical(const FiniteAlgebra& a) {
  const Field& f = a.field();
  if (f.degree() == 1) return radical_prime(a);
  const auto over_p = a.restrict_to_prime_field();
  const auto jp = radical_prime(over_p);
  Mat rows;
  for (const auto& v : jp.echelon.rows) rows.push_back(a.extend_from_prime_field(v));
  return IdealBasis{linalg::row_reduce(f, std::move(rows), a.dim())};
}

bool is_two_sided_ideal(const FiniteAlgebra& a, const IdealBasis& ideal) {
  const Field& f = a.field();
  for (const auto& v : ideal.echelon.rows)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const auto e = a.basis_vector(j);
      if (!ideal.echelon.contains(f, a.multiply(v, e)) || !ideal.echelon.contains(f, a.multiply(e, v)))
        return false;
    }
  return true;
}

std::size_t nilpotency_index(const FiniteAlgebra& a, const IdealBasis& ideal) {
  const Field& f = a.field();
  Mat power = ideal.echelon.rows;
  std::size_t k = 1;
  while (!power.empty()) {
    Mat next;
    for (const auto& x : power)
      for (const auto& y : ideal.echelon.rows) next.push_back(a.multiply(x, y));
    auto e = linalg::row_reduce(f, std::move(next), a.dim());
    if (e.rank() == power.size()) return 0;  // I^(k+1) = I^k != 0
    power = std::move(e.rows);
    ++k;
  }
  return k;
}

QuotientAlgebra::QuotientAlgebra(const FiniteAlgebra& parent, IdealBasis ideal)
    : ideal_(std::move(ideal)),
      complement_(ideal_.echelon.free_columns()),
      quotient_([&] {
        const Field& f = parent.field();
        const std::size_t m = complement_.size();
        auto proj = [&](const Vec& x) {
          const Vec r = ideal_.echelon.reduce(f, x);
          Vec out(m);
          for (std::size_t i = 0; i < m; ++i) out[i] = r[complement_[i]];
          return out;
        };
        std::vector<Vec> prods;
        prods.reserve(m * m);
        for (std::size_t i = 0; i < m; ++i)
          for (std::size_t j = 0; j < m; ++j) prods.push_back(proj(parent.product(complement_[i], complement_[j])));
        return FiniteAlgebra(f, m, std::move(prods), proj(parent.one()));
      }()) {}

Vec QuotientAlgebra::project(const Vec& x) const {
  const Field& f = quotient_.field();
  const Vec r = ideal_.echelon.reduce(f, x);
  Vec out(complement_.size());
  for (std::size_t i = 0; i < complement_.size(); ++i) out[i] = r[complement_[i]];
  return out;
}

Vec QuotientAlgebra::lift(const Vec& qx) const {
  Vec out(ideal_.echelon.ncols, quotient_.field().zero());
  for (std::size_t i = 0; i < complement_.size(); ++i) out[complement_[i]] = qx[i];
  return out;
}

std::size_t center_dimension(const FiniteAlgebra& a) {
  const Field& f = a.field();
  const std::size_t n = a.dim();
  // Row (j, l): sum_i x_i (c_ij[l] - c_ji[l]) = 0.
  Mat eqs;
  eqs.reserve(n * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t l = 0; l < n; ++l) {
      Vec row(n);
      for (std::size_t i = 0; i < n; ++i) row[i] = f.sub(a.product(i, j)[l], a.product(j, i)[l]);
      eqs.push_back(std::move(row));
    }
  return n - linalg::rank(f, eqs, n);
}

}  // namespace permuta
