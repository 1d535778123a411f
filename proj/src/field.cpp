#include "permuta/field.hpp"

#include <array>
#include <map>
#include <mutex>

#include "permuta/error.hpp"

namespace permuta {

namespace {

struct ModulusEntry {
  int q, p, k;
  std::vector<int> modulus;  // low degree first, monic
};

// Conway polynomials for the non-prime orders; x for the prime ones.
const std::array<ModulusEntry, 7>& modulus_table() {
  static const std::array<ModulusEntry, 7> table{{
      {2, 2, 1, {0, 1}},
      {3, 3, 1, {0, 1}},
      {4, 2, 2, {1, 1, 1}},     // x^2 + x + 1
      {5, 5, 1, {0, 1}},
      {7, 7, 1, {0, 1}},
      {8, 2, 3, {1, 1, 0, 1}},  // x^3 + x + 1
      {9, 3, 2, {2, 2, 1}},     // x^2 + 2x + 2
  }};
  return table;
}

}  // namespace

bool Field::supported(int q) {
  for (const auto& e : modulus_table())
    if (e.q == q) return true;
  return false;
}

const Field& Field::get(int q) {
  static std::mutex mu;
  static std::map<int, Field> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(q);
  if (it != cache.end()) return it->second;
  for (const auto& e : modulus_table()) {
    if (e.q == q) return cache.emplace(q, Field(e.p, e.k, e.modulus)).first->second;
  }
  throw InvalidGroup("unsupported field order q=" + std::to_string(q) +
                     " (supported: 2,3,4,5,7,8,9)");
}

Field::Field(int p, int k, std::vector<int> modulus)
    : p_(p), k_(k), q_(1), modulus_(std::move(modulus)) {
  for (int i = 0; i < k_; ++i) q_ *= p_;

  auto digits = [&](int v) {
    std::vector<int> d(k_);
    for (int i = 0; i < k_; ++i, v /= p_) d[i] = v % p_;
    return d;
  };
  auto encode = [&](const std::vector<int>& d) {
    int v = 0;
    for (int i = k_ - 1; i >= 0; --i) v = v * p_ + ((d[i] % p_) + p_) % p_;
    return v;
  };

  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.resize(q_, 0);
  for (int a = 0; a < q_; ++a) {
    auto da = digits(a);
    std::vector<int> dn(k_);
    for (int i = 0; i < k_; ++i) dn[i] = (p_ - da[i]) % p_;
    neg_[a] = static_cast<std::uint8_t>(encode(dn));
    for (int b = 0; b < q_; ++b) {
      auto db = digits(b);
      std::vector<int> s(k_);
      for (int i = 0; i < k_; ++i) s[i] = (da[i] + db[i]) % p_;
      add_[a * q_ + b] = static_cast<std::uint8_t>(encode(s));

      // Schoolbook product, then reduce by the monic modulus from the top.
      std::vector<int> prod(2 * k_ - 1, 0);
      for (int i = 0; i < k_; ++i)
        for (int j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
      for (int deg = 2 * k_ - 2; deg >= k_; --deg) {
        int c = prod[deg];
        if (!c) continue;
        for (int i = 0; i <= k_; ++i)
          prod[deg - k_ + i] = ((prod[deg - k_ + i] - c * modulus_[i]) % p_ + p_) % p_;
      }
      prod.resize(k_);
      mul_[a * q_ + b] = static_cast<std::uint8_t>(encode(prod));
    }
  }
  for (int a = 1; a < q_; ++a)
    for (int b = 1; b < q_; ++b)
      if (mul_[a * q_ + b] == 1) inv_[a] = static_cast<std::uint8_t>(b);

  for (int g = 1; g < q_; ++g) {
    int order = 1;
    FqElement x{static_cast<std::uint8_t>(g)};
    while (x.value != 1) {
      x = mul(x, FqElement{static_cast<std::uint8_t>(g)});
      ++order;
    }
    if (order == q_ - 1) {
      primitive_ = static_cast<std::uint8_t>(g);
      break;
    }
  }
}

FqElement Field::from_int(long long v) const {
  long long r = ((v % p_) + p_) % p_;
  return {static_cast<std::uint8_t>(r)};
}

FqElement Field::element(int encoded) const {
  if (encoded < 0 || encoded >= q_)
    throw ParseError("field element " + std::to_string(encoded) + " out of range for " + name());
  return {static_cast<std::uint8_t>(encoded)};
}

FqElement Field::pow(FqElement a, unsigned long long e) const {
  FqElement r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::vector<int> Field::coefficients(FqElement a) const {
  std::vector<int> d(k_);
  int v = a.value;
  for (int i = 0; i < k_; ++i, v /= p_) d[i] = v % p_;
  return d;
}

std::vector<FqElement> Field::elements() const {
  std::vector<FqElement> out;
  for (int v = 0; v < q_; ++v) out.push_back({static_cast<std::uint8_t>(v)});
  return out;
}

std::vector<FqElement> Field::nonzero_elements() const {
  std::vector<FqElement> out;
  for (int v = 1; v < q_; ++v) out.push_back({static_cast<std::uint8_t>(v)});
  return out;
}

std::string Field::name() const { return "F_" + std::to_string(q_); }

}  // namespace permuta
