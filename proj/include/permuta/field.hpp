#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace permuta {

// Element of a small finite field, encoded as the integer whose base-p
// digits are the polynomial coefficients c_0 + c_1 w + ... + c_{k-1} w^{k-1}.
struct FqElement {
  std::uint8_t value = 0;
  friend bool operator==(FqElement, FqElement) = default;
  friend auto operator<=>(FqElement, FqElement) = default;
};

// F_q = Z/p[w] / (modulus), with all arithmetic tabulated (q <= 9).
class Field {
 public:
  // Supported orders: 2, 3, 4, 5, 7, 8, 9.
  static const Field& get(int q);
  static bool supported(int q);
  static std::vector<int> supported_orders() { return {2, 3, 4, 5, 7, 8, 9}; }

  int characteristic() const { return p_; }
  int degree() const { return k_; }
  int order() const { return q_; }
  // Monic modulus coefficients, low degree first (length k + 1).
  const std::vector<int>& modulus() const { return modulus_; }

  FqElement zero() const { return {0}; }
  FqElement one() const { return {1}; }
  FqElement from_int(long long v) const;  // image of an integer under Z -> F_q
  FqElement element(int encoded) const;   // canonical encoding 0..q-1
  // Generator of the multiplicative group, the smallest encoding of order q-1.
  FqElement primitive() const { return {primitive_}; }

  FqElement add(FqElement a, FqElement b) const { return {add_[a.value * q_ + b.value]}; }
  FqElement sub(FqElement a, FqElement b) const { return add(a, neg(b)); }
  FqElement mul(FqElement a, FqElement b) const { return {mul_[a.value * q_ + b.value]}; }
  FqElement neg(FqElement a) const { return {neg_[a.value]}; }
  // Precondition: a != 0.
  FqElement inv(FqElement a) const { return {inv_[a.value]}; }
  FqElement pow(FqElement a, unsigned long long e) const;

  std::vector<int> coefficients(FqElement a) const;
  std::vector<FqElement> elements() const;
  std::vector<FqElement> nonzero_elements() const;

  std::string name() const;  // "F_9"

 private:
  Field(int p, int k, std::vector<int> modulus);

  int p_, k_, q_;
  std::vector<int> modulus_;
  std::vector<std::uint8_t> add_, mul_, neg_, inv_;
  std::uint8_t primitive_ = 1;
};

}  // namespace permuta
