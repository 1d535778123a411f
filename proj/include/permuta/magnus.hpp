#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "permuta/free_word.hpp"

namespace permuta {

using BigInt = boost::multiprecision::cpp_int;

// Noncommutative monomial X_{i1} X_{i2} ... as 0-based generator indices.
using Monomial = std::vector<std::uint16_t>;

// Total degree first, then lexicographic by generator index.
struct DegLex {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

// Truncated image of a word under x_i -> 1 + X_i. Zero coefficients are not
// stored.
class MagnusExpansion {
 public:
  using Terms = std::map<Monomial, BigInt, DegLex>;

  MagnusExpansion(std::size_t rank, std::size_t degree) : rank_(rank), degree_(degree) {}
  static MagnusExpansion one(std::size_t rank, std::size_t degree);

  std::size_t rank() const { return rank_; }
  std::size_t degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  BigInt coefficient(const Monomial& m) const;

  void add(const Monomial& m, const BigInt& c);
  // Truncated product.
  friend MagnusExpansion operator*(const MagnusExpansion& a, const MagnusExpansion& b);
  friend bool operator==(const MagnusExpansion& a, const MagnusExpansion& b) = default;

  std::string to_string() const;  // "1 + X1 - X1X2 + 2*X2^2"

 private:
  std::size_t rank_;
  std::size_t degree_;
  Terms terms_;
};

// Image of a single letter: 1 + X_i, or sum_k (-X_i)^k up to degree d.
MagnusExpansion letter_expansion(std::size_t rank, Letter l, std::size_t degree);

MagnusExpansion magnus_expand(const FreeWord& w, std::size_t degree);

// w1 < w2 iff the first nonzero coefficient of E(w1) - E(w2), taken to
// degree |w1| + |w2| + 1 in DegLex order, is negative.
std::strong_ordering magnus_compare(const FreeWord& w1, const FreeWord& w2);

inline bool magnus_less(const FreeWord& a, const FreeWord& b) { return magnus_compare(a, b) < 0; }

}  // namespace permuta
