#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace permuta {

// Permutation of {0, ..., degree-1}, stored as its image list.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint16_t> images);
  static Permutation identity(std::size_t degree);
  // Cycles use 1-based points, as written: {{1,2},{1,2,3}}.
  static Permutation from_cycles(const std::vector<std::vector<int>>& cycles,
                                 std::size_t degree = 0);
  // Parses "(1 2)(3 4)" or "()"; degree grows to the largest point seen.
  static Permutation parse(std::string_view text);

  std::size_t degree() const { return images_.size(); }
  std::uint16_t operator()(std::size_t point) const {
    return point < images_.size() ? images_[point] : static_cast<std::uint16_t>(point);
  }
  const std::vector<std::uint16_t>& images() const { return images_; }

  Permutation extended(std::size_t degree) const;
  Permutation inverse() const;
  bool is_identity() const;

  // Left-to-right composition: (a * b)(x) = b(a(x)), matching GAP's x^(ab).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation& a, const Permutation& b);

  std::string to_cycle_string() const;

 private:
  std::vector<std::uint16_t> images_;
};

}  // namespace permuta
