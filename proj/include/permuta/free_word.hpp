#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace permuta {

// Letter of a free-group word: generator index (0-based) and exponent sign.
struct Letter {
  std::size_t generator = 0;
  bool inverse = false;
  friend bool operator==(Letter, Letter) = default;
  friend auto operator<=>(Letter, Letter) = default;
};

// Reduced word in the free group on `rank` generators x1..x_rank.
class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(std::size_t rank) : rank_(rank) {}
  // Freely reduces the given letters.
  FreeWord(std::size_t rank, const std::vector<Letter>& letters);

  static FreeWord generator(std::size_t rank, std::size_t i, bool inverse = false);
  // "x1 x2^-1 x1^2", "x1x2^-1", "e" or "" for the identity. With rank 0 the
  // rank is the largest generator index seen.
  static FreeWord parse(std::string_view text, std::size_t rank = 0);

  std::size_t rank() const { return rank_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }

  FreeWord inverse() const;
  FreeWord with_rank(std::size_t rank) const;

  friend FreeWord operator*(const FreeWord& a, const FreeWord& b);
  friend bool operator==(const FreeWord& a, const FreeWord& b) {
    return a.rank_ == b.rank_ && a.letters_ == b.letters_;
  }
  // Storage order for containers; not the Magnus order.
  friend auto operator<=>(const FreeWord& a, const FreeWord& b) {
    if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
    return a.letters_ <=> b.letters_;
  }

  std::string to_string() const;  // "x1 x2^-1 x1^2", "e" for the identity

 private:
  std::size_t rank_ = 0;
  std::vector<Letter> letters_;
};

// Free reduction of an arbitrary letter sequence.
FreeWord reduce(std::size_t rank, const std::vector<Letter>& letters);

}  // namespace permuta
