#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace permuta {

// Fixed-width bit vector over the element indices of one group.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static IndexSet full(std::size_t universe) {
    IndexSet s(universe);
    for (std::size_t i = 0; i < universe; ++i) s.insert(i);
    return s;
  }

  template <class Range>
  static IndexSet of(std::size_t universe, const Range& indices) {
    IndexSet s(universe);
    for (auto i : indices) s.insert(static_cast<std::size_t>(i));
    return s;
  }

  std::size_t universe() const { return universe_; }

  void insert(std::size_t i) {
    assert(i < universe_);
    words_[i >> 6] |= (std::uint64_t{1} << (i & 63));
  }
  void erase(std::size_t i) {
    assert(i < universe_);
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }
  bool contains(std::size_t i) const {
    return i < universe_ && ((words_[i >> 6] >> (i & 63)) & 1u);
  }

  std::size_t size() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  bool subset_of(const IndexSet& other) const {
    assert(universe_ == other.universe_);
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~other.words_[k]) return false;
    return true;
  }

  IndexSet& operator|=(const IndexSet& other) {
    assert(universe_ == other.universe_);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
    return *this;
  }
  IndexSet& operator&=(const IndexSet& other) {
    assert(universe_ == other.universe_);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
    return *this;
  }
  friend IndexSet operator|(IndexSet a, const IndexSet& b) { return a |= b; }
  friend IndexSet operator&(IndexSet a, const IndexSet& b) { return a &= b; }

  friend bool operator==(const IndexSet& a, const IndexSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        f(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  // Canonical order: by size, then lexicographic sorted member list.
  friend bool canonical_less(const IndexSet& a, const IndexSet& b) {
    auto sa = a.size(), sb = b.size();
    if (sa != sb) return sa < sb;
    // The lowest differing index decides: whichever set holds it sorts first.
    for (std::size_t k = 0; k < a.words_.size(); ++k) {
      auto diff = a.words_[k] ^ b.words_[k];
      if (diff) {
        auto bit = std::countr_zero(diff);
        return (a.words_[k] >> bit) & 1u;
      }
    }
    return false;
  }

  std::size_t hash() const {
    std::size_t h = universe_ * 0x9e3779b97f4a7c15ULL;
    for (auto w : words_) h = (h ^ std::hash<std::uint64_t>{}(w)) * 0x100000001b3ULL;
    return h;
  }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct IndexSetHash {
  std::size_t operator()(const IndexSet& s) const { return s.hash(); }
};

}  // namespace permuta
