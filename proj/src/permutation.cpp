#include "permuta/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "permuta/error.hpp"

namespace permuta {

Permutation::Permutation(std::vector<std::uint16_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto v : images_) {
    if (v >= images_.size() || seen[v]) throw InvalidGroup("image list is not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::uint16_t> img(degree);
  std::iota(img.begin(), img.end(), std::uint16_t{0});
  Permutation p;
  p.images_ = std::move(img);
  return p;
}

Permutation Permutation::from_cycles(const std::vector<std::vector<int>>& cycles,
                                     std::size_t degree) {
  for (const auto& c : cycles)
    for (int x : c) {
      if (x < 1) throw ParseError("permutation points are 1-based");
      degree = std::max(degree, static_cast<std::size_t>(x));
    }
  auto p = identity(degree);
  std::vector<bool> moved(degree, false);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      auto from = static_cast<std::size_t>(c[i] - 1);
      if (moved[from]) throw ParseError("point repeated across cycles");
      moved[from] = true;
      p.images_[from] = static_cast<std::uint16_t>(c[(i + 1) % c.size()] - 1);
    }
  }
  return p;
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in permutation: " + std::string(text));
    ++i;
    std::vector<int> cycle;
    for (;;) {
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("bad cycle in permutation: " + std::string(text));
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + (text[i++] - '0');
      cycle.push_back(v);
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip_ws();
  }
  return from_cycles(cycles);
}

Permutation Permutation::extended(std::size_t degree) const {
  if (degree <= images_.size()) return *this;
  auto p = identity(degree);
  std::copy(images_.begin(), images_.end(), p.images_.begin());
  return p;
}

Permutation Permutation::inverse() const {
  Permutation r = identity(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<std::uint16_t>(i);
  return r;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  auto n = std::max(a.degree(), b.degree());
  Permutation r = Permutation::identity(n);
  for (std::size_t x = 0; x < n; ++x) r.images_[x] = b(a(x));
  return r;
}

bool operator==(const Permutation& a, const Permutation& b) {
  auto n = std::max(a.degree(), b.degree());
  for (std::size_t x = 0; x < n; ++x)
    if (a(x) != b(x)) return false;
  return true;
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream os;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    os << '(';
    std::size_t x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) os << ' ';
      os << x + 1;
      first = false;
      x = images_[x];
    }
    os << ')';
  }
  auto s = os.str();
  return s.empty() ? "()" : s;
}

}  // namespace permuta
