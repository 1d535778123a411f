#include "permuta/magnus.hpp"

#include <sstream>

#include "permuta/error.hpp"

namespace permuta {

MagnusExpansion MagnusExpansion::one(std::size_t rank, std::size_t degree) {
  MagnusExpansion e(rank, degree);
  e.terms_.emplace(Monomial{}, BigInt(1));
  return e;
}

BigInt MagnusExpansion::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void MagnusExpansion::add(const Monomial& m, const BigInt& c) {
  if (m.size() > degree_ || c == 0) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MagnusExpansion operator*(const MagnusExpansion& a, const MagnusExpansion& b) {
  if (a.rank_ != b.rank_) throw RankMismatch("Magnus product of different ranks");
  MagnusExpansion r(a.rank_, std::min(a.degree_, b.degree_));
  Monomial m;
  for (const auto& [ma, ca] : a.terms_) {
    if (ma.size() > r.degree_) break;  // DegLex: later terms are no shorter
    for (const auto& [mb, cb] : b.terms_) {
      if (ma.size() + mb.size() > r.degree_) break;
      m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      r.add(m, ca * cb);
    }
  }
  return r;
}

std::string MagnusExpansion::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (m.empty()) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    for (std::size_t i = 0; i < m.size();) {
      std::size_t j = i;
      while (j < m.size() && m[j] == m[i]) ++j;
      if (i) os << '*';
      os << 'X' << m[i] + 1;
      if (j - i > 1) os << '^' << j - i;
      i = j;
    }
  }
  return os.str();
}

MagnusExpansion letter_expansion(std::size_t rank, Letter l, std::size_t degree) {
  MagnusExpansion e = MagnusExpansion::one(rank, degree);
  Monomial m;
  if (!l.inverse) {
    e.add(Monomial{static_cast<std::uint16_t>(l.generator)}, 1);
    return e;
  }
  for (std::size_t k = 1; k <= degree; ++k) {
    m.push_back(static_cast<std::uint16_t>(l.generator));
    e.add(m, k % 2 ? -1 : 1);
  }
  return e;
}

MagnusExpansion magnus_expand(const FreeWord& w, std::size_t degree) {
  if (degree < 1) throw TruncationInsufficient("Magnus truncation degree must be at least 1");
  MagnusExpansion e = MagnusExpansion::one(w.rank(), degree);
  for (auto l : w.letters()) e = e * letter_expansion(w.rank(), l, degree);
  return e;
}

namespace {

// Sign of the DegLex-first nonzero coefficient of a - b, 0 if none.
int first_difference(const MagnusExpansion& a, const MagnusExpansion& b) {
  auto ia = a.terms().begin(), ib = b.terms().begin();
  const DegLex less;
  while (ia != a.terms().end() || ib != b.terms().end()) {
    if (ib == b.terms().end() || (ia != a.terms().end() && less(ia->first, ib->first)))
      return ia->second < 0 ? -1 : 1;
    if (ia == a.terms().end() || less(ib->first, ia->first)) return ib->second < 0 ? 1 : -1;
    if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
    ++ia;
    ++ib;
  }
  return 0;
}

}  // namespace

std::strong_ordering magnus_compare(const FreeWord& w1, const FreeWord& w2) {
  if (w1.rank() != w2.rank())
    throw RankMismatch("cannot compare words of rank " + std::to_string(w1.rank()) + " and " +
                       std::to_string(w2.rank()));
  if (w1 == w2) return std::strong_ordering::equal;
  const std::size_t d = w1.length() + w2.length() + 1;
  // Coefficients below a truncation degree do not depend on it, so cheaper
  // truncations decide the same sign whenever they already differ.
  for (std::size_t t = 2;; t *= 2) {
    const std::size_t deg = std::min(t, d);
    const int s = first_difference(magnus_expand(w1, deg), magnus_expand(w2, deg));
    if (s) return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    if (deg == d) break;
  }
  throw TruncationInsufficient("expansions of " + w1.to_string() + " and " + w2.to_string() +
                               " agree to degree " + std::to_string(d));
}

}  // namespace permuta
