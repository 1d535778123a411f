#include "permuta/ordered_group_algebra.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "permuta/error.hpp"
#include "permuta/magnus.hpp"

namespace permuta {

namespace {

void require_same(const OrderedGroupAlgebraElement& a, const OrderedGroupAlgebraElement& b) {
  if (&a.field() != &b.field()) throw ParentMismatch("elements over different fields");
  if (a.rank() != b.rank()) throw RankMismatch("elements over free groups of different rank");
}

void accumulate(const Field& f, OrderedGroupAlgebraElement::Terms& terms, const FreeWord& g, FqElement c) {
  auto [it, fresh] = terms.emplace(g, c);
  if (!fresh) it->second = f.add(it->second, c);
  if (it->second.value == 0) terms.erase(it);
}

bool is_prime(int q) {
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

}  // namespace

OrderedGroupAlgebraElement::OrderedGroupAlgebraElement(const Field& field, std::size_t rank, const Terms& terms)
    : field_(&field), rank_(rank) {
  for (const auto& [g, c] : terms) {
    if (g.rank() != rank) throw RankMismatch("term " + g.to_string() + " has the wrong rank");
    if (c.value) terms_.emplace(g, c);
  }
}

OrderedGroupAlgebraElement OrderedGroupAlgebraElement::monomial(const Field& field, FqElement c, const FreeWord& g) {
  return OrderedGroupAlgebraElement(field, g.rank(), {{g, c}});
}

OrderedGroupAlgebraElement OrderedGroupAlgebraElement::parse(const Field& field, std::string_view text,
                                                             std::size_t rank) {
  struct Raw {
    bool negative;
    long coeff;
    std::string word;
  };
  std::vector<Raw> raws;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  bool negative = false;
  skip_ws();
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  while (true) {
    skip_ws();
    std::size_t end = i;
    while (end < text.size() && text[end] != '+' && !(text[end] == '-' && (end == 0 || text[end - 1] != '^'))) ++end;
    std::string term(text.substr(i, end - i));
    while (!term.empty() && std::isspace(static_cast<unsigned char>(term.back()))) term.pop_back();
    if (term.empty()) throw ParseError("empty term in algebra element: " + std::string(text));
    Raw raw{negative, 1, ""};
    std::size_t j = 0;
    while (j < term.size() && std::isdigit(static_cast<unsigned char>(term[j]))) ++j;
    if (j > 0) {
      raw.coeff = std::stol(term.substr(0, j));
      std::size_t k = j;
      while (k < term.size() && std::isspace(static_cast<unsigned char>(term[k]))) ++k;
      if (k < term.size()) {
        if (term[k] != '*') throw ParseError("expected '*' after coefficient in: " + term);
        raw.word = term.substr(k + 1);
      }
    } else {
      raw.word = term;
    }
    raws.push_back(raw);
    if (end >= text.size()) break;
    negative = text[end] == '-';
    i = end + 1;
  }

  std::vector<FreeWord> words;
  std::size_t max_rank = rank;
  for (const auto& r : raws) {
    words.push_back(FreeWord::parse(r.word, rank));
    max_rank = std::max(max_rank, words.back().rank());
  }
  OrderedGroupAlgebraElement out(field, max_rank);
  for (std::size_t t = 0; t < raws.size(); ++t) {
    FqElement c;
    if (is_prime(field.order())) {
      c = field.from_int(raws[t].coeff);
    } else {
      if (raws[t].coeff >= field.order())
        throw ParseError("coefficient " + std::to_string(raws[t].coeff) + " is not an element of " + field.name());
      c = field.element(static_cast<int>(raws[t].coeff));
    }
    if (raws[t].negative) c = field.neg(c);
    accumulate(field, out.terms_, words[t].with_rank(max_rank), c);
  }
  return out;
}

FqElement OrderedGroupAlgebraElement::coefficient(const FreeWord& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? FqElement{} : it->second;
}

std::string OrderedGroupAlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<FreeWord, FqElement>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return magnus_less(a.first, b.first); });
  std::ostringstream os;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i) os << " + ";
    os << int(sorted[i].second.value);
    if (!sorted[i].first.is_identity()) os << '*' << sorted[i].first.to_string();
  }
  return os.str();
}

OrderedGroupAlgebraElement operator+(const OrderedGroupAlgebraElement& a, const OrderedGroupAlgebraElement& b) {
  require_same(a, b);
  auto terms = a.terms();
  for (const auto& [g, c] : b.terms()) accumulate(a.field(), terms, g, c);
  return OrderedGroupAlgebraElement(a.field(), a.rank(), terms);
}

OrderedGroupAlgebraElement kg_multiply(const OrderedGroupAlgebraElement& a, const OrderedGroupAlgebraElement& b) {
  require_same(a, b);
  const Field& f = a.field();
  OrderedGroupAlgebraElement::Terms terms;
  for (const auto& [g, cg] : a.terms())
    for (const auto& [h, ch] : b.terms()) accumulate(f, terms, g * h, f.mul(cg, ch));
  return OrderedGroupAlgebraElement(f, a.rank(), terms);
}

FreeWord valuation(const OrderedGroupAlgebraElement& a) {
  if (a.is_zero()) throw ZeroElement("valuation of the zero element");
  const FreeWord* best = nullptr;
  for (const auto& [g, c] : a.terms())
    if (!best || magnus_less(g, *best)) best = &g;
  return *best;
}

bool is_trivial_unit(const OrderedGroupAlgebraElement& a) { return a.terms().size() == 1; }

FiniteGroup::Index evaluate_word(const FiniteGroup& target, const std::vector<FiniteGroup::Index>& images,
                                 const FreeWord& w) {
  if (images.size() < w.rank()) throw RankMismatch("fewer generator images than the word rank");
  FiniteGroup::Index x = target.identity();
  for (auto l : w.letters()) {
    const auto y = images[l.generator];
    x = target.mul(x, l.inverse ? target.inv(y) : y);
  }
  return x;
}

bool pullback_membership(const OrderedGroupAlgebraElement& a, const FiniteGroup& target,
                         const std::vector<FiniteGroup::Index>& images,
                         const std::function<bool(FiniteGroup::Index)>& member) {
  return member(evaluate_word(target, images, valuation(a)));
}

}  // namespace permuta
