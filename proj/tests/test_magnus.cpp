#include <algorithm>

#include "doctest.h"
#include "permuta/error.hpp"
#include "permuta/group_catalog.hpp"
#include "permuta/magnus.hpp"
#include "permuta/ordered_group_algebra.hpp"
#include "permuta/suites.hpp"

using namespace permuta;

namespace {

FreeWord w(std::string_view s, std::size_t rank = 2) { return FreeWord::parse(s, rank); }

}  // namespace

TEST_CASE("free reduction") {
  CHECK(w("x1 x1^-1").is_identity());
  CHECK(w("x1 x2 x2^-1 x1") == w("x1^2"));
  CHECK(w("x1x2^-1") == w("x1 x2^-1"));
  CHECK(w("e").is_identity());
  CHECK(w("x1^3 x2^-2").to_string() == "x1^3 x2^-2");
  CHECK(w("x1^0 x2").to_string() == "x2");
  const auto u = w("x1 x2^-1 x1^2 x2");
  CHECK((u * u.inverse()).is_identity());
  CHECK((u.inverse() * u).is_identity());
  CHECK(reduce(2, u.letters()) == u);
  CHECK(FreeWord::parse("x3").rank() == 3);
  CHECK_THROWS_AS(FreeWord::parse("x3", 2), RankMismatch);
  CHECK_THROWS_AS(FreeWord::parse("y1"), ParseError);
  CHECK_THROWS_AS(FreeWord::parse("x0"), ParseError);
  CHECK_THROWS_AS(w("x1") * FreeWord::parse("x1", 3), RankMismatch);
}

TEST_CASE("reduced word counts") {
  for (std::size_t r = 1; r <= 3; ++r) {
    std::size_t expect = 1, layer = 2 * r;
    for (std::size_t len = 1; len <= 4; ++len, layer *= 2 * r - 1) expect += layer;
    CHECK(all_reduced_words(r, 4).size() == expect);
  }
}

TEST_CASE("Magnus expansions") {
  CHECK(magnus_expand(w("x1", 1), 3).to_string() == "1 + X1");
  const auto inv = magnus_expand(w("x1^-1", 1), 2);
  CHECK(inv.to_string() == "1 - X1 + X1^2");
  // (1 + X1)(1 - X1 + X1^2) = 1 + X1^3, which is 1 below degree 3.
  CHECK((magnus_expand(w("x1", 1), 2) * inv) == MagnusExpansion::one(1, 2));
  CHECK(magnus_expand(w("x1 x2 x1^-1 x2^-1"), 2).to_string() == "1 + X1*X2 - X2*X1");
  CHECK(magnus_expand(w("x1^2", 1), 4).to_string() == "1 + 2*X1 + X1^2");
  CHECK(magnus_expand(w("x1^-2", 1), 3).to_string() == "1 - 2*X1 + 3*X1^2 - 4*X1^3");
  // Image of a group element has constant term 1.
  for (const auto& u : all_reduced_words(2, 3)) CHECK(magnus_expand(u, 4).coefficient({}) == 1);
  CHECK_THROWS_AS(magnus_expand(w("x1"), 0), TruncationInsufficient);
}

TEST_CASE("Magnus order examples") {
  CHECK(magnus_compare(w("x1 x2"), w("x1 x2")) == std::strong_ordering::equal);
  CHECK(magnus_compare(w("x1", 1), w("x1^2", 1)) == std::strong_ordering::less);
  CHECK(magnus_compare(w("e", 1), w("x1", 1)) == std::strong_ordering::less);
  CHECK(magnus_compare(w("x1^-1", 1), w("e", 1)) == std::strong_ordering::less);
  // Equal degree-1 parts: decided by X1X2 - X2X1.
  CHECK(magnus_compare(w("x2 x1"), w("x1 x2")) == std::strong_ordering::less);
  CHECK(magnus_compare(w("x1 x2 x1^-1 x2^-1"), w("e")) == std::strong_ordering::greater);
  CHECK_THROWS_AS(magnus_compare(w("x1", 1), w("x1", 2)), RankMismatch);
}

TEST_CASE("order axioms on exhaustive short words") {
  auto words = all_reduced_words(2, 3);
  std::sort(words.begin(), words.end(), magnus_less);
  for (std::size_t i = 0; i + 1 < words.size(); ++i) CHECK(magnus_less(words[i], words[i + 1]));
  for (const auto& c : all_reduced_words(2, 2))
    for (std::size_t i = 0; i + 1 < words.size(); ++i) {
      CHECK(magnus_less(c * words[i], c * words[i + 1]));
      CHECK(magnus_less(words[i] * c, words[i + 1] * c));
    }
}

TEST_CASE("sampled Magnus suite, seed 0") {
  const auto r = run_magnus_suite();
  CHECK(r.pairs == 10000);
  CHECK(r.order_violations == 0);
  CHECK(r.invariance_violations == 0);
  CHECK(r.valuation_pairs == 200);
  CHECK(r.valuation_violations == 0);
  CHECK(r.injectivity_words == 13 + 1457 + 23437);
  CHECK(r.injectivity_collisions == 0);
}

TEST_CASE("ordered group algebra") {
  const Field& f5 = Field::get(5);
  const auto a = OrderedGroupAlgebraElement::parse(f5, "3*x1 + 2*x1x2^-1");
  CHECK(a.rank() == 2);
  CHECK(a.coefficient(w("x1")) == f5.element(3));
  CHECK(a.coefficient(w("x1 x2^-1")) == f5.element(2));
  CHECK(OrderedGroupAlgebraElement::parse(f5, "x1 - x1").is_zero());
  CHECK(OrderedGroupAlgebraElement::parse(f5, "-1").coefficient(FreeWord(0)) == f5.element(4));
  CHECK_THROWS_AS(OrderedGroupAlgebraElement::parse(Field::get(4), "5*x1"), ParseError);
  CHECK_THROWS_AS(OrderedGroupAlgebraElement::parse(f5, "3 x1"), ParseError);

  const auto g = OrderedGroupAlgebraElement::monomial(f5, f5.element(3), w("x1 x2"));
  CHECK(valuation(g) == w("x1 x2"));
  CHECK(is_trivial_unit(g));
  CHECK_FALSE(is_trivial_unit(OrderedGroupAlgebraElement(f5, 2)));
  CHECK_THROWS_AS(valuation(OrderedGroupAlgebraElement(f5, 2)), ZeroElement);
  const auto e_x1 = OrderedGroupAlgebraElement::parse(f5, "1 + x1", 2);
  CHECK(valuation(e_x1) == FreeWord(2));
  CHECK_FALSE(is_trivial_unit(e_x1));

  const auto one = OrderedGroupAlgebraElement::monomial(f5, f5.one(), FreeWord(2));
  CHECK(kg_multiply(a, one) == a);
  const auto x = OrderedGroupAlgebraElement::parse(f5, "x1", 2), xi = OrderedGroupAlgebraElement::parse(f5, "x1^-1", 2);
  CHECK(kg_multiply(x, xi) == one);
  CHECK(valuation(kg_multiply(a, e_x1)) == valuation(a) * valuation(e_x1));
}

TEST_CASE("1 + x1 has no inverse of small support") {
  // Rank 1 over F_2: candidate supports inside x1^-3 .. x1^3, at most 6 words.
  const Field& f = Field::get(2);
  const auto x = OrderedGroupAlgebraElement::parse(f, "1 + x1", 1);
  const auto one = OrderedGroupAlgebraElement::monomial(f, f.one(), FreeWord(1));
  std::vector<FreeWord> pool;
  for (int k = -3; k <= 3; ++k) pool.push_back(FreeWord::parse(k == 0 ? "e" : "x1^" + std::to_string(k), 1));
  int tried = 0;
  for (unsigned mask = 1; mask < (1u << pool.size()); ++mask) {
    if (__builtin_popcount(mask) > 6) continue;
    OrderedGroupAlgebraElement::Terms t;
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (mask >> i & 1) t.emplace(pool[i], f.one());
    ++tried;
    CHECK_FALSE(kg_multiply(x, OrderedGroupAlgebraElement(f, 1, t)) == one);
  }
  CHECK(tried == 126);
}

TEST_CASE("pullback membership through a quotient onto S_3") {
  const auto s3 = parse_group("S(3)");
  const std::vector<FiniteGroup::Index> images{*s3->index_of(Permutation::parse("(1 2)")),
                                               *s3->index_of(Permutation::parse("(1 2 3)"))};
  const auto a3 = generated_subgroup(*s3, std::vector<FiniteGroup::Index>{images[1]});
  auto in_a3 = [&](FiniteGroup::Index i) { return a3.contains(i); };
  const Field& f = Field::get(3);
  CHECK(pullback_membership(OrderedGroupAlgebraElement::parse(f, "2", 2), *s3, images, in_a3));
  // v(x1 + x1^2) = x1, and (1 2) is odd.
  CHECK_FALSE(pullback_membership(OrderedGroupAlgebraElement::parse(f, "x1 + x1^2", 2), *s3, images, in_a3));
  CHECK(pullback_membership(OrderedGroupAlgebraElement::parse(f, "x2 x1 x2^-1 x1", 2), *s3, images, in_a3));
  CHECK(evaluate_word(*s3, images, w("x1 x1")) == s3->identity());
  CHECK_THROWS_AS(pullback_membership(OrderedGroupAlgebraElement(f, 2), *s3, images, in_a3), ZeroElement);
}
