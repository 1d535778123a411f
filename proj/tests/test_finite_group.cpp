#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "permuta/error.hpp"
#include "permuta/group_catalog.hpp"
#include "permuta/homomorphism.hpp"
#include "permuta/lattice.hpp"
#include "permuta/matrix_groups.hpp"
#include "permuta/suites.hpp"

using namespace permuta;

namespace {

std::set<std::vector<oracle::Index>> as_member_sets(const std::vector<SubgroupSet>& subs) {
  std::set<std::vector<oracle::Index>> out;
  for (const auto& s : subs) {
    std::vector<oracle::Index> m;
    for (auto x : s.members().members()) m.push_back(static_cast<oracle::Index>(x));
    out.insert(m);
  }
  return out;
}

}  // namespace

TEST_CASE("permutations compose left to right") {
  const auto a = Permutation::parse("(1 2)");
  const auto b = Permutation::parse("(2 3)");
  CHECK((a * b).to_cycle_string() == "(1 3 2)");
  CHECK((b * a).to_cycle_string() == "(1 2 3)");
  CHECK(Permutation::parse("(1,2,3)") == Permutation::parse("(1 2 3)"));
  CHECK(Permutation::parse("()").is_identity());
  CHECK(Permutation::parse("(1 2)") == Permutation::parse("(1 2)").extended(5));
  CHECK((a * a.inverse()).is_identity());
  CHECK_THROWS_AS(Permutation::parse("(1 2"), ParseError);
}

TEST_CASE("catalog groups have the expected orders") {
  const std::vector<std::pair<std::string, std::size_t>> cases{
      {"S(1)", 1}, {"S(3)", 6}, {"S(4)", 24}, {"C(1)", 1}, {"C(7)", 7},  {"D(1)", 2},
      {"D(2)", 4}, {"D(4)", 8}, {"D(8)", 16}, {"Q8", 8},  {"M16", 16}, {"GL(2,3)", 48},
      {"SL(2,3)", 24}, {"perm[(1 2 3),(2 3 4)]", 12}};
  for (const auto& [spec, order] : cases) {
    CAPTURE(spec);
    const auto g = parse_group(spec);
    CHECK(g->order() == order);
    CHECK(g->label() == spec);
    g->validate();
  }
  CHECK_FALSE(parse_group("Q8")->is_abelian());
  CHECK_FALSE(parse_group("M16")->is_abelian());
  CHECK(parse_group("D(2)")->is_abelian());
}

TEST_CASE("every corpus spec parses and has order at most 16") {
  for (const auto& spec : small_group_corpus()) {
    CAPTURE(spec);
    const auto g = parse_group(spec);
    CHECK(g->order() <= 16);
    g->validate();
  }
}

TEST_CASE("group construction errors") {
  CHECK_THROWS_AS(parse_group("X(3)"), ParseError);
  CHECK_THROWS_AS(parse_group("S(0)"), ParseError);
  Limits small;
  small.closure_cap = 100;
  CHECK_THROWS_AS(parse_group("S(5)", small), ClosureCapExceeded);
  const Field& f = Field::get(2);
  CHECK_THROWS_AS(FiniteGroup::generate({Permutation::parse("(1 2)"), MatrixFq::identity(f, 2)}),
                  MixedRepresentation);
  // Not a Latin square.
  CHECK_THROWS_AS(FiniteGroup::from_table(3, {0, 1, 2, 1, 0, 2, 2, 2, 0}), InvalidGroup);
}

TEST_CASE("cayley table input") {
  const auto g = cayley_group_from_text("3\n0 1 2\n1 2 0\n2 0 1\n");
  CHECK(g.order() == 3);
  CHECK(g.is_abelian());
  CHECK(all_subgroups(g).size() == 2);
  CHECK_THROWS_AS(cayley_group_from_text("2\n0 1\n1"), ParseError);
}

TEST_CASE("element orders, powers and inverses") {
  const auto g = parse_group("S(4)");
  std::vector<std::size_t> counts(5, 0);
  for (FiniteGroup::Index x = 0; x < g->order(); ++x) {
    ++counts[g->element_order(x)];
    CHECK(g->mul(x, g->inv(x)) == g->identity());
    CHECK(g->power(x, static_cast<long long>(g->element_order(x))) == g->identity());
    CHECK(g->power(x, -1) == g->inv(x));
  }
  // 1 identity, 9 involutions, 8 three-cycles, 6 four-cycles.
  CHECK(counts == std::vector<std::size_t>{0, 1, 9, 8, 6});
}

TEST_CASE("S_3 lattice matches subset enumeration") {
  const auto g = parse_group("S(3)");
  const auto subs = all_subgroups(*g);
  CHECK(subs.size() == 6);
  CHECK(as_member_sets(subs) == oracle::subgroups_by_subsets(*g));
}

TEST_CASE("lattice matches brute force on small corpus groups") {
  for (const auto& spec : small_group_corpus()) {
    const auto g = parse_group(spec);
    if (g->order() > 12) continue;
    CAPTURE(spec);
    CHECK(as_member_sets(all_subgroups(*g)) == oracle::subgroups_by_subsets(*g));
  }
}

TEST_CASE("lattice matches incremental extension up to order 48") {
  for (const auto& spec : criteria_corpus()) {
    CAPTURE(spec);
    const auto g = parse_group(spec);
    const auto subs = all_subgroups(*g);
    CHECK(as_member_sets(subs) == oracle::subgroups_by_extension(*g));
    CHECK(std::is_sorted(subs.begin(), subs.end(), [](const SubgroupSet& a, const SubgroupSet& b) {
      return canonical_less(a.members(), b.members());
    }));
  }
  CHECK(all_subgroups(*parse_group("GL(2,3)")).size() == 55);
  CHECK(all_subgroups(*parse_group("S(4)")).size() == 30);
  CHECK(all_subgroups(*parse_group("Q8")).size() == 6);
  CHECK(all_subgroups(*parse_group("M16")).size() == 11);
}

TEST_CASE("lattice cap") {
  Limits small;
  small.lattice_cap = 20;
  CHECK_THROWS_AS(all_subgroups(*parse_group("S(4)"), small), OrderCapExceeded);
  CHECK_NOTHROW(all_subgroups(*parse_group("D(8)"), small));
}

TEST_CASE("subgroup constructions") {
  const auto d4 = parse_group("D(4)");
  CHECK(center(*d4).size() == 2);
  const auto s4 = parse_group("S(4)");
  CHECK(commutator_subgroup(*s4, SubgroupSet::whole(*s4)).size() == 12);
  const auto a4 = commutator_subgroup(*s4, SubgroupSet::whole(*s4));
  CHECK(commutator_subgroup(*s4, a4).size() == 4);
  const auto c = cyclic_subgroups(*s4);
  CHECK(c.size() == 17);  // 1 + 9 of order 2 + 4 of order 3 + 3 of order 4
  const auto j = join(c[1], c[2]);
  CHECK(c[1].subgroup_of(j));
  CHECK(intersect(j, c[1]) == c[1]);
  CHECK_THROWS_AS(SubgroupSet(*s4, IndexSet::of(s4->order(), std::vector<int>{0, 1, 2})), InvalidGroup);
  CHECK(is_prime_power(16, 2));
  CHECK(is_prime_power(1, 3));
  CHECK_FALSE(is_prime_power(12, 2));
}

TEST_CASE("homomorphisms and preimages") {
  const auto s3 = parse_group("S(3)");
  const auto c2 = parse_group("C(2)");
  // (1 2) -> e, (1 2 3) -> (1 2) sends an element of order 3 to one of order 2.
  const auto t = *c2->index_of(Permutation::parse("(1 2)"));
  CHECK_THROWS_AS(homomorphism_from_generator_images(*s3, *c2, {c2->identity(), t}), InvalidGroup);
  CHECK(homomorphism_from_generator_images(*s3, *c2, {t, c2->identity()}).is_surjective());
  for (const auto& s : pullback_corpus()) {
    CAPTURE(s.name);
    CHECK(s.map.is_surjective());
    const auto kernel = preimage(s.map, SubgroupSet::trivial(*s.target));
    CHECK(kernel.size() * s.target->order() == s.source->order());
    CHECK(image(s.map, SubgroupSet::whole(*s.source)) == SubgroupSet::whole(*s.target));
  }
}
