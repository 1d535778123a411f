#include "permuta/suites.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <random>
#include <unordered_map>

#include "permuta/error.hpp"
#include "permuta/group_algebra.hpp"
#include "permuta/group_catalog.hpp"
#include "permuta/lattice.hpp"
#include "permuta/magnus.hpp"
#include "permuta/matrix_groups.hpp"
#include "permuta/ordered_group_algebra.hpp"
#include "permuta/subgroup_analysis.hpp"

namespace permuta {

using Index = FiniteGroup::Index;

std::vector<std::string> criteria_corpus() {
  auto c = small_group_corpus();
  c.push_back("S(4)");
  c.push_back("GL(2,3)");
  return c;
}

CriteriaGroupResult check_criteria_on_group(const std::string& spec, const Limits& limits) {
  const auto g = parse_group(spec, limits);
  const auto subs = all_subgroups(*g, limits);
  CriteriaGroupResult r{spec, g->order(), subs.size(), 0, 0, false};
  for (const auto& n : subs) {
    const auto c = check_permutability_criteria(*g, n, subs);
    if (!c.all_agree()) ++r.disagreements;
    if (c.all_true()) ++r.permutable;
  }
  r.verdict = r.disagreements == 0;
  return r;
}

RadicalPrimeResult check_unipotent_radical(const std::string& spec, int p, const Limits& limits) {
  const auto g = parse_group(spec, limits);
  const auto l = verify_lemma_6_4(g, p, limits);
  return {spec, p, g->order(), l.op.size(), l.radical_side.size(), l.equal};
}

QuotientCommutativityResult check_quotient_commutativity(const std::string& spec, int p, const Limits& limits) {
  const auto g = parse_group(spec, limits);
  QuotientCommutativityResult r{spec, p, false, false, true};
  const auto derived = commutator_subgroup(*g, SubgroupSet::whole(*g));
  if (!is_prime_power(derived.size(), static_cast<std::size_t>(p))) return r;
  r.applicable = true;
  r.commutative = quotient_commutativity_check(g, p, limits);
  r.verdict = r.commutative;
  return r;
}

// ---- magnus ----

std::vector<FreeWord> all_reduced_words(std::size_t rank, std::size_t max_length) {
  std::vector<FreeWord> out{FreeWord(rank)};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].length() == max_length) continue;
    for (std::size_t gen = 0; gen < rank; ++gen)
      for (bool inv : {false, true}) {
        const Letter l{gen, inv};
        const auto& ls = out[i].letters();
        if (!ls.empty() && ls.back().generator == gen && ls.back().inverse != inv) continue;
        auto letters = ls;
        letters.push_back(l);
        out.emplace_back(rank, letters);
      }
  }
  return out;
}

namespace {

FreeWord random_word(std::mt19937_64& rng, std::size_t rank, std::size_t max_length) {
  const std::size_t len = std::uniform_int_distribution<std::size_t>(0, max_length)(rng);
  std::vector<Letter> letters;
  std::uniform_int_distribution<std::size_t> pick(0, 2 * rank - 1);
  while (letters.size() < len) {
    const std::size_t k = pick(rng);
    const Letter l{k / 2, k % 2 == 1};
    if (!letters.empty() && letters.back().generator == l.generator && letters.back().inverse != l.inverse) continue;
    letters.push_back(l);
  }
  return FreeWord(rank, letters);
}

int sign(std::strong_ordering o) { return o < 0 ? -1 : (o > 0 ? 1 : 0); }

std::uint64_t fingerprint(const MagnusExpansion& e) {
  static const BigInt prime = (BigInt(1) << 61) - 1;
  std::uint64_t h = 1469598103934665603ULL;
  for (const auto& [m, c] : e.terms()) {
    for (auto x : m) h = (h ^ (x + 1)) * 1099511628211ULL;
    h = (h ^ 0xffff) * 1099511628211ULL;
    BigInt r = c % prime;
    if (r < 0) r += prime;
    h = (h ^ static_cast<std::uint64_t>(r)) * 1099511628211ULL;
  }
  return h;
}

// Depth-first over reduced words, reusing the parent's expansion.
void injectivity_scan(std::size_t rank, std::size_t max_length, std::size_t degree, MagnusSuiteResult& r) {
  std::unordered_map<std::uint64_t, std::vector<FreeWord>> seen;
  std::vector<Letter> path;
  std::function<void(const MagnusExpansion&)> visit = [&](const MagnusExpansion& e) {
    FreeWord w(rank, path);
    ++r.injectivity_words;
    auto& bucket = seen[fingerprint(e)];
    for (const auto& other : bucket)
      if (magnus_expand(other, degree) == e) ++r.injectivity_collisions;
    bucket.push_back(w);
    if (path.size() == max_length) return;
    for (std::size_t gen = 0; gen < rank; ++gen)
      for (bool inv : {false, true}) {
        if (!path.empty() && path.back().generator == gen && path.back().inverse != inv) continue;
        path.push_back({gen, inv});
        visit(e * letter_expansion(rank, path.back(), degree));
        path.pop_back();
      }
  };
  visit(MagnusExpansion::one(rank, degree));
}

OrderedGroupAlgebraElement random_element(std::mt19937_64& rng, const Field& f, std::size_t rank) {
  const std::size_t support = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
  std::uniform_int_distribution<int> coeff(1, f.order() - 1);
  OrderedGroupAlgebraElement::Terms terms;
  while (terms.size() < support) terms.emplace(random_word(rng, rank, 4), f.element(coeff(rng)));
  return OrderedGroupAlgebraElement(f, rank, terms);
}

}  // namespace

MagnusSuiteResult run_magnus_suite(const MagnusSuiteConfig& cfg) {
  MagnusSuiteResult r;
  r.seed = cfg.seed;
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<std::size_t> pick_rank(1, cfg.max_rank);

  for (std::size_t i = 0; i < cfg.pairs; ++i) {
    const std::size_t rank = pick_rank(rng);
    const FreeWord a = random_word(rng, rank, cfg.max_length);
    const FreeWord b = random_word(rng, rank, cfg.max_length);
    const FreeWord c = random_word(rng, rank, cfg.max_length);
    ++r.pairs;
    const int ab = sign(magnus_compare(a, b)), ba = sign(magnus_compare(b, a));
    const int ac = sign(magnus_compare(a, c)), bc = sign(magnus_compare(b, c));
    if (ab != -ba || (ab == 0) != (a == b)) ++r.order_violations;
    // Transitivity over the triple, in every arrangement.
    const std::array<std::array<int, 3>, 3> rel{{{0, ab, ac}, {-ab, 0, bc}, {-ac, -bc, 0}}};
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y)
        for (int z = 0; z < 3; ++z)
          if (x != y && y != z && x != z && rel[x][y] < 0 && rel[y][z] < 0 && rel[x][z] >= 0) ++r.order_violations;
    if (ab != 0) {
      const FreeWord& lo = ab < 0 ? a : b;
      const FreeWord& hi = ab < 0 ? b : a;
      if (!magnus_less(c * lo, c * hi)) ++r.invariance_violations;
      if (!magnus_less(lo * c, hi * c)) ++r.invariance_violations;
    }
  }

  const auto orders = Field::supported_orders();
  for (std::size_t i = 0; i < cfg.valuation_pairs; ++i) {
    const Field& f = Field::get(orders[i % orders.size()]);
    const std::size_t rank = pick_rank(rng);
    const auto x = random_element(rng, f, rank);
    const auto y = random_element(rng, f, rank);
    ++r.valuation_pairs;
    try {
      if (valuation(kg_multiply(x, y)) != valuation(x) * valuation(y)) ++r.valuation_violations;
    } catch (const ZeroElement&) {
      ++r.valuation_violations;
    }
  }

  for (auto [rank, len] : cfg.injectivity) injectivity_scan(rank, len, cfg.injectivity_degree, r);
  return r;
}

// ---- pullback corpus ----

namespace {

bool odd(const Permutation& p) {
  std::vector<bool> seen(p.degree(), false);
  std::size_t cycles = 0;
  for (std::size_t x = 0; x < p.degree(); ++x) {
    if (seen[x]) continue;
    ++cycles;
    for (std::size_t y = x; !seen[y]; y = p(y)) seen[y] = true;
  }
  return (p.degree() - cycles) % 2 == 1;
}

const Permutation& as_perm(const Element& e) { return std::get<Permutation>(e); }

Element sign_image(const Element& e) {
  return odd(as_perm(e)) ? Permutation::from_cycles({{1, 2}}) : Permutation::identity(2);
}

std::shared_ptr<const FiniteGroup> share(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

Surjection by_function(std::string name, std::shared_ptr<const FiniteGroup> src, std::shared_ptr<const FiniteGroup> dst,
                       const std::function<Element(const Element&)>& f) {
  auto h = homomorphism_from_function(*src, *dst, f);
  return {std::move(name), std::move(src), std::move(dst), std::move(h)};
}

Surjection by_images(std::string name, std::shared_ptr<const FiniteGroup> src, std::shared_ptr<const FiniteGroup> dst,
                     const std::vector<Element>& images) {
  std::vector<Index> idx;
  for (const auto& e : images) idx.push_back(*dst->index_of(e));
  auto h = homomorphism_from_generator_images(*src, *dst, idx);
  return {std::move(name), std::move(src), std::move(dst), std::move(h)};
}

}  // namespace

std::vector<Surjection> pullback_corpus(const Limits& limits) {
  std::vector<Surjection> out;
  const auto s3 = parse_group("S(3)", limits);
  const auto s4 = parse_group("S(4)", limits);
  const auto c2 = parse_group("C(2)", limits);
  const auto klein = parse_group("perm[(1 2),(3 4)]", limits);
  const auto gl23 = parse_group("GL(2,3)", limits);
  const auto m16 = parse_group("M16", limits);

  out.push_back(by_function("S(3) -> C(2), sign", s3, c2, sign_image));

  // The three pairings {12|34, 13|24, 14|23}, indexed by the partner of point 0.
  out.push_back(by_function("S(4) -> S(3), action on pairings", s4, s3, [](const Element& e) {
    const auto& p = as_perm(e).extended(4);
    auto pairing_of = [](std::uint16_t a, std::uint16_t b) {
      // partner of 0 in the pairing containing {a, b}
      if (a == 0) return b;
      if (b == 0) return a;
      for (std::uint16_t c = 1; c < 4; ++c)
        if (c != a && c != b) return c;
      return std::uint16_t{0};
    };
    std::vector<std::uint16_t> img(3);
    for (std::uint16_t partner = 1; partner < 4; ++partner)
      img[partner - 1] = static_cast<std::uint16_t>(pairing_of(p(0), p(partner)) - 1);
    return Permutation(img);
  }));

  out.push_back(by_images("D(4) -> C(2)xC(2)", parse_group("D(4)", limits), klein,
                          {Permutation::from_cycles({{1, 2}}), Permutation::from_cycles({{3, 4}})}));

  out.push_back(by_images("M16 -> C(4)xC(2)", m16, parse_group("perm[(1 2 3 4),(5 6)]", limits),
                          {Permutation::from_cycles({{1, 2, 3, 4}}), Permutation::from_cycles({{5, 6}})}));

  {
    // Q8 acts on itself from the right, so g sends point 0 (the identity) to
    // 4 * sign + unit; the unit (1, i, j, k) picks the Klein image.
    const auto q8 = parse_group("Q8", limits);
    const std::array<Permutation, 4> units{Permutation::identity(4), Permutation::from_cycles({{1, 2}}, 4),
                                           Permutation::from_cycles({{3, 4}}, 4),
                                           Permutation::from_cycles({{1, 2}, {3, 4}}, 4)};
    out.push_back(by_function("Q8 -> C(2)xC(2)", q8, klein,
                              [units](const Element& e) { return units[as_perm(e)(0) % 4]; }));
  }

  // Row vectors v -> vA on the four points of the projective line over F_3.
  out.push_back(by_function("GL(2,3) -> S(4), projective line", gl23, s4, [](const Element& e) {
    const auto& m = std::get<MatrixFq>(e);
    const Field& f = m.field();
    const std::array<std::array<int, 2>, 4> points{{{1, 0}, {0, 1}, {1, 1}, {1, 2}}};
    std::vector<std::uint16_t> img(4);
    for (std::size_t k = 0; k < 4; ++k) {
      std::array<FqElement, 2> v{};
      for (std::size_t c = 0; c < 2; ++c)
        for (std::size_t r = 0; r < 2; ++r)
          v[c] = f.add(v[c], f.mul(f.from_int(points[k][r]), m(r, c)));
      const FqElement scale = v[0].value ? f.inv(v[0]) : f.inv(v[1]);
      const int x = f.mul(scale, v[0]).value, y = f.mul(scale, v[1]).value;
      for (std::size_t t = 0; t < 4; ++t)
        if (points[t][0] == x && points[t][1] == y) img[k] = static_cast<std::uint16_t>(t);
    }
    return Permutation(img);
  }));

  out.push_back(by_function("GL(2,3) -> C(2), determinant", gl23, c2, [](const Element& e) -> Element {
    const auto& m = std::get<MatrixFq>(e);
    return m.determinant() == m.field().one() ? Permutation::identity(2) : Permutation::from_cycles({{1, 2}});
  }));

  out.push_back(by_images("D(6) -> S(3)", parse_group("D(6)", limits), s3,
                          {Permutation::from_cycles({{1, 2, 3}}), Permutation::from_cycles({{1, 2}})}));

  out.push_back(by_function("S(4) -> C(2), sign", s4, c2, sign_image));

  {
    std::vector<Element> gens;
    for (auto i : m16->generators()) gens.push_back(m16->element(i));
    gens.emplace_back(Permutation::from_cycles({{9, 10}}));
    auto src = share(FiniteGroup::generate(gens, limits));
    out.push_back(by_function("M16xC(2) -> M16, restriction", src, m16, [](const Element& e) {
      const auto& p = as_perm(e);
      return Permutation(std::vector<std::uint16_t>(p.images().begin(), p.images().begin() + 8));
    }));
  }
  return out;
}

PullbackResult check_pullback(const Surjection& s, const Limits& limits) {
  PullbackResult r{s.name, 0, 0, false};
  if (!s.map.is_surjective()) {
    r.failures = 1;
    return r;
  }
  const auto src_cyclics = cyclic_subgroups(*s.source);
  const auto dst_cyclics = cyclic_subgroups(*s.target);
  for (const auto& m : all_subgroups(*s.target, limits)) {
    if (!is_permutable(*s.target, m, dst_cyclics)) continue;
    ++r.permutable_targets;
    if (!is_permutable(*s.source, preimage(s.map, m), src_cyclics)) ++r.failures;
  }
  r.verdict = r.failures == 0;
  return r;
}

}  // namespace permuta
