#include "permuta/group_algebra.hpp"

#include "permuta/error.hpp"
#include "permuta/lattice.hpp"
#include "permuta/subgroup_analysis.hpp"

namespace permuta {

using Index = FiniteGroup::Index;
using linalg::Vec;

namespace {

FiniteAlgebra group_algebra_constants(const FiniteGroup& g, const Field& f) {
  const std::size_t n = g.order();
  std::vector<Vec> prods(n * n, Vec(n, f.zero()));
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) prods[static_cast<std::size_t>(a) * n + b][g.mul(a, b)] = f.one();
  Vec one(n, f.zero());
  one[g.identity()] = f.one();
  return FiniteAlgebra(f, n, std::move(prods), std::move(one));
}

void require_same(const AlgebraElement& a, const AlgebraElement& b) {
  if (&a.parent() != &b.parent()) throw ParentMismatch("group algebra elements from different algebras");
}

}  // namespace

AlgebraElement::AlgebraElement(const GroupAlgebra& parent, const std::map<Index, FqElement>& coeffs)
    : parent_(&parent) {
  for (auto [g, c] : coeffs) {
    if (g >= parent.group().order()) throw IndexError("group element index out of range");
    if (c.value) coeffs_.emplace(g, c);
  }
}

FqElement AlgebraElement::coefficient(Index g) const {
  auto it = coeffs_.find(g);
  return it == coeffs_.end() ? FqElement{} : it->second;
}

IndexSet AlgebraElement::support() const {
  IndexSet s(parent_->group().order());
  for (const auto& [g, c] : coeffs_) s.insert(g);
  return s;
}

Vec AlgebraElement::dense() const {
  Vec v(parent_->group().order(), parent_->field().zero());
  for (auto [g, c] : coeffs_) v[g] = c;
  return v;
}

AlgebraElement AlgebraElement::from_dense(const GroupAlgebra& parent, const Vec& v) {
  std::map<Index, FqElement> m;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i].value) m.emplace(static_cast<Index>(i), v[i]);
  return AlgebraElement(parent, m);
}

GroupAlgebra::GroupAlgebra(std::shared_ptr<const FiniteGroup> group, const Field& field, const Limits& limits)
    : group_(std::move(group)),
      field_(&field),
      algebra_([&] {
        if (group_->order() > limits.closure_cap)
          throw CapExceeded("group algebra of order " + std::to_string(group_->order()) + " exceeds cap");
        return group_algebra_constants(*group_, field);
      }()) {}

AlgebraElement GroupAlgebra::one() const { return basis(group_->identity()); }

AlgebraElement GroupAlgebra::basis(Index g, FqElement coefficient) const {
  return AlgebraElement(*this, {{g, coefficient}});
}

AlgebraElement GroupAlgebra::basis(Index g) const { return basis(g, field_->one()); }

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
  require_same(a, b);
  const Field& f = a.parent().field();
  auto m = a.coefficients();
  for (auto [g, c] : b.coefficients()) m[g] = f.add(m[g], c);
  return AlgebraElement(a.parent(), m);
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
  return a + scale(a.parent().field().neg(a.parent().field().one()), b);
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  require_same(a, b);
  const Field& f = a.parent().field();
  const FiniteGroup& g = a.parent().group();
  std::map<Index, FqElement> m;
  for (auto [x, cx] : a.coefficients())
    for (auto [y, cy] : b.coefficients()) {
      auto& slot = m[g.mul(x, y)];
      slot = f.add(slot, f.mul(cx, cy));
    }
  return AlgebraElement(a.parent(), m);
}

AlgebraElement scale(FqElement s, const AlgebraElement& a) {
  const Field& f = a.parent().field();
  std::map<Index, FqElement> m;
  for (auto [g, c] : a.coefficients()) m.emplace(g, f.mul(s, c));
  return AlgebraElement(a.parent(), m);
}

AlgebraElement power(const AlgebraElement& a, unsigned long long e) {
  AlgebraElement r = a.parent().one();
  AlgebraElement base = a;
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

UnitTest is_unit(const AlgebraElement& a) {
  const auto& alg = a.parent().algebra();
  const Field& f = alg.field();
  const auto l = alg.left_regular(a.dense());
  UnitTest r;
  // a y = 1 solvable <=> L_a invertible; one-sided inverses are two-sided in
  // a finite-dimensional algebra.
  auto y = linalg::solve(f, l, alg.one(), alg.dim());
  if (!y || linalg::rank(f, l, alg.dim()) < alg.dim()) return r;
  r.is_unit = true;
  r.inverse = AlgebraElement::from_dense(a.parent(), *y);
  return r;
}

RadicalResult jacobson_radical(const GroupAlgebra& a, const Limits& limits) {
  if (a.group().order() > limits.algebra_order_cap)
    throw CapExceeded("group order " + std::to_string(a.group().order()) + " exceeds radical cap " +
                      std::to_string(limits.algebra_order_cap));
  if (a.field().order() > limits.algebra_field_cap)
    throw CapExceeded("field order exceeds radical cap");
  RadicalResult r;
  r.ideal = radical(a.algebra());
  for (const auto& row : r.ideal.echelon.rows) r.basis.push_back(AlgebraElement::from_dense(a, row));
  r.two_sided = is_two_sided_ideal(a.algebra(), r.ideal);
  r.nilpotency_index = nilpotency_index(a.algebra(), r.ideal);
  QuotientAlgebra q(a.algebra(), r.ideal);
  r.quotient_semisimple = radical(q.algebra()).dimension() == 0;
  return r;
}

RadicalQuotient::RadicalQuotient(const GroupAlgebra& a, const RadicalResult& j)
    : parent_(&a), quotient_(a.algebra(), j.ideal) {}

Vec RadicalQuotient::project(const AlgebraElement& x) const { return quotient_.project(x.dense()); }

AlgebraElement RadicalQuotient::lift(const Vec& cls) const {
  return AlgebraElement::from_dense(*parent_, quotient_.lift(cls));
}

bool RadicalQuotient::class_is_unit(const Vec& cls) const {
  const auto& q = quotient_.algebra();
  return linalg::rank(q.field(), q.left_regular(cls), q.dim()) == q.dim();
}

AlgebraElement unit_lift(const RadicalQuotient& q, const Vec& cls) {
  if (cls.size() != q.quotient().algebra().dim()) throw ParentMismatch("residue class has wrong dimension");
  if (!q.class_is_unit(cls)) throw NotUnitModRadical("residue class is not a unit modulo the radical");
  auto u = q.lift(cls);
  if (!is_unit(u).is_unit) throw std::logic_error("preimage of a unit class is not a unit");
  return u;
}

bool freshman_power_check(const AlgebraElement& x, unsigned m) {
  const auto& A = x.parent();
  unsigned long long pm = 1;
  for (unsigned i = 0; i < m; ++i) pm *= static_cast<unsigned long long>(A.field().characteristic());
  const auto one = A.one();
  return power(one - x, pm) == one - power(x, pm);
}

SubgroupSet maximal_normal_p_subgroup(const FiniteGroup& g, std::size_t p, const Limits& limits) {
  auto acc = SubgroupSet::trivial(g);
  for (const auto& s : all_subgroups(g, limits))
    if (is_prime_power(s.size(), p) && is_normal(g, s)) acc = join(acc, s);
  if (!is_prime_power(acc.size(), p) || !is_normal(g, acc))
    throw std::logic_error("join of normal p-subgroups is not a normal p-subgroup");
  return acc;
}

Lemma64Result verify_lemma_6_4(std::shared_ptr<const FiniteGroup> g, int p, const Limits& limits) {
  const Field& f = Field::get(p);
  if (f.degree() != 1) throw HypothesisFailed("lemma 6.4 check runs over the prime field F_p");
  GroupAlgebra a(g, f, limits);
  const auto j = jacobson_radical(a, limits);
  IndexSet lhs(g->order());
  for (Index x = 0; x < g->order(); ++x)
    if (j.ideal.echelon.contains(f, (a.basis(x) - a.one()).dense())) lhs.insert(x);
  Lemma64Result r{SubgroupSet(*g, lhs), maximal_normal_p_subgroup(*g, static_cast<std::size_t>(p), limits), false};
  r.equal = r.radical_side == r.op;
  return r;
}

bool quotient_commutativity_check(std::shared_ptr<const FiniteGroup> g, int p, const Limits& limits) {
  const auto derived = commutator_subgroup(*g, SubgroupSet::whole(*g));
  if (!is_prime_power(derived.size(), static_cast<std::size_t>(p)))
    throw HypothesisFailed("commutator subgroup of order " + std::to_string(derived.size()) +
                           " is not a " + std::to_string(p) + "-group");
  const Field& f = Field::get(p);
  GroupAlgebra a(g, f, limits);
  const auto j = jacobson_radical(a, limits);
  RadicalQuotient q(a, j);
  return q.quotient().algebra().is_commutative();
}

std::size_t center_dimension_of_semisimple_quotient(std::shared_ptr<const FiniteGroup> g, int q,
                                                    const Limits& limits) {
  GroupAlgebra a(g, Field::get(q), limits);
  const auto j = jacobson_radical(a, limits);
  RadicalQuotient quot(a, j);
  return center_dimension(quot.quotient().algebra());
}

}  // namespace permuta
