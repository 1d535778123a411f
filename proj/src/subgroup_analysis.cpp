#include "permuta/subgroup_analysis.hpp"

#include "permuta/error.hpp"
#include "permuta/lattice.hpp"

namespace permuta {

using Index = FiniteGroup::Index;

bool is_normal_in(const SubgroupSet& k, const SubgroupSet& n) {
  const auto& g = k.parent();
  const auto nm = n.members().members();
  bool normal = true;
  k.members().for_each([&](std::size_t x) {
    if (!normal) return;
    for (auto a : nm)
      if (!n.contains(g.conjugate(static_cast<Index>(a), static_cast<Index>(x)))) {
        normal = false;
        return;
      }
  });
  return normal;
}

bool is_normal(const FiniteGroup& g, const SubgroupSet& n) {
  const auto nm = n.members().members();
  for (auto s : g.generators())
    for (auto a : nm)
      if (!n.contains(g.conjugate(static_cast<Index>(a), s))) return false;
  return true;
}

bool is_permutable(const FiniteGroup& g, const SubgroupSet& n, const std::vector<SubgroupSet>& cyclics) {
  for (const auto& c : cyclics) {
    if (c.subgroup_of(n)) continue;
    if (subset_product(g, n.members(), c.members()) != subset_product(g, c.members(), n.members()))
      return false;
  }
  return true;
}

bool is_permutable(const FiniteGroup& g, const SubgroupSet& n) {
  return is_permutable(g, n, cyclic_subgroups(g));
}

SubgroupSet core(const FiniteGroup& g, const SubgroupSet& h) {
  IndexSet acc = h.members();
  const auto hm = h.members().members();
  for (Index x = 0; x < g.order(); ++x) {
    IndexSet conj(g.order());
    for (auto a : hm) conj.insert(g.conjugate(static_cast<Index>(a), x));
    acc &= conj;
  }
  return SubgroupSet(g, std::move(acc));
}

SubgroupSet normal_closure_in(const SubgroupSet& k, const SubgroupSet& h) {
  const auto& g = k.parent();
  IndexSet conjugates(g.order());
  const auto hm = h.members().members();
  k.members().for_each([&](std::size_t x) {
    for (auto a : hm) conjugates.insert(g.conjugate(static_cast<Index>(a), static_cast<Index>(x)));
  });
  return generated_subgroup(g, conjugates);
}

SubgroupSet normal_closure(const FiniteGroup& g, const SubgroupSet& h) {
  return normal_closure_in(SubgroupSet::whole(g), h);
}

std::optional<std::size_t> subnormal_defect(const FiniteGroup& g, const SubgroupSet& n) {
  SubgroupSet current = SubgroupSet::whole(g);
  std::size_t steps = 0;
  while (!(current == n)) {
    auto next = normal_closure_in(current, n);
    if (next == current) return std::nullopt;
    current = std::move(next);
    ++steps;
  }
  return steps;
}

bool is_radical_over(const FiniteGroup& g, const SubgroupSet& h) {
  for (Index x = 0; x < g.order(); ++x) {
    bool found = false;
    Index y = x;
    for (std::size_t k = 1; k <= g.order(); ++k, y = g.mul(y, x))
      if (h.contains(y)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

SubgroupReport analyze_subgroup(const FiniteGroup& g, const SubgroupSet& n,
                                const std::vector<SubgroupSet>& cyclics) {
  SubgroupReport r;
  r.subgroup = n;
  r.is_normal = is_normal(g, n);
  r.is_permutable = r.is_normal || is_permutable(g, n, cyclics);
  r.defect = subnormal_defect(g, n);
  r.is_subnormal = r.defect.has_value();
  r.core = core(g, n);
  r.normal_closure = normal_closure(g, n);
  r.radical_over = is_radical_over(g, n);
  return r;
}

SubgroupReport analyze_subgroup(const FiniteGroup& g, const SubgroupSet& n) {
  return analyze_subgroup(g, n, cyclic_subgroups(g));
}

std::vector<SubgroupReport> classify_subgroups(const FiniteGroup& g,
                                               const std::vector<SubgroupSet>& subgroups) {
  const auto cyclics = cyclic_subgroups(g);
  std::vector<SubgroupReport> out(subgroups.size());
  const long long n = static_cast<long long>(subgroups.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < n; ++i)
    out[static_cast<std::size_t>(i)] = analyze_subgroup(g, subgroups[static_cast<std::size_t>(i)], cyclics);
  return out;
}

bool PermutabilityCriteria::all_agree() const {
  bool v = products_nm_subgroups;
  return products_mn_subgroups == v && nm_equals_mn == v && cyclic_commute == v &&
         left_exchange == v && right_exchange == v;
}

bool PermutabilityCriteria::all_true() const { return all_agree() && products_nm_subgroups; }

PermutabilityCriteria check_permutability_criteria(const FiniteGroup& g, const SubgroupSet& n,
                                                   const std::vector<SubgroupSet>& all) {
  PermutabilityCriteria c;
  c.products_nm_subgroups = c.products_mn_subgroups = c.nm_equals_mn = true;
  for (const auto& m : all) {
    auto nm = subset_product(g, n.members(), m.members());
    auto mn = subset_product(g, m.members(), n.members());
    if (!is_closed(g, nm)) c.products_nm_subgroups = false;
    if (!is_closed(g, mn)) c.products_mn_subgroups = false;
    if (nm != mn) c.nm_equals_mn = false;
  }

  c.cyclic_commute = true;
  for (Index x = 0; x < g.order() && c.cyclic_commute; ++x) {
    auto cx = cyclic_subgroup(g, x);
    if (subset_product(g, n.members(), cx.members()) != subset_product(g, cx.members(), n.members()))
      c.cyclic_commute = false;
  }

  // ax = x^k a'  <=>  x^-k a x in N;  xa = a' x^k  <=>  x a x^-k in N.
  // k ranges over 0 <= k < ord(x), which covers every integer exponent.
  c.left_exchange = c.right_exchange = true;
  const auto nm = n.members().members();
  for (Index x = 0; x < g.order(); ++x) {
    const auto ord = g.element_order(x);
    for (auto ai : nm) {
      const auto a = static_cast<Index>(ai);
      bool left = false, right = false;
      for (std::size_t k = 0; k < ord && !(left && right); ++k) {
        const Index xk = g.power(x, static_cast<long long>(k));
        const Index xk_inv = g.inv(xk);
        if (!left && n.contains(g.mul(g.mul(xk_inv, a), x))) left = true;
        if (!right && n.contains(g.mul(g.mul(x, a), xk_inv))) right = true;
      }
      if (!left) c.left_exchange = false;
      if (!right) c.right_exchange = false;
    }
  }
  return c;
}

PermutabilityCriteria check_permutability_criteria(const FiniteGroup& g, const SubgroupSet& n,
                                                   const Limits& limits) {
  return check_permutability_criteria(g, n, all_subgroups(g, limits));
}

GrossConclusion check_gross_conclusion(const FiniteGroup& g, const SubgroupSet& h) {
  GrossConclusion r;
  const auto closure = normal_closure(g, h);
  r.normal_in_closure = is_normal_in(closure, h);
  r.quotient_by_core_abelian = commutator_subgroup(g, h).subgroup_of(core(g, h));
  return r;
}

}  // namespace permuta
