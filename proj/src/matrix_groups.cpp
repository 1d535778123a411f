#include "permuta/matrix_groups.hpp"

#include "permuta/error.hpp"
#include "permuta/lattice.hpp"

namespace permuta {

namespace {

void check_pair(std::size_t n, std::size_t i, std::size_t j) {
  if (i < 1 || j < 1 || i > n || j > n)
    throw IndexError("matrix index out of range 1.." + std::to_string(n));
  if (i == j) throw IndexError("transvection needs i != j");
}

}  // namespace

MatrixFq transvection(const Field& f, std::size_t n, std::size_t i, std::size_t j, FqElement a) {
  check_pair(n, i, j);
  auto m = MatrixFq::identity(f, n);
  m.at(i - 1, j - 1) = a;
  return m;
}

MatrixFq dilation(const Field& f, std::size_t n, std::size_t i, FqElement a) {
  if (i < 1 || i > n) throw IndexError("matrix index out of range 1.." + std::to_string(n));
  if (a.value == 0) throw IndexError("dilation by zero is singular");
  auto m = MatrixFq::identity(f, n);
  m.at(i - 1, i - 1) = a;
  return m;
}

MatrixFq t_prime(const Field& f, std::size_t n, std::size_t i, std::size_t j, FqElement a) {
  return dilation(f, n, i, f.neg(f.one())) * transvection(f, n, i, j, a);
}

bool conjugation_identity_check(const Field& f, std::size_t n, std::size_t i, std::size_t j, FqElement a) {
  const auto d = dilation(f, n, i, f.neg(f.one()));
  return d * transvection(f, n, i, j, a) * d == transvection(f, n, i, j, f.neg(a));
}

std::vector<MatrixFq> all_transvections(const Field& f, std::size_t n) {
  std::vector<MatrixFq> out;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      if (i == j) continue;
      for (auto a : f.nonzero_elements()) out.push_back(transvection(f, n, i, j, a));
    }
  return out;
}

FiniteGroup generate_SL(std::size_t n, int q, const Limits& limits) {
  const Field& f = Field::get(q);
  std::vector<Element> gens;
  if (n == 1) {
    gens.emplace_back(MatrixFq::identity(f, 1));
  } else {
    for (auto& t : all_transvections(f, n)) gens.emplace_back(std::move(t));
  }
  auto g = FiniteGroup::generate(gens, limits);
  g.set_label("SL(" + std::to_string(n) + "," + std::to_string(q) + ")");
  return g;
}

FiniteGroup generate_GL(std::size_t n, int q, const Limits& limits) {
  const Field& f = Field::get(q);
  std::vector<Element> gens;
  if (n > 1)
    for (auto& t : all_transvections(f, n)) gens.emplace_back(std::move(t));
  gens.emplace_back(dilation(f, n, 1, f.primitive()));
  auto g = FiniteGroup::generate(gens, limits);
  g.set_label("GL(" + std::to_string(n) + "," + std::to_string(q) + ")");
  return g;
}

IndexSet determinant_one(const FiniteGroup& g) {
  IndexSet s(g.order());
  for (FiniteGroup::Index x = 0; x < g.order(); ++x) {
    const auto* m = std::get_if<MatrixFq>(&g.element(x));
    if (!m) throw InvalidGroup("determinant of a non-matrix element");
    if (m->determinant().value == 1) s.insert(x);
  }
  return s;
}

PermutableNormalCheck check_all_permutable_subgroups_are_normal(std::shared_ptr<const FiniteGroup> g,
                                                                const Limits& limits) {
  PermutableNormalCheck out;
  out.group = std::move(g);
  const auto subgroups = all_subgroups(*out.group, limits);
  out.evidence = classify_subgroups(*out.group, subgroups);
  for (std::size_t i = 0; i < out.evidence.size(); ++i)
    if (out.evidence[i].is_permutable && !out.evidence[i].is_normal) out.permutable_not_normal.push_back(i);
  out.verdict = out.permutable_not_normal.empty();
  return out;
}

Lemma31Report verify_lemma_3_1(const Limits& limits) {
  Lemma31Report r;
  r.verdict = true;
  for (int q : {2, 3}) {
    auto g = std::make_shared<const FiniteGroup>(generate_GL(2, q, limits));
    r.groups.push_back(check_all_permutable_subgroups_are_normal(g, limits));
    r.verdict = r.verdict && r.groups.back().verdict;
  }
  return r;
}

Theorem32Report check_theorem_3_2(std::size_t n, int q, const Limits& limits) {
  if (!(n > 2 || (n == 2 && q >= 4)))
    throw HypothesisFailed("GL(" + std::to_string(n) + "," + std::to_string(q) +
                           ") is outside n > 2 or (n = 2, q >= 4); use `verify lemma3.1`");
  Theorem32Report r;
  r.n = n;
  r.q = q;
  auto g = std::make_shared<const FiniteGroup>(generate_GL(n, q, limits));
  r.scan = check_all_permutable_subgroups_are_normal(g, limits);
  const auto sl = determinant_one(*g);
  r.sl_order = sl.size();
  const auto z = center(*g);
  r.noncentral_normal_contain_sl = true;
  for (const auto& rep : r.scan.evidence) {
    if (!rep.is_normal || rep.subgroup.subgroup_of(z)) continue;
    ++r.noncentral_normal;
    if (!sl.subset_of(rep.subgroup.members())) r.noncentral_normal_contain_sl = false;
  }
  r.verdict = r.scan.verdict && r.noncentral_normal_contain_sl;
  return r;
}

}  // namespace permuta
