#include "permuta/finite_group.hpp"

#include <algorithm>
#include <random>

#include "permuta/error.hpp"

namespace permuta {

namespace {

using Index = FiniteGroup::Index;

Element multiply(const Element& a, const Element& b) {
  if (auto pa = std::get_if<Permutation>(&a)) return *pa * std::get<Permutation>(b);
  if (auto ma = std::get_if<MatrixFq>(&a)) return *ma * std::get<MatrixFq>(b);
  throw InvalidGroup("table elements cannot be multiplied outside their table");
}

Element identity_like(const Element& e) {
  if (auto p = std::get_if<Permutation>(&e)) return Permutation::identity(p->degree());
  if (auto m = std::get_if<MatrixFq>(&e)) return MatrixFq::identity(m->field(), m->dim());
  throw InvalidGroup("table elements cannot seed a closure");
}

}  // namespace

std::string FiniteGroup::key_of(const Element& e) {
  std::string key;
  if (auto p = std::get_if<Permutation>(&e)) {
    key.push_back('p');
    for (auto v : p->images()) {
      key.push_back(static_cast<char>(v & 0xff));
      key.push_back(static_cast<char>(v >> 8));
    }
  } else if (auto m = std::get_if<MatrixFq>(&e)) {
    key.push_back('m');
    key.push_back(static_cast<char>(m->field().order()));
    for (auto v : m->entries()) key.push_back(static_cast<char>(v.value));
  } else {
    key = "t" + std::to_string(std::get<TableElement>(e).index);
  }
  return key;
}

FiniteGroup FiniteGroup::generate(const std::vector<Element>& generators, const Limits& limits) {
  if (generators.empty()) throw InvalidGroup("generate_group needs at least one generator");
  const auto kind = generators.front().index();
  std::vector<Element> gens = generators;
  std::size_t degree = 0;
  for (const auto& g : gens) {
    if (g.index() != kind) throw MixedRepresentation("generators mix permutations and matrices");
    if (auto p = std::get_if<Permutation>(&g)) degree = std::max(degree, p->degree());
    if (auto m = std::get_if<MatrixFq>(&g)) {
      const auto& first = std::get<MatrixFq>(gens.front());
      if (&m->field() != &first.field() || m->dim() != first.dim())
        throw MixedRepresentation("matrix generators differ in field or dimension");
    }
  }
  if (std::holds_alternative<TableElement>(gens.front()))
    throw MixedRepresentation("table elements cannot be closed; use from_table");
  for (auto& g : gens)
    if (auto p = std::get_if<Permutation>(&g)) g = p->extended(degree);

  FiniteGroup G;
  const std::size_t ngens = gens.size();
  auto add = [&](Element e) -> Index {
    auto key = key_of(e);
    auto [it, inserted] = G.index_.emplace(std::move(key), static_cast<Index>(G.elements_.size()));
    if (inserted) {
      if (G.elements_.size() >= limits.closure_cap)
        throw ClosureCapExceeded("group closure exceeded " + std::to_string(limits.closure_cap) +
                                 " elements");
      G.elements_.push_back(std::move(e));
    }
    return it->second;
  };

  // right[i * ngens + k] = elements[i] * gens[k]; parent links give each
  // element as (earlier element) * (generator).
  std::vector<Index> right;
  std::vector<Index> parent{0};
  std::vector<std::uint32_t> via{0};
  G.identity_ = add(identity_like(gens.front()));
  for (std::size_t i = 0; i < G.elements_.size(); ++i) {
    for (std::size_t k = 0; k < ngens; ++k) {
      const auto before = G.elements_.size();
      Index y = add(multiply(G.elements_[i], gens[k]));
      if (G.elements_.size() > before) {
        parent.push_back(static_cast<Index>(i));
        via.push_back(static_cast<std::uint32_t>(k));
      }
      right.push_back(y);
    }
  }
  const std::size_t n = G.elements_.size();
  G.order_ = n;
  for (const auto& g : gens) G.generators_.push_back(G.index_.at(key_of(g)));

  // Row i: table[i][j] = table[i][parent(j)] * gen(via(j)); BFS order makes
  // parent(j) < j.
  G.table_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    Index* row = &G.table_[i * n];
    row[0] = static_cast<Index>(i);
    for (std::size_t j = 1; j < n; ++j) row[j] = right[static_cast<std::size_t>(row[parent[j]]) * ngens + via[j]];
  }
  G.inv_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (G.table_[i * n + j] == G.identity_) {
        G.inv_[i] = static_cast<Index>(j);
        break;
      }
  return G;
}

FiniteGroup FiniteGroup::from_table(std::size_t order, std::vector<Index> table) {
  if (order == 0) throw InvalidGroup("group order must be positive");
  if (table.size() != order * order) throw InvalidGroup("multiplication table has wrong size");
  for (auto v : table)
    if (v >= order) throw InvalidGroup("multiplication table entry out of range");
  FiniteGroup G;
  G.order_ = order;
  G.table_ = std::move(table);
  bool found = false;
  for (std::size_t e = 0; e < order && !found; ++e) {
    bool ok = true;
    for (std::size_t j = 0; j < order && ok; ++j)
      ok = G.table_[e * order + j] == j && G.table_[j * order + e] == j;
    if (ok) {
      G.identity_ = static_cast<Index>(e);
      found = true;
    }
  }
  if (!found) throw InvalidGroup("multiplication table has no identity");
  G.inv_.assign(order, 0);
  for (std::size_t i = 0; i < order; ++i) {
    bool has = false;
    for (std::size_t j = 0; j < order; ++j)
      if (G.table_[i * order + j] == G.identity_) {
        G.inv_[i] = static_cast<Index>(j);
        has = true;
        break;
      }
    if (!has) throw InvalidGroup("element " + std::to_string(i) + " has no inverse");
  }
  for (std::size_t i = 0; i < order; ++i) {
    G.elements_.push_back(TableElement{i});
    G.index_.emplace(key_of(G.elements_.back()), static_cast<Index>(i));
  }
  G.validate();
  // Greedy generating set in index order.
  IndexSet span = IndexSet::of(order, std::vector<Index>{G.identity_});
  for (std::size_t i = 0; i < order; ++i) {
    if (span.contains(i)) continue;
    G.generators_.push_back(static_cast<Index>(i));
    span = generated_subgroup(G, G.generators_).members();
  }
  if (G.generators_.empty()) G.generators_.push_back(G.identity_);
  return G;
}

Index FiniteGroup::power(Index x, long long e) const {
  if (e < 0) {
    x = inv(x);
    e = -e;
  }
  Index r = identity_;
  while (e) {
    if (e & 1) r = mul(r, x);
    x = mul(x, x);
    e >>= 1;
  }
  return r;
}

std::size_t FiniteGroup::element_order(Index x) const {
  std::size_t k = 1;
  for (Index y = x; y != identity_; y = mul(y, x)) ++k;
  return k;
}

std::optional<Index> FiniteGroup::index_of(const Element& e) const {
  Element probe = e;
  if (auto p = std::get_if<Permutation>(&e); p && !elements_.empty()) {
    if (auto q = std::get_if<Permutation>(&elements_.front())) {
      if (p->degree() > q->degree()) {
        for (std::size_t x = q->degree(); x < p->degree(); ++x)
          if ((*p)(x) != x) return std::nullopt;
        std::vector<std::uint16_t> img(p->images().begin(), p->images().begin() + q->degree());
        probe = Permutation(std::move(img));
      } else {
        probe = p->extended(q->degree());
      }
    }
  }
  auto it = index_.find(key_of(probe));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string FiniteGroup::element_label(Index i) const {
  const auto& e = elements_[i];
  if (auto p = std::get_if<Permutation>(&e)) return p->to_cycle_string();
  if (auto m = std::get_if<MatrixFq>(&e)) return m->to_string();
  return "g" + std::to_string(std::get<TableElement>(e).index);
}

bool FiniteGroup::is_abelian() const {
  for (auto a : generators_)
    for (auto b : generators_)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

void FiniteGroup::validate(std::uint64_t seed) const {
  const std::size_t n = order_;
  std::vector<char> seen(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      auto v = table_[i * n + j];
      if (seen[v]) throw InvalidGroup("multiplication table row is not a permutation");
      seen[v] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      auto v = table_[j * n + i];
      if (seen[v]) throw InvalidGroup("multiplication table column is not a permutation");
      seen[v] = 1;
    }
    if (mul(static_cast<Index>(i), inv_[i]) != identity_)
      throw InvalidGroup("inverse table is inconsistent");
  }
  auto check = [&](Index a, Index b, Index c) {
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw InvalidGroup("multiplication is not associative");
  };
  if (n <= 64) {
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b)
        for (Index c = 0; c < n; ++c) check(a, b, c);
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Index> pick(0, static_cast<Index>(n - 1));
    for (int t = 0; t < 20000; ++t) check(pick(rng), pick(rng), pick(rng));
  }
}

SubgroupSet::SubgroupSet(const FiniteGroup& parent, IndexSet members)
    : parent_(&parent), members_(std::move(members)) {
  if (members_.universe() != parent.order()) throw InvalidGroup("subgroup universe mismatch");
  if (!members_.contains(parent.identity())) throw InvalidGroup("subgroup lacks the identity");
  if (!is_closed(parent, members_)) throw InvalidGroup("subset is not closed under product");
  members_.for_each([&](std::size_t i) {
    if (!members_.contains(parent.inv(static_cast<FiniteGroup::Index>(i))))
      throw InvalidGroup("subset is not closed under inverse");
  });
  if (parent.order() % members_.size() != 0) throw InvalidGroup("subgroup order does not divide group order");
}

SubgroupSet SubgroupSet::trivial(const FiniteGroup& g) {
  return generated_subgroup(g, std::vector<FiniteGroup::Index>{g.identity()});
}

SubgroupSet SubgroupSet::whole(const FiniteGroup& g) {
  return SubgroupSet(g, IndexSet::full(g.order()), Unchecked{});
}

IndexSet subset_product(const FiniteGroup& g, const IndexSet& a, const IndexSet& b) {
  IndexSet out(g.order());
  const auto bm = b.members();
  a.for_each([&](std::size_t x) {
    for (auto y : bm) out.insert(g.mul(static_cast<Index>(x), static_cast<Index>(y)));
  });
  return out;
}

bool is_closed(const FiniteGroup& g, const IndexSet& s) {
  const auto m = s.members();
  for (auto x : m)
    for (auto y : m)
      if (!s.contains(g.mul(static_cast<Index>(x), static_cast<Index>(y)))) return false;
  return !m.empty();
}

SubgroupSet generated_subgroup(const FiniteGroup& g, const std::vector<Index>& gens) {
  IndexSet members(g.order());
  std::vector<Index> list{g.identity()};
  members.insert(g.identity());
  for (std::size_t i = 0; i < list.size(); ++i)
    for (auto s : gens) {
      Index y = g.mul(list[i], s);
      if (!members.contains(y)) {
        members.insert(y);
        list.push_back(y);
      }
    }
  return SubgroupSet(g, std::move(members), SubgroupSet::Unchecked{});
}

SubgroupSet generated_subgroup(const FiniteGroup& g, const IndexSet& gens) {
  std::vector<Index> v;
  gens.for_each([&](std::size_t i) { v.push_back(static_cast<Index>(i)); });
  return generated_subgroup(g, v);
}

SubgroupSet cyclic_subgroup(const FiniteGroup& g, Index x) {
  return generated_subgroup(g, std::vector<Index>{x});
}

SubgroupSet join(const SubgroupSet& h, const SubgroupSet& k) {
  if (&h.parent() != &k.parent()) throw ParentMismatch("join of subgroups of different groups");
  return generated_subgroup(h.parent(), h.members() | k.members());
}

SubgroupSet intersect(const SubgroupSet& h, const SubgroupSet& k) {
  if (&h.parent() != &k.parent()) throw ParentMismatch("intersection of subgroups of different groups");
  return SubgroupSet(h.parent(), h.members() & k.members());
}

SubgroupSet center(const FiniteGroup& g) {
  IndexSet z(g.order());
  for (Index x = 0; x < g.order(); ++x) {
    bool central = true;
    for (auto s : g.generators())
      if (g.mul(x, s) != g.mul(s, x)) {
        central = false;
        break;
      }
    if (central) z.insert(x);
  }
  return SubgroupSet(g, std::move(z));
}

SubgroupSet commutator_subgroup(const FiniteGroup& g, const SubgroupSet& h) {
  IndexSet comms(g.order());
  const auto m = h.members().members();
  for (auto a : m)
    for (auto b : m) {
      auto ia = static_cast<Index>(a), ib = static_cast<Index>(b);
      comms.insert(g.mul(g.mul(ia, ib), g.mul(g.inv(ia), g.inv(ib))));
    }
  return generated_subgroup(g, comms);
}

bool is_prime_power(std::size_t n, std::size_t p) {
  if (n == 0) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace permuta
