#include "oracles.hpp"

#include <algorithm>
#include <map>

namespace oracle {

using permuta::FiniteGroup;

Set closure(const FiniteGroup& g, const std::vector<Index>& gens) {
  Set in(g.order(), false);
  std::vector<Index> list{g.identity()};
  in[g.identity()] = true;
  for (std::size_t i = 0; i < list.size(); ++i)
    for (auto s : gens) {
      const Index y = g.mul(list[i], s);
      if (!in[y]) {
        in[y] = true;
        list.push_back(y);
      }
    }
  return in;
}

std::vector<Index> members(const Set& s) {
  std::vector<Index> out;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i]) out.push_back(static_cast<Index>(i));
  return out;
}

Set as_set(std::size_t order, const std::vector<Index>& m) {
  Set s(order, false);
  for (auto x : m) s[x] = true;
  return s;
}

std::set<std::vector<Index>> subgroups_by_subsets(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::set<std::vector<Index>> out;
  std::vector<Index> others;
  for (Index x = 0; x < n; ++x)
    if (x != g.identity()) others.push_back(x);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << others.size()); ++mask) {
    Set s(n, false);
    s[g.identity()] = true;
    for (std::size_t b = 0; b < others.size(); ++b)
      if (mask >> b & 1) s[others[b]] = true;
    bool closed = true;
    for (Index a = 0; a < n && closed; ++a)
      for (Index b = 0; b < n && closed; ++b)
        if (s[a] && s[b] && !s[g.mul(a, b)]) closed = false;
    if (closed) out.insert(members(s));
  }
  return out;
}

std::set<std::vector<Index>> subgroups_by_extension(const FiniteGroup& g) {
  std::set<std::vector<Index>> out{{g.identity()}};
  std::vector<std::vector<Index>> queue{{g.identity()}};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const auto h = queue[i];
    const Set in = as_set(g.order(), h);
    for (Index x = 0; x < g.order(); ++x) {
      if (in[x]) continue;
      auto gens = h;
      gens.push_back(x);
      auto k = members(closure(g, gens));
      if (out.insert(k).second) queue.push_back(std::move(k));
    }
  }
  return out;
}

bool is_normal(const FiniteGroup& g, const Set& h) {
  for (Index x = 0; x < g.order(); ++x)
    if (h[x])
      for (Index y = 0; y < g.order(); ++y)
        if (!h[g.mul(g.mul(g.inv(y), x), y)]) return false;
  return true;
}

namespace {

Set product(const FiniteGroup& g, const Set& a, const Set& b) {
  Set s(g.order(), false);
  for (Index x = 0; x < g.order(); ++x)
    if (a[x])
      for (Index y = 0; y < g.order(); ++y)
        if (b[y]) s[g.mul(x, y)] = true;
  return s;
}

bool normal_in(const FiniteGroup& g, const Set& k, const Set& h) {
  for (Index x = 0; x < g.order(); ++x)
    if (k[x])
      for (Index y = 0; y < g.order(); ++y)
        if (h[y] && !k[g.mul(g.mul(g.inv(y), x), y)]) return false;
  return true;
}

}  // namespace

bool permutes_with_all(const FiniteGroup& g, const Set& h, const std::set<std::vector<Index>>& all) {
  for (const auto& km : all) {
    const Set k = as_set(g.order(), km);
    if (product(g, h, k) != product(g, k, h)) return false;
  }
  return true;
}

Set coset_action_kernel(const FiniteGroup& g, const Set& h) {
  const std::size_t n = g.order();
  std::map<std::vector<Index>, std::size_t> coset_id;
  std::vector<std::size_t> coset_of(n);
  for (Index x = 0; x < n; ++x) {
    Set c(n, false);
    for (Index y = 0; y < n; ++y)
      if (h[y]) c[g.mul(y, x)] = true;
    coset_of[x] = coset_id.emplace(members(c), coset_id.size()).first->second;
  }
  Set kernel(n, false);
  for (Index x = 0; x < n; ++x) {
    bool fixes = true;
    for (Index r = 0; r < n && fixes; ++r) fixes = coset_of[g.mul(r, x)] == coset_of[r];
    kernel[x] = fixes;
  }
  return kernel;
}

std::optional<std::size_t> subnormal_defect_by_chains(const FiniteGroup& g, const Set& n,
                                                      const std::set<std::vector<Index>>& all) {
  std::vector<Set> subs;
  for (const auto& m : all) {
    Set s = as_set(g.order(), m);
    bool contains_n = true;
    for (Index x = 0; x < g.order(); ++x)
      if (n[x] && !s[x]) contains_n = false;
    if (contains_n) subs.push_back(std::move(s));
  }
  std::vector<Set> layer{Set(g.order(), true)};
  std::set<std::vector<Index>> visited{members(layer[0])};
  for (std::size_t depth = 0; !layer.empty(); ++depth) {
    for (const auto& s : layer)
      if (s == n) return depth;
    std::vector<Set> next;
    for (const auto& h : layer)
      for (const auto& k : subs)
        if (normal_in(g, k, h) && visited.insert(members(k)).second) next.push_back(k);
    layer = std::move(next);
  }
  return std::nullopt;
}

// ---- group algebra ----

Coeffs convolve(const FiniteGroup& g, int p, const Coeffs& a, const Coeffs& b) {
  Coeffs r(g.order(), 0);
  for (Index x = 0; x < g.order(); ++x)
    if (a[x])
      for (Index y = 0; y < g.order(); ++y)
        if (b[y]) r[g.mul(x, y)] = (r[g.mul(x, y)] + a[x] * b[y]) % p;
  return r;
}

namespace {

bool zero(const Coeffs& c) {
  return std::all_of(c.begin(), c.end(), [](int v) { return v == 0; });
}

int inv_mod(int a, int p) {
  for (int b = 1; b < p; ++b)
    if (a * b % p == 1) return b;
  return 0;
}

// Row echelon basis of the span, mod p.
std::vector<Coeffs> span(std::vector<Coeffs> rows, int p) {
  std::vector<Coeffs> basis;
  if (rows.empty()) return basis;
  const std::size_t n = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    const int iv = inv_mod(rows[r][c], p);
    for (auto& v : rows[r]) v = v * iv % p;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == r || rows[k][c] == 0) continue;
      const int f = rows[k][c];
      for (std::size_t j = 0; j < n; ++j) rows[k][j] = ((rows[k][j] - f * rows[r][j]) % p + p) % p;
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

}  // namespace

bool is_nilpotent(const FiniteGroup& g, int p, const Coeffs& x) {
  Coeffs y = x;
  for (std::size_t k = 1; k < g.order(); k *= 2) y = convolve(g, p, y, y);  // x^(2^m) >= x^n
  return zero(y);
}

bool in_radical(const FiniteGroup& g, int p, const Coeffs& x) {
  const std::size_t n = g.order();
  std::vector<Coeffs> gen;
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      Coeffs v(n, 0);
      for (Index s = 0; s < n; ++s)
        if (x[s]) v[g.mul(g.mul(a, s), b)] = x[s];
      gen.push_back(std::move(v));
    }
  const auto ideal = span(std::move(gen), p);
  auto power = ideal;
  while (!power.empty()) {
    std::vector<Coeffs> next;
    for (const auto& u : power)
      for (const auto& v : ideal) next.push_back(convolve(g, p, u, v));
    auto reduced = span(std::move(next), p);
    if (reduced.size() == power.size()) return false;
    power = std::move(reduced);
  }
  return true;
}

Coeffs decode(std::uint64_t code, std::size_t n, int p) {
  Coeffs c(n);
  for (std::size_t i = 0; i < n; ++i) {
    c[i] = static_cast<int>(code % p);
    code /= p;
  }
  return c;
}

std::uint64_t encode(const Coeffs& c, int p) {
  std::uint64_t code = 0;
  for (std::size_t i = c.size(); i-- > 0;) code = code * p + c[i];
  return code;
}

namespace {

std::uint64_t space_size(std::size_t n, int p) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= p;
  return total;
}

}  // namespace

std::vector<std::uint64_t> radical_elements(const FiniteGroup& g, int p) {
  const std::uint64_t total = space_size(g.order(), p);
  std::vector<std::uint64_t> found;
#pragma omp parallel
  {
    std::vector<std::uint64_t> local;
#pragma omp for schedule(dynamic, 256) nowait
    for (std::int64_t code = 0; code < static_cast<std::int64_t>(total); ++code) {
      const Coeffs x = decode(static_cast<std::uint64_t>(code), g.order(), p);
      if (is_nilpotent(g, p, x) && in_radical(g, p, x)) local.push_back(static_cast<std::uint64_t>(code));
    }
#pragma omp critical
    found.insert(found.end(), local.begin(), local.end());
  }
  std::sort(found.begin(), found.end());
  return found;
}

std::vector<std::uint64_t> radical_elements_serial(const FiniteGroup& g, int p) {
  const std::uint64_t total = space_size(g.order(), p);
  std::vector<std::uint64_t> found;
  for (std::uint64_t code = 0; code < total; ++code) {
    const Coeffs x = decode(code, g.order(), p);
    if (is_nilpotent(g, p, x) && in_radical(g, p, x)) found.push_back(code);
  }
  return found;
}

std::vector<Coeffs> inverses_by_search(const FiniteGroup& g, int p, const Coeffs& a) {
  const std::uint64_t total = space_size(g.order(), p);
  Coeffs one(g.order(), 0);
  one[g.identity()] = 1;
  std::vector<Coeffs> out;
  for (std::uint64_t code = 0; code < total; ++code) {
    Coeffs b = decode(code, g.order(), p);
    if (convolve(g, p, a, b) == one) out.push_back(std::move(b));
  }
  return out;
}

}  // namespace oracle
