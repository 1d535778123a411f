#include "permuta/group_catalog.hpp"

#include <array>
#include <cctype>
#include <fstream>
#include <sstream>

#include "permuta/error.hpp"
#include "permuta/matrix_groups.hpp"

namespace permuta {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<long> parse_args(std::string_view spec, std::string_view head) {
  std::string s = trim(spec);
  if (s.size() < head.size() + 2 || s.compare(0, head.size(), head) != 0 || s[head.size()] != '(' ||
      s.back() != ')')
    throw ParseError("malformed group spec: " + s);
  std::string inner = s.substr(head.size() + 1, s.size() - head.size() - 2);
  std::vector<long> out;
  std::stringstream ss(inner);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok = trim(tok);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("expected positive integer in group spec: " + s);
    out.push_back(std::stol(tok));
  }
  return out;
}

FiniteGroup labelled(FiniteGroup g, std::string label) {
  g.set_label(std::move(label));
  return g;
}

}  // namespace

FiniteGroup symmetric_group(std::size_t n, const Limits& limits) {
  if (n == 0) throw ParseError("S(n) needs n >= 1");
  std::vector<Element> gens;
  if (n == 1) {
    gens.emplace_back(Permutation::identity(1));
  } else {
    gens.emplace_back(Permutation::from_cycles({{1, 2}}, n));
    if (n > 2) {
      std::vector<int> cycle(n);
      for (std::size_t i = 0; i < n; ++i) cycle[i] = static_cast<int>(i + 1);
      gens.emplace_back(Permutation::from_cycles({cycle}, n));
    }
  }
  return labelled(FiniteGroup::generate(gens, limits), "S(" + std::to_string(n) + ")");
}

FiniteGroup cyclic_group(std::size_t n, const Limits& limits) {
  if (n == 0) throw ParseError("C(n) needs n >= 1");
  std::vector<Element> gens;
  if (n == 1) {
    gens.emplace_back(Permutation::identity(1));
  } else {
    std::vector<int> cycle(n);
    for (std::size_t i = 0; i < n; ++i) cycle[i] = static_cast<int>(i + 1);
    gens.emplace_back(Permutation::from_cycles({cycle}, n));
  }
  return labelled(FiniteGroup::generate(gens, limits), "C(" + std::to_string(n) + ")");
}

FiniteGroup dihedral_group(std::size_t n, const Limits& limits) {
  if (n == 0) throw ParseError("D(n) needs n >= 1");
  std::vector<Element> gens;
  if (n == 1) {
    gens.emplace_back(Permutation::from_cycles({{1, 2}}));
  } else if (n == 2) {
    gens.emplace_back(Permutation::from_cycles({{1, 2}}));
    gens.emplace_back(Permutation::from_cycles({{3, 4}}));
  } else {
    std::vector<int> rotation(n);
    for (std::size_t i = 0; i < n; ++i) rotation[i] = static_cast<int>(i + 1);
    std::vector<std::vector<int>> reflection;
    for (std::size_t i = 1; i <= n / 2; ++i)
      reflection.push_back({static_cast<int>(i), static_cast<int>(n + 1 - i)});
    gens.emplace_back(Permutation::from_cycles({rotation}, n));
    gens.emplace_back(Permutation::from_cycles(reflection, n));
  }
  return labelled(FiniteGroup::generate(gens, limits), "D(" + std::to_string(n) + ")");
}

FiniteGroup quaternion_group() {
  // Units 1, i, j, k with signs; element index = 4 * sign + unit.
  // unit_mul[a][b] = {sign, unit} of a*b.
  static constexpr std::array<std::array<std::array<int, 2>, 4>, 4> unit_mul{{
      {{{0, 0}, {0, 1}, {0, 2}, {0, 3}}},
      {{{0, 1}, {1, 0}, {0, 3}, {1, 2}}},
      {{{0, 2}, {1, 3}, {1, 0}, {0, 1}}},
      {{{0, 3}, {0, 2}, {1, 1}, {1, 0}}},
  }};
  auto mul = [](int x, int y) {
    auto [s, u] = unit_mul[x % 4][y % 4];
    return 4 * ((x / 4 + y / 4 + s) % 2) + u;
  };
  auto right_regular = [&](int g) {
    std::vector<std::uint16_t> img(8);
    for (int x = 0; x < 8; ++x) img[x] = static_cast<std::uint16_t>(mul(x, g));
    return Permutation(std::move(img));
  };
  return labelled(FiniteGroup::generate({right_regular(1), right_regular(2)}), "Q8");
}

FiniteGroup modular_group_16() {
  // a: x -> x + 1, b: x -> 5x on Z/8; b a b^-1 = a^5.
  std::vector<std::uint16_t> a(8), b(8);
  for (int x = 0; x < 8; ++x) {
    a[x] = static_cast<std::uint16_t>((x + 1) % 8);
    b[x] = static_cast<std::uint16_t>((5 * x) % 8);
  }
  return labelled(FiniteGroup::generate({Permutation(a), Permutation(b)}), "M16");
}

FiniteGroup cayley_group_from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long order = 0;
  if (!(in >> order) || order <= 0) throw ParseError("cayley table: missing or invalid order");
  std::vector<FiniteGroup::Index> table;
  table.reserve(static_cast<std::size_t>(order * order));
  long long v;
  while (in >> v) {
    if (v < 0 || v >= order) throw ParseError("cayley table: entry out of range");
    table.push_back(static_cast<FiniteGroup::Index>(v));
  }
  if (!in.eof()) throw ParseError("cayley table: non-integer token");
  if (table.size() != static_cast<std::size_t>(order * order))
    throw ParseError("cayley table: expected " + std::to_string(order * order) + " entries, got " +
                     std::to_string(table.size()));
  return FiniteGroup::from_table(static_cast<std::size_t>(order), std::move(table));
}

FiniteGroup cayley_group_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open cayley table file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return cayley_group_from_text(ss.str());
}

std::shared_ptr<const FiniteGroup> parse_group(std::string_view spec_in, const Limits& limits) {
  const std::string spec = trim(spec_in);
  auto make = [&](FiniteGroup g) {
    g.set_label(spec);
    return std::make_shared<const FiniteGroup>(std::move(g));
  };
  if (spec == "Q8") return make(quaternion_group());
  if (spec == "M16") return make(modular_group_16());
  if (spec.rfind("cayley:", 0) == 0) return make(cayley_group_from_file(spec.substr(7)));
  if (spec.rfind("perm[", 0) == 0) {
    if (spec.back() != ']') throw ParseError("perm[...] spec must end with ']'");
    const std::string body = spec.substr(5, spec.size() - 6);
    std::vector<Element> gens;
    int depth = 0;
    std::string cur;
    for (char c : body) {
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (depth < 0) throw ParseError("unbalanced parentheses in " + spec);
      if (c == ',' && depth == 0) {
        gens.emplace_back(Permutation::parse(cur));
        cur.clear();
      } else {
        cur.push_back(c);
      }
    }
    if (depth != 0) throw ParseError("unbalanced parentheses in " + spec);
    if (!trim(cur).empty()) gens.emplace_back(Permutation::parse(cur));
    if (gens.empty()) throw ParseError("perm[...] needs at least one generator");
    return make(FiniteGroup::generate(gens, limits));
  }
  if (spec.rfind("GL(", 0) == 0 || spec.rfind("SL(", 0) == 0) {
    auto args = parse_args(spec, spec.substr(0, 2));
    if (args.size() != 2 || args[0] < 1) throw ParseError("expected GL(n,q) / SL(n,q): " + spec);
    auto n = static_cast<std::size_t>(args[0]);
    int q = static_cast<int>(args[1]);
    return make(spec[0] == 'G' ? generate_GL(n, q, limits) : generate_SL(n, q, limits));
  }
  if (!spec.empty() && (spec[0] == 'S' || spec[0] == 'C' || spec[0] == 'D')) {
    auto args = parse_args(spec, spec.substr(0, 1));
    if (args.size() != 1) throw ParseError("expected one argument: " + spec);
    auto n = static_cast<std::size_t>(args[0]);
    switch (spec[0]) {
      case 'S': return make(symmetric_group(n, limits));
      case 'C': return make(cyclic_group(n, limits));
      default: return make(dihedral_group(n, limits));
    }
  }
  throw ParseError("unknown group spec: " + spec);
}

std::vector<std::string> small_group_corpus() {
  std::vector<std::string> out;
  for (int n = 1; n <= 16; ++n) out.push_back("C(" + std::to_string(n) + ")");
  for (int n = 1; n <= 3; ++n) out.push_back("S(" + std::to_string(n) + ")");
  for (int n = 1; n <= 8; ++n) out.push_back("D(" + std::to_string(n) + ")");
  out.push_back("Q8");
  out.push_back("M16");
  out.push_back("GL(2,2)");
  out.push_back("SL(2,2)");
  out.push_back("SL(1,2)");
  out.push_back("GL(1,3)");
  out.push_back("GL(1,4)");
  out.push_back("GL(1,5)");
  out.push_back("GL(1,7)");
  out.push_back("GL(1,8)");
  out.push_back("GL(1,9)");
  out.push_back("perm[(1 2),(3 4),(5 6)]");
  out.push_back("perm[(1 2 3 4),(5 6)]");
  out.push_back("perm[(1 2 3 4),(5 6 7 8)]");
  out.push_back("perm[(1 2),(3 4),(5 6),(7 8)]");
  out.push_back("perm[(1 2 3),(4 5 6)]");
  out.push_back("perm[(1 2 3),(1 2),(4 5)]");
  out.push_back("perm[(1 2 3),(2 3 4)]");
  out.push_back("perm[(1 2 3 4),(1 3),(5 6)]");
  return out;
}

}  // namespace permuta
