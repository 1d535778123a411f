#include "permuta/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "permuta/config.hpp"
#include "permuta/error.hpp"
#include "permuta/field.hpp"
#include "permuta/group_algebra.hpp"
#include "permuta/group_catalog.hpp"
#include "permuta/lattice.hpp"
#include "permuta/magnus.hpp"
#include "permuta/matrix_groups.hpp"
#include "permuta/ordered_group_algebra.hpp"
#include "permuta/subgroup_analysis.hpp"
#include "permuta/suites.hpp"

namespace permuta {

using json = nlohmann::ordered_json;
using Index = FiniteGroup::Index;

nlohmann::ordered_json to_json(const VerificationReport& r) {
  json j;
  j["schema"] = r.schema;
  j["command"] = r.command;
  j["config"] = r.config;
  j["verdict"] = r.verdict;
  j["informational"] = r.informational;
  j["summary"] = r.summary;
  j["items"] = json::array();
  for (const auto& it : r.items) j["items"].push_back({{"name", it.name}, {"verdict", it.verdict}, {"detail", it.detail}});
  if (r.wall_time) j["wall_time"] = *r.wall_time;
  return j;
}

VerificationReport report_from_json(const nlohmann::ordered_json& j) {
  VerificationReport r;
  try {
    r.schema = j.at("schema").get<int>();
    if (r.schema != 1) throw ParseError("unsupported report schema " + std::to_string(r.schema));
    r.command = j.at("command").get<std::string>();
    r.config = j.at("config");
    r.verdict = j.at("verdict").get<bool>();
    r.informational = j.at("informational").get<bool>();
    r.summary = j.at("summary").get<std::string>();
    for (const auto& it : j.at("items"))
      r.items.push_back({it.at("name").get<std::string>(), it.at("verdict").get<bool>(), it.at("detail")});
    if (j.contains("wall_time")) r.wall_time = j.at("wall_time").get<double>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
  return r;
}

namespace {

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

}  // namespace

std::string render_text(const VerificationReport& r) {
  std::ostringstream os;
  os << "permuta " << r.command << '\n';
  if (!r.informational) os << "verdict: " << (r.verdict ? "true" : "false") << '\n';
  if (!r.summary.empty()) os << "summary: " << r.summary << '\n';
  for (const auto& it : r.items) {
    os << (r.informational ? "  " : (it.verdict ? "  [ok]   " : "  [FAIL] ")) << it.name;
    bool first = true;
    for (const auto& [k, v] : it.detail.items()) {
      if (v.is_array() && !v.empty() && v.front().is_object()) continue;  // printed below
      os << (first ? ": " : ", ") << k << '=' << scalar_text(v);
      first = false;
    }
    os << '\n';
    for (const auto& [k, v] : it.detail.items()) {
      if (!(v.is_array() && !v.empty() && v.front().is_object())) continue;
      os << "    " << k << ":\n";
      for (const auto& row : v) {
        os << "      ";
        bool f = true;
        for (const auto& [rk, rv] : row.items()) {
          os << (f ? "" : "  ") << rk << '=' << scalar_text(rv);
          f = false;
        }
        os << '\n';
      }
    }
  }
  if (r.wall_time) os << "wall time: " << *r.wall_time << " s\n";
  return os.str();
}

namespace {

struct Options {
  std::string group;
  int p = 0;
  std::size_t n = 0;
  int q = 0;
  std::size_t deg = 0;
  std::string field;
  std::size_t rank = 0;
  std::string json_path;
  Limits limits;
  std::uint64_t seed = 0;
  bool timing = false;
  std::string target;
  std::string action;
  std::vector<std::string> words;
  std::string alpha;
};

json config_snapshot(const Options& o) {
  json c;
  c["cap_closure"] = o.limits.closure_cap;
  c["cap_order"] = o.limits.lattice_cap;
  c["cap_algebra_order"] = o.limits.algebra_order_cap;
  c["cap_algebra_field"] = o.limits.algebra_field_cap;
  c["seed"] = o.seed;
  json moduli = json::object();
  for (int q : Field::supported_orders()) {
    const auto& f = Field::get(q);
    if (f.degree() == 1) continue;
    moduli[f.name()] = f.modulus();
  }
  c["field_moduli"] = moduli;
  return c;
}

int parse_field(const std::string& s) {
  const auto caret = s.find('^');
  try {
    if (caret == std::string::npos) return std::stoi(s);
    int p = std::stoi(s.substr(0, caret)), k = std::stoi(s.substr(caret + 1)), q = 1;
    for (int i = 0; i < k; ++i) q *= p;
    return q;
  } catch (const std::logic_error&) {
    throw ParseError("cannot read field '" + s + "', expected p^k or q");
  }
}

const FiniteGroup& require_group(const Options& o, std::shared_ptr<const FiniteGroup>& holder) {
  if (o.group.empty()) throw ParseError("--group is required");
  holder = parse_group(o.group, o.limits);
  return *holder;
}

std::vector<std::string> generator_labels(const FiniteGroup& g, const SubgroupSet& h) {
  std::vector<Index> gens;
  auto cur = SubgroupSet::trivial(g);
  h.members().for_each([&](std::size_t x) {
    if (cur.contains(static_cast<Index>(x))) return;
    gens.push_back(static_cast<Index>(x));
    cur = generated_subgroup(g, gens);
  });
  std::vector<std::string> out;
  for (auto x : gens) out.push_back(g.element_label(x));
  return out;
}

std::string join_labels(const std::vector<std::string>& v) {
  if (v.empty()) return "<e>";
  std::string s = "<";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
  return s + ">";
}

VerificationReport cmd_classify(const Options& o) {
  VerificationReport r;
  r.informational = true;
  std::shared_ptr<const FiniteGroup> holder;
  const auto& g = require_group(o, holder);
  const auto subs = all_subgroups(g, o.limits);
  const auto reports = classify_subgroups(g, subs);
  std::size_t normal = 0, perm = 0, perm_not_normal = 0, subnormal = 0;
  for (std::size_t k = 0; k < reports.size(); ++k) {
    const auto& rep = reports[k];
    normal += rep.is_normal;
    perm += rep.is_permutable;
    perm_not_normal += rep.is_permutable && !rep.is_normal;
    subnormal += rep.is_subnormal;
    ReportItem it{"H" + std::to_string(k), true, json::object()};
    it.detail["order"] = rep.subgroup.size();
    it.detail["generators"] = join_labels(generator_labels(g, rep.subgroup));
    it.detail["normal"] = rep.is_normal;
    it.detail["permutable"] = rep.is_permutable;
    it.detail["subnormal"] = rep.is_subnormal;
    it.detail["defect"] = rep.defect ? json(*rep.defect) : json(nullptr);
    it.detail["core_order"] = rep.core.size();
    it.detail["normal_closure_order"] = rep.normal_closure.size();
    r.add(std::move(it));
  }
  std::ostringstream s;
  s << g.label() << " of order " << g.order() << ": " << subs.size() << " subgroups, " << normal << " normal, " << perm
    << " permutable, " << perm_not_normal << " permutable non-normal, " << subnormal << " subnormal";
  r.summary = s.str();
  return r;
}

json scan_detail(const PermutableNormalCheck& c) {
  json d;
  std::size_t perm = 0, normal = 0;
  for (const auto& e : c.evidence) {
    perm += e.is_permutable;
    normal += e.is_normal;
  }
  d["order"] = c.group->order();
  d["subgroups"] = c.evidence.size();
  d["normal"] = normal;
  d["permutable"] = perm;
  d["permutable_not_normal"] = c.permutable_not_normal.size();
  json witnesses = json::array();
  for (auto k : c.permutable_not_normal) {
    const auto& h = c.evidence[k].subgroup;
    witnesses.push_back({{"subgroup", join_labels(generator_labels(*c.group, h))}, {"order", h.size()}});
  }
  if (!witnesses.empty()) d["witnesses"] = witnesses;
  return d;
}

VerificationReport verify_lemma31(const Options& o) {
  VerificationReport r;
  const auto rep = verify_lemma_3_1(o.limits);
  for (const auto& c : rep.groups) r.add({c.group->label() + ": permutable => normal", c.verdict, scan_detail(c)});
  const auto control = check_all_permutable_subgroups_are_normal(parse_group("M16", o.limits), o.limits);
  auto d = scan_detail(control);
  d["expect"] = "permutable non-normal subgroup present";
  r.add({"control M16: checker can fail", !control.verdict, d});
  r.summary = r.verdict ? "every permutable subgroup of GL(2,2) and GL(2,3) is normal"
                        : "a permutable non-normal subgroup was found";
  return r;
}

VerificationReport verify_thm32(const Options& o) {
  VerificationReport r;
  std::vector<std::pair<std::size_t, int>> cases;
  if (o.n || o.q) {
    if (!o.n || !o.q) throw ParseError("thm3.2 needs both --n and --q");
    cases.emplace_back(o.n, o.q);
  } else {
    cases = {{3, 2}, {2, 4}};
  }
  for (auto [n, q] : cases) {
    const auto rep = check_theorem_3_2(n, q, o.limits);
    auto d = scan_detail(rep.scan);
    d["sl_order"] = rep.sl_order;
    d["noncentral_normal"] = rep.noncentral_normal;
    d["noncentral_normal_contain_sl"] = rep.noncentral_normal_contain_sl;
    r.add({rep.scan.group->label() + ": permutable => normal, SL <= N", rep.verdict, d});
  }
  r.summary = std::to_string(cases.size()) + " instance(s) checked";
  return r;
}

VerificationReport verify_lemma21(const Options& o) {
  VerificationReport r;
  const auto groups = o.group.empty() ? criteria_corpus() : std::vector<std::string>{o.group};
  std::size_t pairs = 0;
  for (const auto& spec : groups) {
    const auto c = check_criteria_on_group(spec, o.limits);
    pairs += c.pairs;
    r.add({spec + ": six criteria agree", c.verdict,
           {{"order", c.order}, {"pairs", c.pairs}, {"permutable", c.permutable}, {"disagreements", c.disagreements}}});
  }
  r.summary = std::to_string(groups.size()) + " groups, " + std::to_string(pairs) + " (G, N) pairs";
  return r;
}

std::vector<int> primes_or(const Options& o, std::vector<int> dflt) {
  if (o.p) return {o.p};
  return dflt;
}

VerificationReport verify_lemma64(const Options& o) {
  VerificationReport r;
  const auto groups = o.group.empty() ? small_group_corpus() : std::vector<std::string>{o.group};
  for (const auto& spec : groups)
    for (int p : primes_or(o, {2, 3})) {
      const auto c = check_unipotent_radical(spec, p, o.limits);
      r.add({spec + ", p=" + std::to_string(p) + ": G n (1 + J) = O_p(G)", c.verdict,
             {{"order", c.order}, {"op_order", c.op_order}, {"radical_side_order", c.radical_side_order}}});
    }
  r.summary = std::to_string(r.items.size()) + " (G, p) pairs";
  return r;
}

VerificationReport verify_thm65(const Options& o) {
  VerificationReport r;
  const auto groups = o.group.empty() ? criteria_corpus() : std::vector<std::string>{o.group};
  std::size_t skipped = 0;
  for (const auto& spec : groups)
    for (int p : primes_or(o, {2, 3, 5})) {
      auto g = parse_group(spec, o.limits);
      if (g->order() > o.limits.algebra_order_cap) {
        ++skipped;
        continue;
      }
      const auto c = check_quotient_commutativity(spec, p, o.limits);
      if (!c.applicable) {
        ++skipped;
        continue;
      }
      r.add({spec + ", p=" + std::to_string(p) + ": F_pG / J commutative", c.verdict,
             {{"order", g->order()}, {"commutative", c.commutative}}});
    }
  r.summary = std::to_string(r.items.size()) + " (G, p) pairs with G' a p-group; " + std::to_string(skipped) +
              " pairs outside the hypothesis or cap";
  return r;
}

VerificationReport verify_magnus(const Options& o) {
  VerificationReport r;
  MagnusSuiteConfig cfg;
  cfg.seed = o.seed;
  const auto m = run_magnus_suite(cfg);
  r.add({"order axioms", m.order_violations == 0, {{"pairs", m.pairs}, {"violations", m.order_violations}}});
  r.add({"bi-invariance", m.invariance_violations == 0, {{"pairs", m.pairs}, {"violations", m.invariance_violations}}});
  r.add({"valuation morphism", m.valuation_violations == 0,
         {{"pairs", m.valuation_pairs}, {"violations", m.valuation_violations}}});
  r.add({"expansion injectivity", m.injectivity_collisions == 0,
         {{"words", m.injectivity_words}, {"degree", cfg.injectivity_degree}, {"collisions", m.injectivity_collisions}}});
  for (const auto& s : pullback_corpus(o.limits)) {
    const auto c = check_pullback(s, o.limits);
    r.add({"pullback " + c.name, c.verdict, {{"permutable_targets", c.permutable_targets}, {"failures", c.failures}}});
  }
  r.summary = "seed " + std::to_string(o.seed);
  return r;
}

std::string element_text(const AlgebraElement& x) {
  const auto& g = x.parent().group();
  std::string s;
  for (const auto& [idx, c] : x.coefficients()) {
    if (!s.empty()) s += " + ";
    s += std::to_string(c.value) + "*" + g.element_label(idx);
  }
  return s.empty() ? "0" : s;
}

VerificationReport cmd_radical(const Options& o) {
  VerificationReport r;
  r.informational = true;
  std::shared_ptr<const FiniteGroup> holder;
  require_group(o, holder);
  int q = o.field.empty() ? o.p : parse_field(o.field);
  if (!q) throw ParseError("radical needs --p or --field");
  const Field& f = Field::get(q);
  GroupAlgebra a(holder, f, o.limits);
  const auto j = jacobson_radical(a, o.limits);
  json basis = json::array();
  json text = json::array();
  for (const auto& b : j.basis) {
    json m = json::object();
    for (const auto& [idx, c] : b.coefficients()) m[std::to_string(idx)] = c.value;
    basis.push_back(m);
    text.push_back({{"element", element_text(b)}});
  }
  json d;
  d["group_order"] = holder->order();
  d["field"] = f.name();
  d["dimension"] = j.dimension();
  d["nilpotency_index"] = j.nilpotency_index;
  d["two_sided"] = j.two_sided;
  d["quotient_semisimple"] = j.quotient_semisimple;
  d["basis_elements"] = text;
  d["basis"] = basis;
  const bool ok = j.two_sided && j.quotient_semisimple && j.nilpotency_index > 0;
  r.add({"J(" + f.name() + "[" + o.group + "])", ok, d});
  r.summary = "dim J = " + std::to_string(j.dimension()) + " of " + std::to_string(holder->order());
  return r;
}

VerificationReport cmd_magnus(const Options& o) {
  VerificationReport r;
  r.informational = true;
  if (o.action == "compare") {
    if (o.words.size() != 2) throw ParseError("magnus compare takes two words");
    auto w1 = FreeWord::parse(o.words[0], 0), w2 = FreeWord::parse(o.words[1], 0);
    const std::size_t rank = std::max({o.rank, w1.rank(), w2.rank()});
    w1 = w1.with_rank(rank);
    w2 = w2.with_rank(rank);
    const auto c = magnus_compare(w1, w2);
    const std::string res = c < 0 ? "less" : (c > 0 ? "greater" : "equal");
    r.add({"compare", true,
           {{"w1", w1.to_string()}, {"w2", w2.to_string()}, {"rank", rank}, {"result", res},
            {"degree", w1.length() + w2.length() + 1}}});
    r.summary = w1.to_string() + (c < 0 ? " < " : (c > 0 ? " > " : " = ")) + w2.to_string();
  } else {
    if (o.words.size() != 1) throw ParseError("magnus expand takes one word");
    if (!o.deg) throw ParseError("magnus expand needs --deg");
    auto w = FreeWord::parse(o.words[0], 0);
    w = w.with_rank(std::max(o.rank, w.rank()));
    const auto e = magnus_expand(w, o.deg);
    json terms = json::array();
    for (const auto& [m, c] : e.terms()) {
      std::string mono;
      for (auto x : m) mono += "X" + std::to_string(x + 1);
      terms.push_back({{"monomial", mono.empty() ? "1" : mono}, {"coefficient", c.str()}});
    }
    r.add({"expand", true, {{"word", w.to_string()}, {"degree", o.deg}, {"expansion", e.to_string()}, {"terms", terms}}});
    r.summary = e.to_string();
  }
  return r;
}

VerificationReport cmd_valuation(const Options& o) {
  VerificationReport r;
  r.informational = true;
  const Field& f = Field::get(o.field.empty() ? 2 : parse_field(o.field));
  const auto a = OrderedGroupAlgebraElement::parse(f, o.alpha, o.rank);
  const auto v = valuation(a);
  r.add({"valuation", true,
         {{"alpha", a.to_string()}, {"field", f.name()}, {"rank", a.rank()}, {"valuation", v.to_string()},
          {"trivial_unit", is_trivial_unit(a)}}});
  r.summary = "v(alpha) = " + v.to_string();
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Permutable-subgroup and group-algebra verification", "permuta"};
  app.require_subcommand(1);
  app.add_option("--group", o.group, "group spec, e.g. S(4), D(4), GL(2,3), perm[(1 2),(3 4)]");
  app.add_option("--p", o.p, "prime");
  app.add_option("--n", o.n, "matrix dimension");
  app.add_option("--q", o.q, "field order");
  app.add_option("--deg", o.deg, "truncation degree");
  app.add_option("--field", o.field, "field as p^k or q");
  app.add_option("--rank", o.rank, "free group rank");
  app.add_option("--json", o.json_path, "write the JSON report here");
  app.add_option("--cap-order", o.limits.lattice_cap, "largest group order for lattice enumeration");
  app.add_option("--cap-closure", o.limits.closure_cap, "largest group built by closure");
  app.add_option("--seed", o.seed, "seed for sampled suites");
  app.add_flag("--timing", o.timing, "record wall time in the report");

  auto* classify = app.add_subcommand("classify", "classify every subgroup of --group");
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", o.target)
      ->required()
      ->check(CLI::IsMember({"lemma2.1", "lemma3.1", "thm3.2", "lemma6.4", "thm6.5-2", "magnus"}));
  auto* radical = app.add_subcommand("radical", "Jacobson radical of F_q[G]");
  auto* magnus = app.add_subcommand("magnus", "Magnus expansion and order");
  magnus->add_option("action", o.action)->required()->check(CLI::IsMember({"compare", "expand"}));
  magnus->add_option("words", o.words);
  auto* val = app.add_subcommand("valuation", "minimum of the support in the Magnus order");
  val->add_option("alpha", o.alpha)->required();
  for (auto* s : {classify, verify, radical, magnus, val}) s->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  std::string echo = "permuta";
  for (const auto& a : args) echo += " " + a;
  try {
    const auto t0 = std::chrono::steady_clock::now();
    VerificationReport r;
    if (classify->parsed()) {
      r = cmd_classify(o);
    } else if (verify->parsed()) {
      if (o.target == "lemma2.1") r = verify_lemma21(o);
      if (o.target == "lemma3.1") r = verify_lemma31(o);
      if (o.target == "thm3.2") r = verify_thm32(o);
      if (o.target == "lemma6.4") r = verify_lemma64(o);
      if (o.target == "thm6.5-2") r = verify_thm65(o);
      if (o.target == "magnus") r = verify_magnus(o);
    } else if (radical->parsed()) {
      r = cmd_radical(o);
    } else if (magnus->parsed()) {
      r = cmd_magnus(o);
    } else {
      r = cmd_valuation(o);
    }
    r.command = echo.substr(8);
    r.config = config_snapshot(o);
    if (o.timing)
      r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out << render_text(r);
    if (!o.json_path.empty()) {
      std::ofstream f(o.json_path);
      if (!f) throw ParseError("cannot write " + o.json_path);
      f << to_json(r).dump(2) << '\n';
    }
    return r.exit_code();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace permuta
