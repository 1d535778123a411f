#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "permuta/cli.hpp"
#include "permuta/error.hpp"

using namespace permuta;
using json = nlohmann::ordered_json;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("permuta_test_" + name);
}

json read_json(const std::filesystem::path& p) {
  std::ifstream f(p);
  return json::parse(f);
}

}  // namespace

TEST_CASE("verify lemma3.1 succeeds") {
  const auto r = call({"verify", "lemma3.1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verdict: true") != std::string::npos);
  CHECK(r.out.find("[FAIL]") == std::string::npos);
}

TEST_CASE("classify D(4)") {
  const auto r = call({"classify", "--group", "D(4)"});
  CHECK(r.code == 0);
  CHECK(r.out.find("subnormal=true, defect=2") != std::string::npos);
  const auto c1 = call({"classify", "--group", "C(1)"});
  CHECK(c1.code == 0);
}

TEST_CASE("usage and input errors exit 1") {
  CHECK(call({}).code == 1);
  CHECK(call({"verify", "nonsense"}).code == 1);
  CHECK(call({"classify"}).code == 1);
  const auto bad = call({"classify", "--group", "X(3)"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("error:") != std::string::npos);
  CHECK(call({"verify", "thm3.2", "--n", "2", "--q", "2"}).code == 1);
  CHECK(call({"classify", "--group", "S(5)", "--cap-closure", "50"}).code == 1);
  CHECK(call({"magnus", "compare", "x1"}).code == 1);
  CHECK(call({"radical", "--group", "C(2)"}).code == 1);
}

TEST_CASE("help exits 0") { CHECK(call({"--help"}).code == 0); }

TEST_CASE("JSON report round trip and determinism") {
  const auto p1 = temp_path("a.json"), p2 = temp_path("b.json");
  REQUIRE(call({"classify", "--group", "S(3)", "--json", p1.string()}).code == 0);
  const auto j = read_json(p1);
  std::filesystem::rename(p1, p2);
  REQUIRE(call({"classify", "--group", "S(3)", "--json", p1.string()}).code == 0);
  std::ifstream a(p1), b(p2);
  std::stringstream sa, sb;
  sa << a.rdbuf();
  sb << b.rdbuf();
  CHECK(sa.str() == sb.str());
  CHECK(j["schema"] == 1);
  CHECK_FALSE(j.contains("wall_time"));
  CHECK(j["config"]["field_moduli"].size() == 3);
  const auto r = report_from_json(j);
  CHECK(to_json(r) == j);
  CHECK(report_from_json(to_json(r)) == r);
  json bad = j;
  bad["schema"] = 2;
  CHECK_THROWS_AS(report_from_json(bad), ParseError);
  CHECK_THROWS_AS(report_from_json(json::object()), ParseError);
  std::filesystem::remove(p1);
  std::filesystem::remove(p2);
}

TEST_CASE("text and JSON carry the same verdicts") {
  const auto p = temp_path("v.json");
  const auto r = call({"verify", "lemma3.1", "--json", p.string()});
  const auto j = read_json(p);
  CHECK(j["verdict"] == true);
  CHECK(render_text(report_from_json(j)) == r.out);
  std::size_t ok = 0;
  for (const auto& it : j["items"]) ok += it["verdict"].get<bool>();
  std::size_t lines = 0;
  for (std::size_t at = r.out.find("[ok]"); at != std::string::npos; at = r.out.find("[ok]", at + 1)) ++lines;
  CHECK(ok == lines);
  std::filesystem::remove(p);
}

TEST_CASE("timing is opt-in") {
  const auto p = temp_path("t.json");
  CHECK(call({"classify", "--group", "C(3)", "--timing", "--json", p.string()}).code == 0);
  CHECK(read_json(p).contains("wall_time"));
  std::filesystem::remove(p);
}

TEST_CASE("magnus commands") {
  const auto c = call({"magnus", "compare", "x2 x1", "x1 x2"});
  CHECK(c.code == 0);
  CHECK(c.out.find("result=less") != std::string::npos);
  const auto e = call({"magnus", "expand", "x1^-2", "--deg", "3"});
  CHECK(e.code == 0);
  CHECK(e.out.find("1 - 2*X1 + 3*X1^2 - 4*X1^3") != std::string::npos);
  const auto v = call({"valuation", "3*x1 + 2*x1x2^-1", "--field", "5"});
  CHECK(v.code == 0);
  CHECK(v.out.find("valuation=x1 x2^-1") != std::string::npos);
}

TEST_CASE("radical JSON basis") {
  const auto p = temp_path("r.json");
  CHECK(call({"radical", "--group", "C(2)", "--p", "2", "--json", p.string()}).code == 0);
  const auto d = read_json(p)["items"][0]["detail"];
  CHECK(d["dimension"] == 1);
  CHECK(d["basis"][0] == json({{"0", 1}, {"1", 1}}));
  CHECK(call({"radical", "--group", "S(3)", "--field", "3^2"}).code == 0);
  std::filesystem::remove(p);
}

TEST_CASE("false verdict maps to exit 2") {
  VerificationReport r;
  r.add({"holds", true, {}});
  CHECK(r.exit_code() == 0);
  r.add({"fails", false, {}});
  CHECK(r.exit_code() == 2);
  CHECK(render_text(r).find("[FAIL] fails") != std::string::npos);
  r.informational = true;
  CHECK(r.exit_code() == 0);
}

TEST_CASE("installed binary") {
  const std::string bin = PERMUTA_CLI_PATH;
  CHECK(std::system((bin + " verify lemma3.1 > /dev/null").c_str()) == 0);
  CHECK(std::system((bin + " verify nonsense > /dev/null 2>&1").c_str()) != 0);
}
