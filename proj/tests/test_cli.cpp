#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "json.hpp"
#include "surgobs/cli.hpp"
#include "surgobs/plumbing.hpp"
#include "surgobs/seifert.hpp"

using namespace surgobs;
using Json = nlohmann::ordered_json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string seifert_text(const seifert::SeifertData& d) {
  std::ostringstream os;
  seifert::write_seifert(os, d);
  return os.str();
}

std::string plumbing_text(const plumbing::PlumbingGraph& g) {
  std::ostringstream os;
  plumbing::write_plumbing(os, g);
  return os.str();
}

}  // namespace

TEST_CASE("k ranges") {
  CHECK(cli::parse_k_range("1..25") == std::pair<long, long>(1, 25));
  CHECK(cli::parse_k_range("7") == std::pair<long, long>(7, 7));
  CHECK_THROWS_AS(cli::parse_k_range("0..1"), cli::UsageError);
  CHECK_THROWS_AS(cli::parse_k_range("5..2"), cli::UsageError);
  CHECK_THROWS_AS(cli::parse_k_range("a..b"), cli::UsageError);
  CHECK_THROWS_AS(cli::parse_k_range(""), cli::UsageError);
}

TEST_CASE("complex expressions") {
  using namespace cfk;
  CHECK(cli::parse_complex_expr("T2 7", ".") == staircase_T2(7, true));
  CHECK(cli::parse_complex_expr("mirror(T2 3)", ".") == dual(staircase_T2(3, true)));
  CHECK(cli::parse_complex_expr("T2 7 * mirror(T2 3)", ".") ==
        tensor(staircase_T2(7, true), dual(staircase_T2(3, true))));
  CHECK(cli::parse_complex_expr("unknot", ".") == unknot());
  CHECK(cli::parse_complex_expr("shift(T2 3, -2/1)", ".") == shift(staircase_T2(3, true), Rational(-2)));
  CHECK(cli::parse_complex_expr("@data/t2_7.cfk", ".").size() == 7);
  CHECK_THROWS_AS(cli::parse_complex_expr("T2 4", "."), cli::UsageError);
  CHECK_THROWS_AS(cli::parse_complex_expr("T2 3 *", "."), cli::UsageError);
  CHECK_THROWS_AS(cli::parse_complex_expr("mirror(T2 3", "."), cli::UsageError);
}

TEST_CASE("seifert command") {
  const Run r = run({"seifert"}, seifert_text(seifert::nk_family(1)));
  CHECK(r.code == 0);
  CHECK(r.out.find("rohlin: (1, 1); verdict: obstructed") != std::string::npos);
  CHECK(r.out.find("euler number:") != std::string::npos);

  const Run f = run({"seifert", "data/n1.seifert"});
  CHECK(f.code == 0);
  CHECK(f.out == r.out);

  CHECK(run({"seifert"}, "e -1\nslope 1/0\n").code == 1);
  CHECK(run({"seifert", "no/such/file"}).code == 1);
}

TEST_CASE("seifert and plumbing agree on N_k") {
  for (long k = 1; k <= 25; ++k) {
    const seifert::SeifertData d = seifert::nk_family(k);
    const Run s = run({"seifert", "--format", "json"}, seifert_text(d));
    const Run p = run({"plumbing", "--format", "json"},
                      plumbing_text(seifert::build_plumbing(seifert::normalize(d))));
    REQUIRE(s.code == 0);
    REQUIRE(p.code == 0);
    const Json a = Json::parse(s.out), b = Json::parse(p.out);
    CHECK(a["analysis"].dump() == b["analysis"].dump());
    CHECK(a["analysis"]["verdict"] == (k % 2 == 1 ? "obstructed" : "inconclusive"));
  }
}

TEST_CASE("plumbing command") {
  const Run e8 = run({"plumbing", "data/e8.plumbing", "--format", "json"});
  REQUIRE(e8.code == 0);
  const Json j = Json::parse(e8.out);
  CHECK(j["analysis"]["form"]["sigma"] == -8);
  CHECK(j["analysis"]["wu_classes"].size() == 1);
  CHECK(j["analysis"]["wu_classes"][0]["mu"] == 1);

  const Run z = run({"plumbing", "data/zero.plumbing"});
  CHECK(z.code == 0);
  CHECK(z.out.find("rohlin: (0, 0); verdict: inconclusive") != std::string::npos);

  CHECK(run({"plumbing"}, "vertex v 2\n").code == 2);
  CHECK(run({"plumbing"}, "vertex a -2\nvertex b -2\nvertex c -2\nedge a b\nedge b c\nedge c a\n").code == 2);
  CHECK(run({"plumbing"}, "vertex a -2\nedge a b\n").code == 1);
  CHECK(run({"plumbing"}, "vortex a -2\n").code == 1);
}

TEST_CASE("json output round-trips byte for byte") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"seifert", "data/n1.seifert", "--format", "json"},
        {"plumbing", "data/e8.plumbing", "--format", "json"}}) {
    const Run r = run(args);
    REQUIRE(r.code == 0);
    CHECK(Json::parse(r.out).dump(2) + "\n" == r.out);
  }
  const Run fam = run({"family", "Nk", "1..3", "--format", "json"});
  REQUIRE(fam.code == 0);
  std::istringstream lines(fam.out);
  std::string line;
  int n = 0;
  while (std::getline(lines, line)) {
    CHECK(Json::parse(line).dump() == line);
    ++n;
  }
  CHECK(n == 4);
}

TEST_CASE("family command") {
  const Run m = run({"family", "Mk", "--k", "1..3"});
  CHECK(m.code == 0);
  CHECK(m.out.find("-3/2") != std::string::npos);
  CHECK(m.out.find("-11/2") != std::string::npos);
  CHECK(m.out.find("summary: 3 of 3 obstructed") != std::string::npos);

  const Run n = run({"family", "Nk", "1..4"});
  CHECK(n.code == 0);
  CHECK(n.out.find("summary: 2 of 4 obstructed") != std::string::npos);

  const Run serial = run({"family", "Nk", "1..12", "--format", "json"});
  const Run again = run({"family", "Nk", "1..12", "--format", "json"});
  CHECK(serial.out == again.out);

  CHECK(run({"family", "Mk", "--k", "0..1"}).code == 1);
  CHECK(run({"family", "Qk", "1"}).code == 1);
}

TEST_CASE("cfk command") {
  CHECK(run({"cfk", "v0", "T2 9"}).out == "2\n");
  CHECK(run({"cfk", "v0", "mirror(T2 9)"}).out == "0\n");
  const Run d0 = run({"cfk", "d0", "T2 3 * mirror(T2 3)", "--ambient", "-2/1"});
  CHECK(d0.code == 0);
  CHECK(d0.out.find("d: (-3/2, -5/2)") != std::string::npos);
  const Run d1 = run({"cfk", "d1", "T2 3", "--sign", "1"});
  CHECK(d1.out.find("d: -2") != std::string::npos);
  CHECK(run({"cfk", "v0", "T2 3 *"}).code == 1);
  CHECK(run({"cfk", "spin", "T2 3"}).code == 1);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"bogus"}).code == 1);
}
