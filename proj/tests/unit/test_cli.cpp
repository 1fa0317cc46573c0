#include <doctest.h>

#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "dualsomos/dual.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = dualsomos::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> odd_parts(const nlohmann::json& terms) {
  std::vector<std::string> v;
  for (const auto& t : terms) v.push_back(t["odd"].get<std::string>());
  return v;
}

std::vector<std::string> values(const nlohmann::json& rows) {
  std::vector<std::string> v;
  for (const auto& t : rows) v.push_back(t["value"].get<std::string>());
  return v;
}

using S = std::vector<std::string>;

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("somos defaults to the classical sequence") {
    const Result r = run({"somos", "--classical", "--to", "12"});
    REQUIRE(r.code == 0);
    const auto doc = r.json();
    S even;
    for (const auto& t : doc["terms"]) even.push_back(t["even"]);
    CHECK(even == S{"1", "1", "1", "1", "2", "3", "7", "23", "59", "314", "1529", "8209", "83313", "620297"});
    CHECK(doc["terms"][0]["n"] == -1);
  }

  TEST_CASE("somos with a perturbed coefficient") {
    const Result r = run({"somos", "--alpha", "1", "--beta", "1+1e", "--seed", "1,1,1,1", "--from", "-1", "--to", "10"});
    REQUIRE(r.code == 0);
    CHECK(odd_parts(r.json()["terms"]) == S{"0", "0", "0", "0", "1", "2", "10", "48", "160", "1273", "7346", "51394"});
  }

  TEST_CASE("csv output") {
    const Result r = run({"somos", "--classical", "--to", "3", "--format", "csv"});
    REQUIRE(r.code == 0);
    CHECK(r.out == "n,even,odd\n-1,1,0\n0,1,0\n1,1,0\n2,1,0\n3,2,0\n");
  }

  TEST_CASE("shadow table by every route") {
    const S i{"1", "1", "1", "1", "2", "3", "7", "23", "59", "314", "1529", "8209", "83313", "620297"};
    const S ii{"-1", "0", "1", "2", "6", "12", "35", "138", "413", "2512", "13761", "82090", "916443", "7443564"};
    const S iii{"0", "0", "1", "1", "3", "7", "15", "70", "202", "1107", "6906", "36386", "420371", "3594979"};
    const S iv{"0", "0", "0", "1", "1", "3", "10", "22", "108", "472", "2174", "17792", "120536", "1161627"};
    for (const char* r3 : {"map", "bordered"}) {
      for (const char* r4 : {"recurrence", "vop"}) {
        CAPTURE(r3);
        CAPTURE(r4);
        const Result r = run({"shadow", "--classical", "--rows", "i,ii,iii,iv", "--to", "12", "--iii-route", r3,
                              "--iv-route", r4});
        REQUIRE(r.code == 0);
        const auto rows = r.json()["rows"];
        CHECK(values(rows["i"]) == i);
        CHECK(values(rows["ii"]) == ii);
        CHECK(values(rows["iii"]) == iii);
        CHECK(values(rows["iv"]) == iv);
      }
    }
  }

  TEST_CASE("hankel determinants") {
    const Result r = run({"hankel", "--spec", "1-4e,1,1-3/2e,1+1e,1/2e", "--dets", "0..4"});
    REQUIRE(r.code == 0);
    const auto doc = r.json();
    S dets;
    for (const auto& t : doc["dets"]) dets.push_back(dualsomos::dual_str({dualsomos::Rational::parse(t["even"].get<std::string>()), dualsomos::Rational::parse(t["odd"].get<std::string>())}));
    CHECK(dets == S{"1", "1+1e", "2+1e", "3+3e", "7+10e"});
  }

  TEST_CASE("invariants along an orbit") {
    const Result r = run({"invariants", "--alpha", "1", "--beta", "1+1e", "--seed", "1,1,1,1"});
    REQUIRE(r.code == 0);
    const auto doc = r.json();
    REQUIRE(!doc["windows"].empty());
    for (const auto& w : doc["windows"]) {
      CHECK(w["j_even"] == "4");
      CHECK(w["j_odd"] == "1");
      CHECK(w["j"] == "4+1e");
    }
  }

  TEST_CASE("map orbit") {
    const Result r = run({"map", "--steps", "3"});
    REQUIRE(r.code == 0);
    const auto doc = r.json();
    S d, h;
    for (const auto& st : doc["states"]) {
      d.push_back(st["d"]);
      h.push_back(st["H"]);
      CHECK(st["jacobian"] == "1");
    }
    CHECK(d == S{"1", "2", "3/4", "14/9"});
    CHECK(h == S{"-2", "-2", "-2", "-2"});
    CHECK(doc["params"]["J"] == "4");
  }

  TEST_CASE("laurent and elliptic verification") {
    CHECK(run({"laurent-verify", "--depth", "5", "--samples", "3"}).code == 0);
    const Result e = run({"elliptic-verify", "--classical", "--to", "8"});
    CHECK(e.code == 0);
    const Result d = run({"elliptic-verify", "--alpha", "1", "--beta", "1+1e", "--seed", "1,1,1,1", "--dual", "--to", "8"});
    CHECK(d.code == 0);
  }

  TEST_CASE("usage errors exit with 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"nosuch"}).code == 2);
    CHECK(run({"somos", "--bogus"}).code == 2);
    CHECK(run({"somos", "--beta", "1+"}).code == 2);
    CHECK(run({"somos", "--seed", "1,1,1"}).code == 2);
    CHECK(run({"somos", "--format", "xml"}).code == 2);
    CHECK(run({"hankel", "--dets", "4..1x"}).code == 2);
    CHECK(run({"shadow", "--iii-route", "sideways"}).code == 2);
    CHECK(run({"somos", "--help"}).code == 0);
  }

  TEST_CASE("mathematical failures exit with 3 and a diagnostic") {
    const Result r = run({"somos", "--seed", "0+1e,1,1,1", "--base", "0", "--from", "0", "--to", "6"});
    CHECK(r.code == 3);
    const auto j = nlohmann::json::parse(r.err);
    CHECK(j["error"] == "VanishingEvenPart");
    CHECK(j.contains("message"));

    const Result s = run({"hankel", "--spec", "0+1e,1,1,1,0"});
    CHECK(s.code == 3);
    CHECK(nlohmann::json::parse(s.err)["error"] == "InvalidParams");

    const Result m = run({"shadow", "--alpha", "2", "--beta", "1", "--seed", "1,1,1,1"});
    CHECK(m.code == 3);
    CHECK(nlohmann::json::parse(m.err)["error"] == "DomainError");
  }

  TEST_CASE("output is byte-stable") {
    const std::vector<std::string> args{"hankel", "--spec", "1+1e,1,1+1/2e,1,-1/2e", "--count", "12"};
    CHECK(run(args).out == run(args).out);
  }
}
