#include "doctest.h"

#include "cork/certificate.hpp"
#include "cork/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run corktool(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cork::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fx(const std::string& name) { return std::string(FIXTURES_DIR) + "/" + name; }

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("corktool-test-" + name)).string();
}

}  // namespace

TEST_CASE("tb prints the value first") {
  auto r = corktool({"tb", fx("trefoil_tb1.front")});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("1\n", 0) == 0);
  CHECK(r.out.find("crossing (1,1/2) +") != std::string::npos);
  r = corktool({"tb", fx("lens.front")});
  CHECK(r.out.rfind("-1\n", 0) == 0);
  r = corktool({"tb", fx("malformed.front")});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 1, column") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(corktool({"admissible", fx("w1.diagram")}).code == 0);
  CHECK(corktool({"admissible", fx("hopf.diagram")}).code == 1);
  CHECK(corktool({"admissible", fx("knotted.diagram"), "--budget", "0"}).code == 3);
  CHECK(corktool({"admissible", fx("w1.diagram"), "--budget", "-1"}).code == 2);
  CHECK(corktool({"homology", fx("w1.diagram")}).code == 0);
  CHECK(corktool({"twist", fx("w1.diagram")}).code == 0);
  CHECK(corktool({"fill", fx("w1.palf")}).code == 0);
  CHECK(corktool({"fill", fx("w1.palf"), "--genus", "3"}).code == 0);
  CHECK(corktool({"fill", fx("w1.palf"), fx("w1.diagram"), fx("trefoil.inflation")}).code == 0);
  CHECK(corktool({"mcg", "verify-chain", "2"}).code == 0);
  CHECK(corktool({"mcg", "verify-chain", "0"}).code == 2);
  CHECK(corktool({"nonsense"}).code == 2);
  CHECK(corktool({}).code == 2);
  CHECK(corktool({"--help"}).code == 0);
}

TEST_CASE("structured output is byte-stable") {
  for (std::vector<std::string> args :
       {std::vector<std::string>{"admissible", fx("w1.diagram"), "--format", "doc"},
        {"homology", fx("w1.diagram"), "--format", "doc"},
        {"fill", fx("w1.palf"), "--format", "doc"},
        {"tb", fx("trefoil_tb1.front"), "--format", "doc"},
        {"certify", fx("w1.diagram"), fx("w1.palf"), fx("trefoil.inflation"), "--format", "doc"}}) {
    const auto a = corktool(args), b = corktool(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
    CHECK(nlohmann::ordered_json::parse(a.out).is_object());
  }
}

TEST_CASE("fill respects --genus") {
  const auto r = corktool({"fill", fx("w1.palf"), "--genus", "3", "--format", "doc"});
  const auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(j["fiber_genus"] == 3);
}

TEST_CASE("certify, store, validate, tamper") {
  const auto path = temp_path("cert.json");
  auto r = corktool({"certify", fx("w1.diagram"), fx("w1.palf"), fx("trefoil.inflation"), "-o", path});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("verdict: DISTINCT") != std::string::npos);
  CHECK(corktool({"certify", "--validate", path}).code == 0);

  std::ifstream in(path);
  auto cert = nlohmann::ordered_json::parse(in);
  in.close();
  cert["steps"][0]["side_conditions"][2]["bindings"]["lk"] = "2";
  std::ofstream(path) << cert.dump(2);
  r = corktool({"certify", "--validate", path});
  CHECK(r.code == 1);
  CHECK(r.out.find("INVALID") != std::string::npos);
  std::ofstream(path) << "{ not json";
  CHECK(corktool({"certify", "--validate", path}).code == 2);
  std::remove(path.c_str());
}

TEST_CASE("certify aborts") {
  auto r = corktool({"certify", fx("w1.diagram"), fx("w1.palf"), fx("unknot.inflation")});
  CHECK(r.code == 1);
  CHECK(r.err.find("adjunction rule not applicable") != std::string::npos);
  r = corktool({"certify", fx("w1.diagram"), fx("w1.palf"), fx("trefoil_framing0.inflation")});
  CHECK(r.code == 1);
  CHECK(r.err.find("untwisted Stein check wants framing = tb − 1 = 1") != std::string::npos);
  CHECK(corktool({"certify", fx("w1.diagram"), fx("w1.palf"), fx("malformed.front")}).code == 2);
}
