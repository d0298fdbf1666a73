#include "doctest.h"
#include "fixture_io.hpp"
#include "oracles.hpp"

#include "cork/error.hpp"
#include "cork/front.hpp"

#include <sstream>

using namespace cork;
using namespace cork::front;

namespace {

std::vector<oracle::Pt> polygon(const FrontDiagram& d, const std::string& c) {
  std::vector<oracle::Pt> p;
  for (const auto& s : d.segments(c)) p.push_back({s.from.x, s.from.y});
  p.push_back(p.front());
  return p;
}

}  // namespace

TEST_CASE("lens and trefoil fronts") {
  const auto lens = parse_front(fixture("lens.front"));
  CHECK(lens.tb("U") == -1);
  CHECK(lens.tb("U") == oracle::tb_of_polygon(polygon(lens, "U")).tb());
  const auto trefoil = parse_front(fixture("trefoil_tb1.front"));
  CHECK(trefoil.writhe("T") == 3);
  CHECK(trefoil.cusp_count("T") == 4);
  CHECK(trefoil.tb("T") == 1);
  CHECK(oracle::tb_of_polygon(polygon(trefoil, "T")).tb() == 1);
}

TEST_CASE("each stabilization lowers tb by one") {
  for (const char* name : {"lens.front", "trefoil_tb1.front"}) {
    auto d = parse_front(fixture(name));
    const auto c = d.components()[0];
    const int tb0 = d.tb(c);
    for (int k = 1; k <= 10; ++k) {
      d = stabilize(d, c, k % 2 == 0);
      CHECK(d.tb(c) == tb0 - k);
      CHECK(oracle::tb_of_polygon(polygon(d, c)).tb() == tb0 - k);
    }
  }
}

TEST_CASE("tb is independent of orientation") {
  const auto d = parse_front(fixture("trefoil_tb1.front"));
  CHECK(d.reversed("T").tb("T") == d.tb("T"));
  CHECK(d.reversed("T").writhe("T") == d.writhe("T"));
}

TEST_CASE("linking number of the clasped pairs") {
  for (int n = 0; n <= 5; ++n) {
    auto text = oracle::clasped_pair(n);
    std::string front_only;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
      if (line.rfind("arc", 0) == 0) front_only += line + '\n';
    const auto d = parse_front(front_only);
    const auto [a, b] = oracle::clasped_pair_polygons(n);
    CHECK(d.linking_number("A", "B") == n);
    CHECK(oracle::linking_of_polygons(a, b) == n);
  }
}

TEST_CASE("handle passages and winding") {
  const auto d = parse_front(
      "handle H : x=4 ytop=1 ybot=-1\n"
      "handle H : x=-4 ytop=1 ybot=-1\n"
      "arc K : (-4,0) (4,0)\n");
  CHECK(d.handle_passages("K") == 1);
  CHECK(std::abs(d.winding("K", "H")) == 1);
  CHECK(d.winding("K", "H") == -d.reversed("K").winding("K", "H"));
  CHECK(d.tb("K") == 0);
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_front("arc U : (0,0) (1,1 (3,1)\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() > 1);
  }
  CHECK_THROWS_AS(parse_front("arc U : (0,0) (0,1) (1,0) (0,0)\n"), GenericityError);
  CHECK_THROWS_AS(parse_front("arc U : (0,0) (1,1) (2,0)\n"), GenericityError);
  CHECK_THROWS_AS(parse_front("bogus line\n"), ParseError);
}

TEST_CASE("documents round-trip") {
  const auto d = parse_front(fixture("trefoil_tb1.front"));
  const auto again = parse_front(write_front(d));
  CHECK(again.tb("T") == d.tb("T"));
  CHECK(write_front(again) == write_front(d));
  CHECK(d.renamed({{"T", "S"}}).tb("S") == 1);
}
