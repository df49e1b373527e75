#include <doctest.h>

#include <algorithm>

#include "su21/diagram.hpp"

using namespace su21;

namespace {

long count(const std::string& s, const std::string& needle) {
  long n = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST_SUITE("diagram") {
  TEST_CASE("text diagram of (0, 4)") {
    std::string t = emit_diagram(0, 4, 6, DiagramFormat::txt);
    CHECK(t.find("chamber I1") != std::string::npos);
    // one mark per lattice point, V_fin has four of them
    CHECK(std::count(t.begin(), t.end(), '#') == 4 + 1);  // plus the legend line
    CHECK(t.find("V_fin") != std::string::npos);
    CHECK(t.find("(1,3)") != std::string::npos);
    CHECK(t.find("(1,-3)") != std::string::npos);
    CHECK(t.find("(2,0)") != std::string::npos);
    CHECK(t.find("k+l = 4") != std::string::npos);
    CHECK(t.find("k-l = 4") != std::string::npos);
  }

  TEST_CASE("unclassified characters get a warning") {
    std::string t = emit_diagram(0, 1, 4, DiagramFormat::txt);
    CHECK(t.find("WARNING") != std::string::npos);
    CHECK(t.find("legend") == std::string::npos);
    std::string grid = t.substr(t.find('\n') + 1);
    CHECK(std::count(grid.begin(), grid.end(), 'o') == 15);
    CHECK(emit_diagram(2, 0, 3, DiagramFormat::svg).find("WARNING") != std::string::npos);
  }

  TEST_CASE("svg diagram") {
    std::string s = emit_diagram(6, 2, 8, DiagramFormat::svg);
    CHECK(s.rfind("<svg", 0) == 0);
    CHECK(s.find("</svg>") != std::string::npos);
    CHECK(count(s, "<circle") == 45);
    CHECK(count(s, "#808080") >= 2);
    CHECK(count(s, "#bfbfbf") >= 2);
    CHECK(count(s, "#f2f2f2") >= 2);
    CHECK(count(s, "stroke-dasharray") == 2);
    CHECK(s.find("V_disc-") != std::string::npos);
  }

  TEST_CASE("walls and format names") {
    CHECK(chamber_walls(0, 1).empty());
    auto w = chamber_walls(0, 4);
    REQUIRE(w.size() == 2);
    CHECK(w[0].sum);
    CHECK(w[0].value == 4);
    CHECK_FALSE(w[1].sum);
    CHECK(w[1].value == 4);
    CHECK(diagram_format("svg") == DiagramFormat::svg);
    CHECK_THROWS_AS(diagram_format("png"), DomainError);
    CHECK_THROWS_AS(emit_diagram(0, 4, 201, DiagramFormat::txt), DomainError);
  }
}
