// Tests for the SVG renderer's structure and determinism.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "pants/skeleton.hpp"
#include "pants/svg.hpp"

using namespace pants;

namespace {

CyclicWord W(const char* s) { return CyclicWord::from_linear(s); }

size_t count_of(const std::string& text, const std::string& needle) {
  size_t n = 0;
  for (size_t pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1))
    ++n;
  return n;
}

}  // namespace

TEST_CASE("the six-chord skeleton renders its chords and crossings") {
  Diagram d = build_skeleton(W("AbAbAb")).diagram;
  std::string svg = render_svg(d);
  CHECK(count_of(svg, "<polyline class=\"chord\"") == 6);
  CHECK(count_of(svg, "<polyline class=\"band\"") == 0);
  CHECK(count_of(svg, "<circle class=\"crossing\"") == 11);
  CHECK(svg.find("<svg xmlns=\"http://www.w3.org/2000/svg\"") != std::string::npos);
  CHECK(svg.rfind("</svg>\n") == svg.size() - 7);
}

TEST_CASE("band passages are styled apart from the skeleton") {
  std::string svg = render_svg(thicken(W("AAbabAbb"), 0));
  CHECK(count_of(svg, "<polyline class=\"chord\"") == 6);
  CHECK(count_of(svg, "<polyline class=\"band\"") == 2);
}

TEST_CASE("a single-chord diagram renders one chord and no markers") {
  Diagram d = make_diagram({{'a', frac(1, 2), false}});
  std::string svg = render_svg(d);
  CHECK(count_of(svg, "<polyline") == 1);
  CHECK(count_of(svg, "<circle") == 0);
}

TEST_CASE("marker drawing can be switched off") {
  Diagram d = build_skeleton(W("AbAbAb")).diagram;
  std::string svg = render_svg(d, {.size = 400, .crossings = false});
  CHECK(count_of(svg, "<circle") == 0);
  CHECK(count_of(svg, "<polyline class=\"chord\"") == 6);
}

TEST_CASE("output is byte-identical across runs") {
  Diagram d = build_skeleton(W("AbAbAb")).diagram;
  CHECK(render_svg(d) == render_svg(d));
  Diagram t = thicken(W("aaBaB"), 0);
  CHECK(render_svg(t) == render_svg(t));
}

TEST_CASE("every side label and slot marking appears") {
  Diagram d = build_skeleton(W("AbAb")).diagram;
  std::string svg = render_svg(d);
  for (const char* side : {">a<", ">A<", ">b<", ">B<"}) CHECK(svg.find(side) != std::string::npos);
  CHECK(count_of(svg, "<line class=\"slot-label\"") > 0);
}
