#include "doctest.h"

#include <stdexcept>
#include <string>

#include "sfc/catalog.hpp"
#include "sfc/svg.hpp"

using namespace sfc;

TEST_CASE("rendering is deterministic byte for byte") {
  for (const char* name : {"hilbert2d", "sierpinski2d", "gosper2d", "peano2"}) {
    auto spec = catalog_curve(name).spec;
    RenderOptions opt;
    opt.level = 2;
    auto once = render_svg(spec, opt);
    auto twice = render_svg(spec, opt);
    CHECK(once == twice);
    CHECK(once.rfind("<svg", 0) == 0);
    CHECK(once.find("</svg>") != std::string::npos);
    CHECK(once.find("<polyline") != std::string::npos);
    CHECK(once.find("<polygon") != std::string::npos);
  }
}

TEST_CASE("the cell count follows the level") {
  auto spec = catalog_curve("hilbert2d").spec;
  RenderOptions opt;
  opt.level = 2;
  auto svg = render_svg(spec, opt);
  size_t polygons = 0;
  for (size_t at = svg.find("<polygon"); at != std::string::npos;
       at = svg.find("<polygon", at + 1))
    ++polygons;
  CHECK(polygons == 16);
}

TEST_CASE("the polyline can run one level deeper than the cells") {
  auto spec = catalog_curve("hilbert2d").spec;
  RenderOptions shallow, deep;
  shallow.level = deep.level = 2;
  deep.curve_offset = 1;
  auto a = render_svg(spec, shallow);
  auto b = render_svg(spec, deep);
  CHECK(a != b);
  // The deeper polyline has 64 points instead of 16; count commas in the
  // points attribute of the polyline.
  auto count_points = [](const std::string& svg) {
    auto start = svg.find("<polyline");
    auto from = svg.find("points=\"", start) + 8;
    auto to = svg.find('"', from);
    size_t points = 0;
    for (size_t i = from; i < to; ++i)
      if (svg[i] == ',') ++points;
    return points;
  };
  CHECK(count_points(a) == 16);
  CHECK(count_points(b) == 64);
}

TEST_CASE("labels name positions or states") {
  auto spec = catalog_curve("hilbert2d").spec;
  RenderOptions opt;
  opt.level = 1;
  opt.labels = CellLabels::positions;
  auto positions = render_svg(spec, opt);
  CHECK(positions.find("<text") != std::string::npos);
  CHECK(positions.find(">3<") != std::string::npos);

  opt.labels = CellLabels::states;
  auto states = render_svg(spec, opt);
  CHECK(states.find("<text") != std::string::npos);

  opt.labels = CellLabels::none;
  CHECK(render_svg(spec, opt).find("<text") == std::string::npos);
}

TEST_CASE("digit labels write positions in base b") {
  auto spec = catalog_curve("hilbert2d").spec;
  RenderOptions opt;
  opt.level = 2;
  opt.labels = CellLabels::positions;
  opt.digit_labels = true;
  auto svg = render_svg(spec, opt);
  // Position 14 is 32 in base four.
  CHECK(svg.find(">32<") != std::string::npos);
  CHECK(svg.find(">14<") == std::string::npos);
}

TEST_CASE("rendering refuses what it cannot draw") {
  RenderOptions opt;
  CHECK_THROWS_WITH_AS(render_svg(catalog_curve("morton3").spec, opt),
                       doctest::Contains("plane"), std::invalid_argument);

  auto spec = catalog_curve("hilbert2d").spec;
  opt.level = 9;
  CHECK_THROWS_WITH_AS(render_svg(spec, opt), doctest::Contains("too many cells"),
                       std::invalid_argument);
  opt.level = 2;
  opt.curve_offset = 2;
  CHECK_THROWS_AS(render_svg(spec, opt), std::invalid_argument);
  opt.curve_offset = 0;
  opt.size = 50;
  CHECK_THROWS_AS(render_svg(spec, opt), std::invalid_argument);
}
