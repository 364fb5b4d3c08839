#include "sfc/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>

#include "sfc/hull.hpp"

namespace sfc {

namespace {

struct CellGeometry {
  int state = 0;
  PointMatrix points;
};

void collect_cells(const BSpecification& spec, int level, int state, const PointMatrix& points,
                   std::vector<CellGeometry>& out) {
  if (level == 0) {
    out.push_back({state, points});
    return;
  }
  for (int j = 0; j < spec.branching; ++j)
    collect_cells(spec, level - 1, spec.child(state, j), points.mul(spec.matrix(state, j)), out);
}

RVector centroid_of(const PointMatrix& p) {
  RVector c(p.rows(), Rational(0));
  for (int col = 0; col < p.cols(); ++col)
    for (int r = 0; r < p.rows(); ++r) c[r] += p.at(r, col);
  for (Rational& v : c) v /= p.cols();
  return c;
}

// Walks the edges of a plane hull into one closed ring of extreme columns.
std::vector<int> ring_order(const ConvexHull& hull) {
  std::map<int, std::vector<int>> link;
  for (const HullFacet& f : hull.facets) {
    std::vector<int> ends;
    for (int col : f.vertex_cols)
      if (std::binary_search(hull.vertex_cols.begin(), hull.vertex_cols.end(), col))
        ends.push_back(col);
    if (ends.size() != 2) throw std::logic_error("plane hull edge without two endpoints");
    link[ends[0]].push_back(ends[1]);
    link[ends[1]].push_back(ends[0]);
  }
  std::vector<int> ring;
  int previous = -1, current = hull.vertex_cols.front();
  do {
    ring.push_back(current);
    std::vector<int>& around = link[current];
    std::sort(around.begin(), around.end());
    const int next = around[0] == previous ? around[1] : around[0];
    previous = current;
    current = next;
  } while (current != ring.front());
  return ring;
}

// Digits of the cell index, coarsest first, joined with dots past base ten.
std::string digit_string(long long position, int level, int branching) {
  if (level == 0) return "0";
  std::string out;
  for (int i = level - 1; i >= 0; --i) {
    long long scale = 1;
    for (int k = 0; k < i; ++k) scale *= branching;
    out += std::to_string(position / scale % branching);
    if (branching > 10 && i > 0) out += '.';
  }
  return out;
}

} // namespace

std::string render_svg(const BSpecification& spec, const RenderOptions& opt) {
  validate(spec);
  if (spec.dimension != 2) throw std::invalid_argument("rendering needs a plane curve");
  if (opt.level < 0) throw std::invalid_argument("negative level");
  if (opt.curve_offset != 0 && opt.curve_offset != 1)
    throw std::invalid_argument("curve offset must be 0 or 1");
  if (opt.size < 100 || opt.size > 10000) throw std::invalid_argument("unreasonable page size");
  long long cell_count = 1;
  for (int i = 0; i < opt.level + opt.curve_offset; ++i) {
    cell_count *= spec.branching;
    if (cell_count > 100000) throw std::invalid_argument("too many cells to render");
  }

  std::vector<CellGeometry> cells;
  collect_cells(spec, opt.level, spec.states.root_state, spec.root_points, cells);
  std::vector<CellGeometry> walk;
  if (opt.curve_offset == 0) {
    walk = cells;
  } else {
    collect_cells(spec, opt.level + 1, spec.states.root_state, spec.root_points, walk);
  }

  Box page = bounding_box(spec.root_points);
  for (const CellGeometry& cell : cells) {
    const Box b = bounding_box(cell.points);
    for (int i = 0; i < 2; ++i) {
      page.lo[i] = std::min(page.lo[i], b.lo[i]);
      page.hi[i] = std::max(page.hi[i], b.hi[i]);
    }
  }
  const Rational margin(20);
  const Rational span = std::max(page.hi[0] - page.lo[0], page.hi[1] - page.lo[1]);
  if (span == 0) throw std::invalid_argument("degenerate geometry");
  const Rational scale = (Rational(opt.size) - 2 * margin) / span;
  RVector shift(2);
  for (int i = 0; i < 2; ++i)
    shift[i] = (Rational(opt.size) - (page.hi[i] - page.lo[i]) * scale) / 2 - page.lo[i] * scale;
  const auto place = [&](const Rational& x, const Rational& y) {
    return std::pair<std::string, std::string>(
        rational_to_decimal(x * scale + shift[0]),
        rational_to_decimal(Rational(opt.size) - (y * scale + shift[1])));
  };

  std::string out;
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%d", opt.size);
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"";
  out += buffer;
  out += "\" height=\"";
  out += buffer;
  out += "\" viewBox=\"0 0 ";
  out += buffer;
  out += " ";
  out += buffer;
  out += "\">\n";

  out += "<g fill=\"#f4f1ea\" stroke=\"#5a5a5a\" stroke-width=\"0.7\">\n";
  for (const CellGeometry& cell : cells) {
    const ConvexHull hull = convex_hull(cell.points);
    if (hull.affine_dim != 2) throw std::invalid_argument("cannot render a degenerate cell");
    out += "<polygon points=\"";
    bool first = true;
    for (int col : ring_order(hull)) {
      if (!first) out += ' ';
      first = false;
      const auto [x, y] = place(cell.points.at(0, col - 1), cell.points.at(1, col - 1));
      out += x;
      out += ',';
      out += y;
    }
    out += "\"/>\n";
  }
  out += "</g>\n";

  out += "<polyline fill=\"none\" stroke=\"#b03a2e\" stroke-width=\"1.4\" "
         "stroke-linejoin=\"round\" points=\"";
  for (std::size_t i = 0; i < walk.size(); ++i) {
    if (i) out += ' ';
    const RVector c = centroid_of(walk[i].points);
    const auto [x, y] = place(c[0], c[1]);
    out += x;
    out += ',';
    out += y;
  }
  out += "\"/>\n";

  if (opt.labels != CellLabels::none) {
    const double side = (opt.size - 40.0) / std::sqrt((double)cells.size());
    std::snprintf(buffer, sizeof buffer, "%.2f", std::max(4.0, side / 3.5));
    out += "<g font-family=\"monospace\" font-size=\"";
    out += buffer;
    out += "\" text-anchor=\"middle\" fill=\"#1a3a5c\">\n";
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const RVector c = centroid_of(cells[i].points);
      const auto [x, y] = place(c[0], c[1]);
      std::string text;
      if (opt.labels == CellLabels::states) {
        text = std::to_string(cells[i].state);
      } else if (opt.digit_labels) {
        text = digit_string((long long)i, opt.level, spec.branching);
      } else {
        text = std::to_string(i);
      }
      out += "<text x=\"" + x + "\" y=\"" + y + "\">" + text + "</text>\n";
    }
    out += "</g>\n";
  }

  out += "</svg>\n";
  return out;
}

} // namespace sfc
