// SVG text generation for curve diagrams.
#include "pants/svg.hpp"

#include <cstdio>
#include <set>

namespace pants {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

Pt side_anchor(char side, const Rat& x) {
  switch (side) {
    case 'a': return {Rat(1) - x, Rat(0)};
    case 'A': return {Rat(1), x};
    case 'b': return {x, Rat(1)};
    case 'B': return {Rat(0), Rat(1) - x};
  }
  throw Error(ErrorCode::ParseError, "unknown side");
}

}  // namespace

std::string render_svg(const Diagram& d, const RenderOptions& opts) {
  const double S = opts.size;
  const double M = 40;
  const double W = S + 2 * M;
  auto px = [&](const Pt& p) { return M + S * p.x.get_d(); };
  auto py = [&](const Pt& p) { return M + S * (1 - p.y.get_d()); };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(W) + "\" height=\"" + num(W) +
         "\" viewBox=\"0 0 " + num(W) + " " + num(W) + "\">\n";
  out +=
      "<style>.chord{stroke:#16324f;fill:none;stroke-width:1.5}"
      ".band{stroke:#c2571a;fill:none;stroke-width:1.5}"
      ".crossing{fill:#a4243b;stroke:none}"
      ".slot-label{stroke:#444;fill:#444;font:11px sans-serif}</style>\n";
  out += "<rect x=\"" + num(M) + "\" y=\"" + num(M) + "\" width=\"" + num(S) + "\" height=\"" +
         num(S) + "\" fill=\"#fdfcf8\" stroke=\"#777\"/>\n";

  struct SideSpec {
    char letter;
    double lx, ly;  // label position
    double ox, oy;  // outward unit direction for ticks
  };
  const SideSpec sides[4] = {
      {'a', W / 2, W - 8, 0, 1},
      {'A', W - 10, W / 2, 1, 0},
      {'b', W / 2, M - 24, 0, -1},
      {'B', 10, W / 2, -1, 0},
  };
  for (const SideSpec& s : sides) {
    out += "<text class=\"slot-label\" x=\"" + num(s.lx) + "\" y=\"" + num(s.ly) +
           "\" text-anchor=\"middle\">" + s.letter + "</text>\n";
    std::set<Rat> coords;
    for (const Transition& t : d.ts) {
      if (t.letter == s.letter || inv(t.letter) == s.letter) coords.insert(t.coord);
    }
    int slot = 0;
    for (const Rat& c : coords) {
      ++slot;
      Pt p = side_anchor(s.letter, c);
      double x0 = px(p), y0 = py(p);
      out += "<line class=\"slot-label\" x1=\"" + num(x0) + "\" y1=\"" + num(y0) + "\" x2=\"" +
             num(x0 + 6 * s.ox) + "\" y2=\"" + num(y0 + 6 * s.oy) + "\"/>\n";
      out += "<text class=\"slot-label\" x=\"" + num(x0 + 16 * s.ox) + "\" y=\"" +
             num(y0 + 16 * s.oy + 4) + "\" text-anchor=\"middle\">" + std::to_string(slot) +
             "</text>\n";
    }
  }

  size_t L = d.arc_count();
  for (size_t m = 0; m < L; ++m) {
    std::vector<Pt> pts = d.arc_polyline(m);
    bool band = d.ts[(m + 1) % L].band_copy;
    out += std::string("<polyline class=\"") + (band ? "band" : "chord") + "\" points=\"";
    for (size_t i = 0; i < pts.size(); ++i) {
      if (i) out += ' ';
      out += num(px(pts[i])) + "," + num(py(pts[i]));
    }
    out += "\"/>\n";
  }

  if (opts.crossings) {
    CrossingSet cs = compute_crossings(d);
    for (const Crossing& c : cs.all) {
      out += "<circle class=\"crossing\" cx=\"" + num(px(c.p)) + "\" cy=\"" + num(py(c.p)) +
             "\" r=\"3\"/>\n";
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace pants
