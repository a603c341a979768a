// Builds k nearly parallel copies of a minimal diagram joined into a single
// curve, for validating the power rule against direct crossing counts.
#pragma once

#include <algorithm>
#include <vector>

#include "pants/diagram.hpp"
#include "pants/word.hpp"

namespace pants_test {

inline pants::Pt prot90(const pants::Pt& v) { return {-v.y, v.x}; }

// Copy s sits s offset steps to the left of the original; the first
// transition of each copy takes one extra step so the seams chain the copies
// into one closed curve.
inline pants::Diagram power_diagram(const pants::Diagram& v, long k) {
  using namespace pants;
  std::vector<Rat> coords = {Rat(0), Rat(1)};
  for (const Transition& t : v.ts) coords.push_back(t.coord);
  std::sort(coords.begin(), coords.end());
  Rat gap(1);
  for (size_t i = 0; i + 1 < coords.size(); ++i) {
    Rat g = coords[i + 1] - coords[i];
    if (g > 0 && g < gap) gap = g;
  }
  Rat delta = gap / (2 * (k + 2));
  size_t L = v.ts.size();
  for (int attempt = 0; attempt < 30; ++attempt) {
    std::vector<Transition> ts;
    std::vector<std::vector<Pt>> wp;
    for (long s = 0; s < k; ++s) {
      Rat sd = Rat(s) * delta;
      for (size_t m = 0; m < L; ++m) {
        const Transition& t = v.ts[m];
        Rat g = is_lower(t.letter) ? Rat(-1) : Rat(1);
        Rat step = (m == 0) ? Rat(s + 1) * delta : sd;
        Rat coord = t.coord + g * step;
        ts.push_back({t.letter, coord, t.band_copy});
        std::vector<Pt> pts = v.arc_polyline(m);
        std::vector<Pt> out;
        const std::vector<Pt>& wpm = v.waypoints[m];
        for (size_t j = 0; j < wpm.size(); ++j) {
          Pt dprev = pts[j + 1] - pts[j];
          Pt dnext = pts[j + 2] - pts[j + 1];
          out.push_back(wpm[j] + sd * prot90(dprev + dnext));
        }
        wp.push_back(std::move(out));
      }
    }
    Diagram d = make_diagram(std::move(ts), std::move(wp));
    try {
      compute_crossings(d);
      return d;
    } catch (const Error& e) {
      if (e.code != ErrorCode::DegeneratePosition) throw;
    }
    delta /= 2;
  }
  throw pants::Error(pants::ErrorCode::DegeneratePosition, "parallel copies kept colliding");
}

}  // namespace pants_test
