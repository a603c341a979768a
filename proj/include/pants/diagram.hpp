// Curve diagrams on the glued unit square: boundary transitions, polyline
// arcs, and exact crossing computation.
#pragma once

#include <string>
#include <vector>

#include "pants/geom.hpp"
#include "pants/word.hpp"

namespace pants {

// One passage of the curve through the glued boundary: it leaves the square
// through the side named by `letter` and re-enters through the opposite side
// at the same coordinate. Band copies are passages added by thickening.
struct Transition {
  char letter;
  Rat coord;
  bool band_copy = false;
};

// A closed curve drawn in the square. Arc m runs from the entry point of
// transition m to the exit point of transition m+1 (cyclically), passing
// through the listed interior waypoints. Arc points are parametrized by
// 0 = entry, j = waypoint j, m+1 = exit; segment k covers [k, k+1].
struct Diagram {
  std::vector<Transition> ts;
  std::vector<std::vector<Pt>> waypoints;

  static Pt exit_point(const Transition& t);
  static Pt entry_point(const Transition& t);

  size_t arc_count() const { return ts.size(); }
  std::vector<Pt> arc_polyline(size_t m) const;
  std::string trace() const;
  CyclicWord word() const;
  std::string letters(size_t first, size_t count) const;
};

Diagram make_diagram(const std::vector<Transition>& ts);
Diagram make_diagram(std::vector<Transition> ts, std::vector<std::vector<Pt>> waypoints);

struct Crossing {
  size_t arcA;
  Rat paramA;
  size_t arcB;
  Rat paramB;
  Pt p;
};

// One arc's passage through one crossing; `end` tells which side of the
// crossing record this visit is (0 for the A side, 1 for the B side).
struct CrossingVisit {
  Rat param;
  size_t crossing;
  int end;
};

struct CrossingSet {
  std::vector<Crossing> all;
  std::vector<std::vector<CrossingVisit>> by_arc;
  size_t count() const { return all.size(); }
};

// Finds all transversal double points of the diagram. Throws
// DegeneratePosition on coordinate clashes, endpoint contacts, collinear
// overlaps, or multiple crossings at one point.
CrossingSet compute_crossings(const Diagram& d);

}  // namespace pants
