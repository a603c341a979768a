#include "pants/diagram.hpp"

#include <algorithm>
#include <map>

namespace pants {

SegIntersection segment_intersection(const Pt& p0, const Pt& p1, const Pt& q0, const Pt& q1) {
  Pt d1 = p1 - p0, d2 = q1 - q0;
  Rat denom = cross(d1, d2);
  SegIntersection r;
  if (denom == 0) {
    Rat c = cross(d1, q0 - p0);
    if (c != 0) return r;
    // Collinear: degenerate when the parameter ranges overlap or touch.
    Rat len2 = dot(d1, d1);
    if (len2 == 0) {
      r.kind = SegHit::Degenerate;
      return r;
    }
    Rat t0 = dot(q0 - p0, d1) / len2;
    Rat t1 = dot(q1 - p0, d1) / len2;
    if (t0 > t1) std::swap(t0, t1);
    r.kind = (t1 < 0 || t0 > 1) ? SegHit::None : SegHit::Degenerate;
    return r;
  }
  Rat s = cross(q0 - p0, d2) / denom;
  Rat t = cross(q0 - p0, d1) / denom;
  if (s < 0 || s > 1 || t < 0 || t > 1) return r;
  bool interior = s > 0 && s < 1 && t > 0 && t < 1;
  r.kind = interior ? SegHit::Proper : SegHit::Degenerate;
  r.s = s;
  r.t = t;
  r.p = p0 + s * d1;
  return r;
}

static Pt side_point(char side, const Rat& x) {
  switch (side) {
    case 'a': return {Rat(1) - x, Rat(0)};
    case 'A': return {Rat(1), x};
    case 'b': return {x, Rat(1)};
    case 'B': return {Rat(0), Rat(1) - x};
    default: throw Error(ErrorCode::ParseError, "unknown side");
  }
}

static Pt inward_normal(char side) {
  switch (side) {
    case 'a': return {Rat(0), Rat(1)};
    case 'A': return {Rat(-1), Rat(0)};
    case 'b': return {Rat(0), Rat(-1)};
    case 'B': return {Rat(1), Rat(0)};
    default: throw Error(ErrorCode::ParseError, "unknown side");
  }
}

Pt Diagram::exit_point(const Transition& t) { return side_point(t.letter, t.coord); }
Pt Diagram::entry_point(const Transition& t) { return side_point(inv(t.letter), t.coord); }

std::vector<Pt> Diagram::arc_polyline(size_t m) const {
  const Transition& from = ts[m];
  const Transition& to = ts[(m + 1) % ts.size()];
  std::vector<Pt> pts;
  pts.push_back(entry_point(from));
  if (m < waypoints.size()) {
    for (const Pt& w : waypoints[m]) pts.push_back(w);
  }
  pts.push_back(exit_point(to));
  if (pts.size() == 2 && inv(from.letter) == to.letter) {
    // Both endpoints lie on one side; bow the arc inward so it stays interior.
    char side = to.letter;
    Rat gap = from.coord - to.coord;
    if (gap < 0) gap = -gap;
    Pt mid = frac(1, 2) * (pts[0] + pts[1]) + (gap / 4) * inward_normal(side);
    pts.insert(pts.begin() + 1, mid);
  }
  return pts;
}

std::string Diagram::trace() const {
  std::string s;
  for (const Transition& t : ts) s.push_back(t.letter);
  return s;
}

CyclicWord Diagram::word() const { return CyclicWord::from_linear(trace()); }

std::string Diagram::letters(size_t first, size_t count) const {
  std::string s;
  for (size_t i = 0; i < count; ++i) s.push_back(ts[(first + i) % ts.size()].letter);
  return s;
}

Diagram make_diagram(const std::vector<Transition>& ts) {
  Diagram d;
  d.ts = ts;
  d.waypoints.assign(ts.size(), {});
  return d;
}

Diagram make_diagram(std::vector<Transition> ts, std::vector<std::vector<Pt>> waypoints) {
  if (waypoints.size() != ts.size()) {
    throw Error(ErrorCode::ParseError, "waypoint lists do not match transitions");
  }
  Diagram d;
  d.ts = std::move(ts);
  d.waypoints = std::move(waypoints);
  return d;
}

static void validate_coords(const Diagram& d) {
  std::map<char, std::vector<Rat>> per_pair;
  for (const Transition& t : d.ts) {
    if (!is_letter(t.letter)) throw Error(ErrorCode::ParseError, "unknown letter in transition");
    if (t.coord <= 0 || t.coord >= 1) {
      throw Error(ErrorCode::DegeneratePosition, "transition coordinate outside the open side");
    }
    per_pair[is_alpha_letter(t.letter) ? 'a' : 'b'].push_back(t.coord);
  }
  for (auto& [pair, coords] : per_pair) {
    std::sort(coords.begin(), coords.end());
    for (size_t i = 0; i + 1 < coords.size(); ++i) {
      if (coords[i] == coords[i + 1]) {
        throw Error(ErrorCode::DegeneratePosition, "two transitions share a glued boundary point");
      }
    }
  }
}

static bool pt_less(const Pt& p, const Pt& q) {
  if (p.x != q.x) return p.x < q.x;
  return p.y < q.y;
}

CrossingSet compute_crossings(const Diagram& d) {
  if (d.ts.empty()) throw Error(ErrorCode::EmptyWord, "diagram has no transitions");
  validate_coords(d);

  size_t n = d.arc_count();
  std::vector<std::vector<Pt>> polys(n);
  for (size_t m = 0; m < n; ++m) {
    polys[m] = d.arc_polyline(m);
    const std::vector<Pt>& p = polys[m];
    for (size_t k = 0; k + 1 < p.size(); ++k) {
      if (p[k] == p[k + 1]) throw Error(ErrorCode::DegeneratePosition, "zero-length segment");
    }
    for (size_t k = 0; k + 2 < p.size(); ++k) {
      Pt u = p[k + 1] - p[k], v = p[k + 2] - p[k + 1];
      if (cross(u, v) == 0 && dot(u, v) <= 0) {
        throw Error(ErrorCode::DegeneratePosition, "polyline backtracks at a waypoint");
      }
    }
  }

  CrossingSet cs;
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i; j < n; ++j) {
      const std::vector<Pt>& P = polys[i];
      const std::vector<Pt>& Q = polys[j];
      for (size_t k = 0; k + 1 < P.size(); ++k) {
        size_t l0 = (i == j) ? k + 1 : 0;
        for (size_t l = l0; l + 1 < Q.size(); ++l) {
          if (i == j && l == k + 1) continue;  // adjacent segments share a vertex
          SegIntersection h = segment_intersection(P[k], P[k + 1], Q[l], Q[l + 1]);
          if (h.kind == SegHit::Degenerate) {
            throw Error(ErrorCode::DegeneratePosition, "arcs touch without crossing transversally");
          }
          if (h.kind == SegHit::Proper) {
            cs.all.push_back({i, Rat(static_cast<long>(k)) + h.s, j, Rat(static_cast<long>(l)) + h.t, h.p});
          }
        }
      }
    }
  }

  std::sort(cs.all.begin(), cs.all.end(), [](const Crossing& x, const Crossing& y) {
    if (x.arcA != y.arcA) return x.arcA < y.arcA;
    if (x.paramA != y.paramA) return x.paramA < y.paramA;
    if (x.arcB != y.arcB) return x.arcB < y.arcB;
    return x.paramB < y.paramB;
  });

  std::vector<Pt> pts;
  for (const Crossing& c : cs.all) pts.push_back(c.p);
  std::sort(pts.begin(), pts.end(), pt_less);
  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    if (pts[i] == pts[i + 1]) throw Error(ErrorCode::DegeneratePosition, "three strands meet at one point");
  }

  cs.by_arc.assign(n, {});
  for (size_t idx = 0; idx < cs.all.size(); ++idx) {
    const Crossing& c = cs.all[idx];
    cs.by_arc[c.arcA].push_back({c.paramA, idx, 0});
    cs.by_arc[c.arcB].push_back({c.paramB, idx, 1});
  }
  for (std::vector<CrossingVisit>& visits : cs.by_arc) {
    std::sort(visits.begin(), visits.end(), [](const CrossingVisit& u, const CrossingVisit& v) { return u.param < v.param; });
    for (size_t i = 0; i + 1 < visits.size(); ++i) {
      if (visits[i].param == visits[i + 1].param) {
        throw Error(ErrorCode::DegeneratePosition, "two crossings coincide on one arc");
      }
    }
  }
  return cs;
}

}  // namespace pants
