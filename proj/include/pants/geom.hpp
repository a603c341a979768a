// Exact rational points, segments, and transversal intersection tests.
#pragma once

#include <gmpxx.h>

namespace pants {

using Rat = mpq_class;

inline Rat frac(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

struct Pt {
  Rat x, y;
};

inline bool operator==(const Pt& p, const Pt& q) { return p.x == q.x && p.y == q.y; }
inline bool operator!=(const Pt& p, const Pt& q) { return !(p == q); }
inline Pt operator-(const Pt& p, const Pt& q) { return {p.x - q.x, p.y - q.y}; }
inline Pt operator+(const Pt& p, const Pt& q) { return {p.x + q.x, p.y + q.y}; }
inline Pt operator*(const Rat& c, const Pt& p) { return {c * p.x, c * p.y}; }

inline Rat cross(const Pt& u, const Pt& v) { return u.x * v.y - u.y * v.x; }
inline Rat dot(const Pt& u, const Pt& v) { return u.x * v.x + u.y * v.y; }

enum class SegHit { None, Proper, Degenerate };

struct SegIntersection {
  SegHit kind = SegHit::None;
  Rat s, t;
  Pt p;
};

// Classifies the contact between open segments p0p1 and q0q1. Proper means a
// single transversal interior crossing; any endpoint contact or collinear
// overlap is Degenerate.
SegIntersection segment_intersection(const Pt& p0, const Pt& p1, const Pt& q0, const Pt& q1);

}  // namespace pants
