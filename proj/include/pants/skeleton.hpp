// Skeleton representatives of block words: chord layout, segment
// classification, crossing counts, and band thickening.
#pragma once

#include <string>
#include <vector>

#include "pants/diagram.hpp"
#include "pants/word.hpp"

namespace pants {

enum class SegmentKind { Corner, Transversal, BridgingCorner, BridgingTransversal };

// Segment m joins slot m+1 to slot m+2 (1-based positions along the curve).
struct SkeletonSegment {
  SegmentKind kind;
  int start_slot;
  int end_slot;
};

struct SkeletonCurve {
  CyclicWord source;
  int n;
  int start_rotation;
  std::string representative;
  std::vector<SkeletonSegment> segments;
  Diagram diagram;
};

bool is_skeleton_word(const CyclicWord& w);

// Boundary coordinate of 1-based slot p on a 2n-slot skeleton: odd slots sit
// on the a/A side pair at p/(2n+1), even slots on b/B at (2n+2-p)/(2n+2).
Rat slot_coordinate(int p, int n);

// Lays out the chord diagram of a skeleton word. Rotation 0 draws the default
// representative (the least alpha-starting rotation whose closing segment is
// transversal, if any); higher rotations continue cyclically through the
// alpha-starting rotations from there.
SkeletonCurve build_skeleton(const CyclicWord& wS, int rotation = 0);

size_t count_skeleton_crossings(const SkeletonCurve& c);

// n^2 + n - 1 - 2c for a skeleton word with 2c corner segments.
long corner_bound(const CyclicWord& wS);

// Full diagram of a block word: the skeleton of block rotation `rotation`
// (counted from the canonical anchor) with each letter duplicated into a
// parallel band of its block's exponent.
Diagram thicken(const CyclicWord& w, int rotation);

}  // namespace pants
