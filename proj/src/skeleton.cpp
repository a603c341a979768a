#include "pants/skeleton.hpp"

#include <algorithm>

namespace pants {

bool is_skeleton_word(const CyclicWord& w) {
  size_t L = w.length();
  if (L < 2 || L % 2 != 0) return false;
  for (size_t i = 0; i < L; ++i) {
    if (is_alpha_letter(w.at(static_cast<long>(i))) == is_alpha_letter(w.at(static_cast<long>(i) + 1))) return false;
  }
  return true;
}

Rat slot_coordinate(int p, int n) {
  if (p % 2 == 1) return frac(p, 2 * n + 1);
  return frac(2 * n + 2 - p, 2 * n + 2);
}

static SegmentKind classify(char x, char y, bool bridging) {
  bool corner = is_upper(x) == is_upper(y);
  if (corner) return bridging ? SegmentKind::BridgingCorner : SegmentKind::Corner;
  return bridging ? SegmentKind::BridgingTransversal : SegmentKind::Transversal;
}

static BlockDecomposition unit_blocks(const std::string& alpha_start) {
  BlockDecomposition d;
  d.n = static_cast<int>(alpha_start.size()) / 2;
  d.anchor_offset = 0;
  for (int j = 0; j < d.n; ++j) {
    d.alpha_signs.push_back(alpha_start[static_cast<size_t>(2 * j)]);
    d.beta_signs.push_back(alpha_start[static_cast<size_t>(2 * j + 1)]);
    d.alpha_exps.push_back(1);
    d.beta_exps.push_back(1);
  }
  return d;
}

static Diagram blocks_to_diagram(const BlockDecomposition& d, int attempt) {
  int n = d.n;
  long L = d.length();
  Rat eps = frac(1, (2L * n + 1) * (2L * n + 2) * (L + 2));
  Rat eta(0);
  if (attempt > 0) {
    eta = eps / (4 * L + 4);
    for (int k = 1; k < attempt; ++k) eta /= 2;
  }
  std::vector<Transition> ts;
  for (int j = 0; j < n; ++j) {
    for (int half = 0; half < 2; ++half) {
      char sign = half == 0 ? d.alpha_signs[static_cast<size_t>(j)] : d.beta_signs[static_cast<size_t>(j)];
      int exp = half == 0 ? d.alpha_exps[static_cast<size_t>(j)] : d.beta_exps[static_cast<size_t>(j)];
      Rat base = slot_coordinate(2 * j + 1 + half, n);
      for (int k = 0; k < exp; ++k) {
        Rat coord = base + k * eps + static_cast<long>(ts.size() + 1) * eta;
        ts.push_back({sign, coord, k > 0});
      }
    }
  }
  return make_diagram(ts);
}

// Retries with a tiny slot perturbation until the chords are in general
// position; the perturbation is far below the slot spacing, so the boundary
// order and hence the crossing pattern are unchanged.
static Diagram blocks_to_valid_diagram(const BlockDecomposition& d) {
  for (int attempt = 0; attempt < 40; ++attempt) {
    Diagram dg = blocks_to_diagram(d, attempt);
    try {
      compute_crossings(dg);
      return dg;
    } catch (const Error& e) {
      if (e.code != ErrorCode::DegeneratePosition) throw;
    }
  }
  throw Error(ErrorCode::DegeneratePosition, "could not reach general position");
}

static std::vector<std::string> alpha_start_rotations(const CyclicWord& w) {
  std::vector<std::string> out;
  const std::string& s = w.str();
  for (size_t i = 0; i < s.size(); ++i) {
    if (is_alpha_letter(s[i])) out.push_back(w.rotation(i));
  }
  return out;
}

static size_t default_rotation_index(const std::vector<std::string>& rots) {
  size_t best = rots.size();
  for (size_t i = 0; i < rots.size(); ++i) {
    if (is_upper(rots[i].back()) == is_upper(rots[i].front())) continue;
    if (best == rots.size() || rank_less(rots[i], rots[best])) best = i;
  }
  if (best < rots.size()) return best;
  best = 0;
  for (size_t i = 1; i < rots.size(); ++i) {
    if (rank_less(rots[i], rots[best])) best = i;
  }
  return best;
}

SkeletonCurve build_skeleton(const CyclicWord& wS, int rotation) {
  if (!is_skeleton_word(wS)) {
    throw Error(ErrorCode::NotSkeleton, "letters must alternate between the two generator classes");
  }
  std::vector<std::string> rots = alpha_start_rotations(wS);
  int n = static_cast<int>(rots.size());
  if (rotation < 0 || rotation >= n) throw Error(ErrorCode::ParseError, "rotation out of range");
  size_t d = default_rotation_index(rots);
  std::string repr = rots[(d + static_cast<size_t>(rotation)) % rots.size()];

  std::vector<SkeletonSegment> segments;
  int slots = 2 * n;
  for (int m = 0; m < slots; ++m) {
    bool bridging = m == slots - 1;
    char x = repr[static_cast<size_t>(m)];
    char y = repr[static_cast<size_t>((m + 1) % slots)];
    segments.push_back({classify(x, y, bridging), m + 1, (m + 1) % slots + 1});
  }
  return {wS, n, rotation, repr, segments, blocks_to_valid_diagram(unit_blocks(repr))};
}

size_t count_skeleton_crossings(const SkeletonCurve& c) { return compute_crossings(c.diagram).count(); }

long corner_bound(const CyclicWord& wS) {
  if (!is_skeleton_word(wS)) {
    throw Error(ErrorCode::NotSkeleton, "letters must alternate between the two generator classes");
  }
  long n = static_cast<long>(wS.length()) / 2;
  long corners = 0;
  for (long i = 0; i < 2 * n; ++i) {
    if (is_upper(wS.at(i)) == is_upper(wS.at(i + 1))) ++corners;
  }
  return n * n + n - 1 - corners;
}

Diagram thicken(const CyclicWord& w, int rotation) {
  BlockDecomposition d = block_decomposition(w);
  if (rotation < 0 || rotation >= d.n) throw Error(ErrorCode::ParseError, "rotation out of range");
  return blocks_to_valid_diagram(d.rotated(rotation));
}

}  // namespace pants
