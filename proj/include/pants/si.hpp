// Exact self-intersection numbers: a linked-pair oracle at infinity, bigon
// and monogon reduction of diagrams to minimal position, and the power rule.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pants/diagram.hpp"

namespace pants {

// Boundary cyclic order calibrated against the known anchor values.
inline constexpr std::array<char, 4> kCalibratedOrder = {'a', 'A', 'b', 'B'};

// Counts self-intersections of a primitive word by sorting strand ends at
// infinity and deduplicating linked pairs that name the same double point.
long linked_pair_count(const CyclicWord& w, const std::array<char, 4>& order = kCalibratedOrder);

// A removable configuration: either one crossing whose returning loop is
// null-homotopic (monogon) or two crossings joined by two crossing-free
// branches whose boundary loop is null-homotopic (bigon). Branch words are
// read from crossing X to crossing Y; branch1 follows the empty interval
// found first, branch2 the complementary one.
struct BigonCertificate {
  bool monogon;
  size_t crossingX;
  size_t crossingY;
  size_t arcA;
  Rat paramA;
  size_t arcB;
  Rat paramB;
  bool i2_starts_at_x;
  size_t arcC;
  Rat paramC;
  size_t arcD;
  Rat paramD;
  std::string branch1;
  std::string branch2;
};

std::vector<BigonCertificate> find_bigons(const Diagram& d);
std::optional<BigonCertificate> find_bigon(const Diagram& d);

// Removes the certified monogon (one crossing) or bigon (two crossings),
// splicing one branch alongside the other; validates the result exactly.
Diagram apply_bigon(const Diagram& d, const BigonCertificate& c);

// Repeatedly removes bigons and monogons; when none remain but the diagram
// is not yet minimal, searches count-preserving triangle moves until a new
// removal appears. The terminal crossing count is the self-intersection
// number of the traced word. A seed randomizes the removal order.
std::pair<Diagram, size_t> reduce_to_minimal(const Diagram& d,
                                             std::optional<unsigned> seed = std::nullopt);

// The diagram reduction starts from: the thickened block word at its
// best rotation, or a single chord for pure powers of one letter.
Diagram starting_diagram(const CyclicWord& w);

struct SIResult {
  CyclicWord word;
  long si;
  std::vector<std::string> methods;
  bool agreed;
};

struct SIOptions {
  bool with_bigon = false;
  bool linked_only = false;
};

SIResult si_exact(const CyclicWord& w, const SIOptions& opts = {});

}  // namespace pants
