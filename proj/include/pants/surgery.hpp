// Word surgeries: capital-run inversion toward an all-lowercase word of the
// same letter-family counts, and cutting a curve into two loops at a crossing.
#pragma once

#include <utility>

#include "pants/diagram.hpp"
#include "pants/word.hpp"

namespace pants {

// Inverts the first (in canonical rotation order) maximal cyclic run of
// capital letters and relinks the remainder of the word around it. Keeps
// length and the alpha/beta counts, strictly decreases the capital count.
CyclicWord positivize_step(const CyclicWord& w);

// Drives positivize_step until no capitals remain, starting from the inverse
// when the word is all capitals. Length and alpha/beta counts are preserved.
CyclicWord positivize(const CyclicWord& w);

// Cuts the curve at one crossing of the diagram: the two loops that meet
// there become separate cyclic words, listed as (arcs after the later arc
// through the earlier one, arcs strictly between the two).
std::pair<CyclicWord, CyclicWord> split_at_crossing(const Diagram& d, const Crossing& p);

}  // namespace pants
