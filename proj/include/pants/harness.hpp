// Exhaustive enumeration of reduced cyclic words, per-length surveys with
// claim checking, finite SI-level scans, and deterministic table export.
#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pants/word.hpp"

namespace pants {

struct LengthSurvey {
  long L = 0;
  size_t class_count = 0;
  std::map<long, size_t> si_histogram;
  long max_si = 0;
  long min_si = 0;
  std::vector<CyclicWord> maximizers;
  std::vector<CyclicWord> minimizers;
  std::vector<std::pair<std::string, CyclicWord>> violations;
};

// Every reduced cyclic word of length L exactly once, canonical spellings in
// ascending rank order. With up_to_inverse, one representative per inverse
// pair (the smaller canonical form).
std::vector<CyclicWord> enumerate_words(long L, bool up_to_inverse = false);

// Runs the exact count over every class of length L and records any claim
// failures: extremal values and sets, per-word bound sandwiches, the odd
// special cases, and the family floor for positive words. jobs = 0 uses all
// available cores.
LengthSurvey survey(long L, unsigned jobs = 0);

// All classes whose exact count equals k; complete because a class of length
// L has count at least lower_bound(L), so only L <= 2k+2 can contribute.
std::vector<CyclicWord> classes_with_si(long k, unsigned jobs = 0);

std::string surveys_to_csv(const std::vector<LengthSurvey>& surveys);
std::string surveys_to_json(const std::vector<LengthSurvey>& surveys);

// Writes the chosen format to path; byte-identical across reruns.
void export_surveys(const std::vector<LengthSurvey>& surveys, const std::string& format,
                    const std::string& path);

}  // namespace pants
