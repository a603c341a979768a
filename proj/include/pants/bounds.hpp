// Closed-form self-intersection bounds, the block-rotation bound, and the
// t-sequence identities they rest on.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pants/word.hpp"

namespace pants {

// Maximal SI over all reduced cyclic words of length L:
// (L^2+2L-4)/4 for even L, (L^2+2L-7)/4 for odd L >= 3, and 0 for L = 1.
long upper_bound(long L);

// Minimal SI at length L: L/2 - 1 (even), (L-1)/2 (odd).
long lower_bound(long L);

// (L^2-1)/4 for odd L >= 3, the conjectured exact odd maximum.
long odd_conjecture_bound(long L);

// The four word forms conjectured to attain the odd maximum at length L.
std::vector<CyclicWord> odd_max_forms(long L);

// Words attaining the minimum at length L.
std::vector<CyclicWord> min_forms(long L);

// Every class with SI k has length at most 2k+2.
long max_length_for_si(long k);

// sqrt(5+4k) - 1: the shortest combinatorial length forced by SI >= k.
double basmajian_m(long k);

// Exact form of "L >= basmajian_m(k)".
bool length_reaches(long L, long k);

// f(a_1..a_n, b_1..b_n) = sum_j (2j-1)(a_j + b_{n+1-j}).
long f_value(const BlockDecomposition& d);

// t_i = f applied to the block decomposition rotated by i; i = 0..n-1.
std::vector<long> t_sequence(const BlockDecomposition& d);

struct RotationBound {
  std::vector<long> t_values;
  int min_index = 0;
  long bound = 0;  // min t_i - n^2 + n - 1
};

RotationBound rotation_bound(const CyclicWord& w);

struct OddCaseCheck {
  bool applies = false;
  std::string reason;  // "L>3n", "n prime", "n power of 2", or "none"
};

// Hypotheses under which the odd-length bound (L^2-1)/4 is proven.
OddCaseCheck theo_odd_applies(const CyclicWord& w);

bool is_prime(long n);
bool is_power_of_two(long n);

struct BoundReport {
  long L = 0;
  long upper = 0;
  long lower = 0;
  std::optional<long> odd_conjecture;
  std::optional<RotationBound> rotation;   // absent for pure powers
  std::optional<OddCaseCheck> odd_case;    // absent for even L or pure powers
  std::vector<CyclicWord> max_forms;       // known/conjectured maximizers at L
  std::vector<CyclicWord> min_forms;       // known minimizers at L
};

BoundReport bound_report_for_length(long L);
BoundReport bound_report(const CyclicWord& w);

}  // namespace pants
