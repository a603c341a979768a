// Reduced linear and cyclic words over the alphabet {a, b, A, B}, canonical
// forms, block decomposition, and elementary word statistics.
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pants {

enum class ErrorCode {
  EmptyWord,
  PurePower,
  NotSkeleton,
  NonPrimitive,
  InvalidCrossing,
  DegeneratePosition,
  AlreadyPositive,
  AllCapitals,
  EvenLength,
  ParseError,
  IOFailure,
};

struct Error : std::runtime_error {
  ErrorCode code;
  Error(ErrorCode c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

inline bool is_letter(char c) { return c == 'a' || c == 'b' || c == 'A' || c == 'B'; }
inline bool is_upper(char c) { return c == 'A' || c == 'B'; }
inline bool is_lower(char c) { return c == 'a' || c == 'b'; }
inline bool is_alpha_letter(char c) { return c == 'a' || c == 'A'; }
inline bool is_beta_letter(char c) { return c == 'b' || c == 'B'; }

inline char inv(char c) {
  switch (c) {
    case 'a': return 'A';
    case 'A': return 'a';
    case 'b': return 'B';
    case 'B': return 'b';
  }
  throw Error(ErrorCode::ParseError, std::string("invalid letter '") + c + "'");
}

// Total order a < b < A < B used for canonical rotations.
inline int letter_rank(char c) {
  switch (c) {
    case 'a': return 0;
    case 'b': return 1;
    case 'A': return 2;
    case 'B': return 3;
  }
  throw Error(ErrorCode::ParseError, std::string("invalid letter '") + c + "'");
}

bool rank_less(std::string_view x, std::string_view y);

// Validates the charset; throws ParseError on anything outside [abAB].
std::string parse_letters(std::string_view s);

// Free reduction: iterated cancellation of adjacent x, inv(x). Idempotent.
std::string reduce(std::string_view w);

// Reverse the word and invert each letter (the group inverse of a linear word).
std::string invert_linear(std::string_view w);

class CyclicWord {
 public:
  // Reduces linearly and cyclically, then stores the lexicographically least
  // rotation under a < b < A < B. Throws EmptyWord if everything cancels.
  static CyclicWord from_linear(std::string_view s);

  const std::string& str() const { return canon_; }
  size_t length() const { return canon_.size(); }
  char at(long i) const;  // index taken mod length
  std::string rotation(size_t r) const;

  CyclicWord inverse() const;

  bool operator==(const CyclicWord& o) const { return canon_ == o.canon_; }
  bool operator!=(const CyclicWord& o) const { return canon_ != o.canon_; }
  bool operator<(const CyclicWord& o) const;

 private:
  explicit CyclicWord(std::string canon) : canon_(std::move(canon)) {}
  std::string canon_;
};

std::pair<int, int> alpha_beta_counts(const CyclicWord& w);

// No generator occurs together with its inverse.
bool is_positive(const CyclicWord& w);

struct BlockDecomposition {
  int n = 0;
  std::vector<char> alpha_signs;  // from {a, A}
  std::vector<char> beta_signs;   // from {b, B}
  std::vector<int> alpha_exps;
  std::vector<int> beta_exps;
  int anchor_offset = 0;  // canonical index where block 1 starts

  int length() const;
  std::string linear_word() const;  // alpha_1^{a_1} beta_1^{b_1} ...
  CyclicWord reconstruct() const;
  BlockDecomposition rotated(int i) const;  // block 1 becomes block 1+i
};

// Block 1 starts at the first alpha letter (in canonical order) whose cyclic
// predecessor is a beta letter. Throws PurePower for one-class words.
BlockDecomposition block_decomposition(const CyclicWord& w);

// The length-2n word of block signs.
CyclicWord skeleton_word(const CyclicWord& w);

// w = root^k with k maximal.
std::pair<CyclicWord, int> primitive_root(const CyclicWord& w);

}  // namespace pants
