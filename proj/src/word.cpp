#include "pants/word.hpp"

#include <algorithm>

namespace pants {

bool rank_less(std::string_view x, std::string_view y) {
  size_t n = std::min(x.size(), y.size());
  for (size_t i = 0; i < n; ++i) {
    int rx = letter_rank(x[i]), ry = letter_rank(y[i]);
    if (rx != ry) return rx < ry;
  }
  return x.size() < y.size();
}

std::string parse_letters(std::string_view s) {
  for (char c : s) {
    if (!is_letter(c)) throw Error(ErrorCode::ParseError, std::string("invalid letter '") + c + "'");
  }
  return std::string(s);
}

std::string reduce(std::string_view w) {
  std::string out;
  out.reserve(w.size());
  for (char c : w) {
    if (!is_letter(c)) throw Error(ErrorCode::ParseError, std::string("invalid letter '") + c + "'");
    if (!out.empty() && out.back() == inv(c)) {
      out.pop_back();
    } else {
      out.push_back(c);
    }
  }
  return out;
}

std::string invert_linear(std::string_view w) {
  std::string out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inv(*it));
  return out;
}

static std::string cyclic_reduce(std::string s) {
  while (s.size() >= 2 && s.front() == inv(s.back())) {
    s.erase(s.begin());
    s.pop_back();
  }
  return s;
}

static std::string least_rotation(const std::string& s) {
  std::string best = s;
  std::string cur = s;
  for (size_t r = 1; r < s.size(); ++r) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    if (rank_less(cur, best)) best = cur;
  }
  return best;
}

CyclicWord CyclicWord::from_linear(std::string_view s) {
  std::string r = cyclic_reduce(reduce(s));
  if (r.empty()) throw Error(ErrorCode::EmptyWord, "word reduces to the empty class");
  return CyclicWord(least_rotation(r));
}

char CyclicWord::at(long i) const {
  long L = static_cast<long>(canon_.size());
  long m = ((i % L) + L) % L;
  return canon_[static_cast<size_t>(m)];
}

std::string CyclicWord::rotation(size_t r) const {
  std::string out = canon_;
  std::rotate(out.begin(), out.begin() + static_cast<long>(r % canon_.size()), out.end());
  return out;
}

CyclicWord CyclicWord::inverse() const { return from_linear(invert_linear(canon_)); }

bool CyclicWord::operator<(const CyclicWord& o) const { return rank_less(canon_, o.canon_); }

std::pair<int, int> alpha_beta_counts(const CyclicWord& w) {
  int alpha = 0, beta = 0;
  for (char c : w.str()) (is_alpha_letter(c) ? alpha : beta)++;
  return {alpha, beta};
}

bool is_positive(const CyclicWord& w) {
  bool has[4] = {false, false, false, false};
  for (char c : w.str()) has[letter_rank(c)] = true;
  return !(has[0] && has[2]) && !(has[1] && has[3]);
}

int BlockDecomposition::length() const {
  int L = 0;
  for (int i = 0; i < n; ++i) L += alpha_exps[i] + beta_exps[i];
  return L;
}

std::string BlockDecomposition::linear_word() const {
  std::string out;
  for (int i = 0; i < n; ++i) {
    out.append(static_cast<size_t>(alpha_exps[i]), alpha_signs[i]);
    out.append(static_cast<size_t>(beta_exps[i]), beta_signs[i]);
  }
  return out;
}

CyclicWord BlockDecomposition::reconstruct() const { return CyclicWord::from_linear(linear_word()); }

BlockDecomposition BlockDecomposition::rotated(int i) const {
  BlockDecomposition out = *this;
  int shift = ((i % n) + n) % n;
  for (int j = 0; j < n; ++j) {
    out.alpha_signs[j] = alpha_signs[(j + shift) % n];
    out.beta_signs[j] = beta_signs[(j + shift) % n];
    out.alpha_exps[j] = alpha_exps[(j + shift) % n];
    out.beta_exps[j] = beta_exps[(j + shift) % n];
  }
  return out;
}

BlockDecomposition block_decomposition(const CyclicWord& w) {
  const std::string& c = w.str();
  long L = static_cast<long>(c.size());
  long anchor = -1;
  for (long i = 0; i < L; ++i) {
    if (is_alpha_letter(c[static_cast<size_t>(i)]) && is_beta_letter(w.at(i - 1))) {
      anchor = i;
      break;
    }
  }
  if (anchor < 0) throw Error(ErrorCode::PurePower, "word uses a single generator class");

  BlockDecomposition d;
  d.anchor_offset = static_cast<int>(anchor);
  long i = anchor;
  while (i < anchor + L) {
    char alpha = w.at(i);
    int ae = 0;
    while (ae < L && w.at(i) == alpha) ++ae, ++i;
    char beta = w.at(i);
    int be = 0;
    while (be < L && w.at(i) == beta) ++be, ++i;
    d.alpha_signs.push_back(alpha);
    d.beta_signs.push_back(beta);
    d.alpha_exps.push_back(ae);
    d.beta_exps.push_back(be);
    ++d.n;
  }
  return d;
}

CyclicWord skeleton_word(const CyclicWord& w) {
  BlockDecomposition d = block_decomposition(w);
  std::string s;
  for (int i = 0; i < d.n; ++i) {
    s.push_back(d.alpha_signs[i]);
    s.push_back(d.beta_signs[i]);
  }
  return CyclicWord::from_linear(s);
}

std::pair<CyclicWord, int> primitive_root(const CyclicWord& w) {
  const std::string& c = w.str();
  size_t L = c.size();
  for (size_t d = 1; d < L; ++d) {
    if (L % d != 0) continue;
    bool periodic = true;
    for (size_t i = 0; i + d < L && periodic; ++i) {
      if (c[i] != c[i + d]) periodic = false;
    }
    if (periodic) return {CyclicWord::from_linear(c.substr(0, d)), static_cast<int>(L / d)};
  }
  return {w, 1};
}

}  // namespace pants
