// Capital-run inversion and curve splitting on the word level.
#include "pants/surgery.hpp"

#include <string>

namespace pants {

CyclicWord positivize_step(const CyclicWord& w) {
  const std::string& r = w.str();
  size_t L = r.size();
  size_t uppers = 0;
  for (char c : r)
    if (is_upper(c)) ++uppers;
  if (uppers == 0) throw Error(ErrorCode::AlreadyPositive, "word has no capital letters");
  if (uppers == L)
    throw Error(ErrorCode::AllCapitals, "word is all capitals; positivize its inverse instead");
  size_t s = 0;
  while (!(is_upper(r[s]) && is_lower(r[(s + L - 1) % L]))) ++s;
  size_t e = s;
  while (is_upper(r[(e + 1) % L])) e = (e + 1) % L;
  std::string run;
  for (size_t i = s;; i = (i + 1) % L) {
    run += r[i];
    if (i == e) break;
  }
  std::string rest;
  for (size_t i = (e + 1) % L; i != s; i = (i + 1) % L) rest += r[i];
  return CyclicWord::from_linear(rest + invert_linear(run));
}

CyclicWord positivize(const CyclicWord& w) {
  CyclicWord cur = w;
  auto capitals = [](const CyclicWord& v) {
    size_t n = 0;
    for (char c : v.str())
      if (is_upper(c)) ++n;
    return n;
  };
  size_t ups = capitals(cur);
  if (ups == cur.length()) {
    cur = cur.inverse();
    ups = capitals(cur);
  }
  while (ups > 0) {
    cur = positivize_step(cur);
    ups = capitals(cur);
  }
  return cur;
}

std::pair<CyclicWord, CyclicWord> split_at_crossing(const Diagram& d, const Crossing& p) {
  size_t L = d.arc_count();
  size_t mi = p.arcA, mj = p.arcB;
  if (mi > mj) std::swap(mi, mj);
  if (mj >= L || mi == mj)
    throw Error(ErrorCode::InvalidCrossing, "crossing does not join two distinct arcs of the diagram");
  std::string u = d.letters((mj + 1) % L, L - (mj - mi));
  std::string v = d.letters(mi + 1, mj - mi);
  try {
    return {CyclicWord::from_linear(u), CyclicWord::from_linear(v)};
  } catch (const Error& e) {
    if (e.code != ErrorCode::EmptyWord) throw;
    throw Error(ErrorCode::InvalidCrossing, "split loop is contractible; diagram is not minimal");
  }
}

}  // namespace pants
