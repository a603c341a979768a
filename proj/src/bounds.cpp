#include "pants/bounds.hpp"

#include <algorithm>
#include <cmath>

namespace pants {

long upper_bound(long L) {
  if (L < 1) throw Error(ErrorCode::ParseError, "length must be positive");
  if (L == 1) return 0;
  return (L % 2 == 0) ? (L * L + 2 * L - 4) / 4 : (L * L + 2 * L - 7) / 4;
}

long lower_bound(long L) {
  if (L < 1) throw Error(ErrorCode::ParseError, "length must be positive");
  return (L % 2 == 0) ? L / 2 - 1 : (L - 1) / 2;
}

long odd_conjecture_bound(long L) {
  if (L % 2 == 0 || L < 3) throw Error(ErrorCode::EvenLength, "length must be odd and at least 3");
  return (L * L - 1) / 4;
}

static std::string repeated(const std::string& unit, long k) {
  std::string s;
  for (long i = 0; i < k; ++i) s += unit;
  return s;
}

std::vector<CyclicWord> odd_max_forms(long L) {
  if (L % 2 == 0 || L < 3) throw Error(ErrorCode::EvenLength, "length must be odd and at least 3");
  long k = (L - 1) / 2;
  std::vector<CyclicWord> out = {
      CyclicWord::from_linear(repeated("aB", k) + "B"),
      CyclicWord::from_linear("a" + repeated("aB", k)),
      CyclicWord::from_linear(repeated("Ab", k) + "b"),
      CyclicWord::from_linear("A" + repeated("Ab", k)),
  };
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CyclicWord> min_forms(long L) {
  if (L < 1) throw Error(ErrorCode::ParseError, "length must be positive");
  std::vector<CyclicWord> out;
  if (L == 1) {
    for (const char* s : {"a", "b", "A", "B"}) out.push_back(CyclicWord::from_linear(s));
  } else if (L % 2 == 0) {
    out.push_back(CyclicWord::from_linear(repeated("ab", L / 2)));
    out.push_back(CyclicWord::from_linear(repeated("AB", L / 2)));
  } else {
    long k = (L - 1) / 2;
    for (const char* head : {"a", "b"}) out.push_back(CyclicWord::from_linear(head + repeated("ab", k)));
    for (const char* head : {"A", "B"}) out.push_back(CyclicWord::from_linear(head + repeated("AB", k)));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

long max_length_for_si(long k) { return 2 * k + 2; }

double basmajian_m(long k) { return std::sqrt(5.0 + 4.0 * static_cast<double>(k)) - 1.0; }

bool length_reaches(long L, long k) { return (L + 1) * (L + 1) >= 5 + 4 * k; }

long f_value(const BlockDecomposition& d) {
  long f = 0;
  for (int j = 1; j <= d.n; ++j) {
    f += (2L * j - 1) * (d.alpha_exps[j - 1] + d.beta_exps[d.n - j]);
  }
  return f;
}

std::vector<long> t_sequence(const BlockDecomposition& d) {
  std::vector<long> t;
  t.reserve(static_cast<size_t>(d.n));
  for (int i = 0; i < d.n; ++i) t.push_back(f_value(d.rotated(i)));
  return t;
}

RotationBound rotation_bound(const CyclicWord& w) {
  BlockDecomposition d = block_decomposition(w);
  RotationBound rb;
  rb.t_values = t_sequence(d);
  rb.min_index = static_cast<int>(std::min_element(rb.t_values.begin(), rb.t_values.end()) - rb.t_values.begin());
  long n = d.n;
  rb.bound = rb.t_values[static_cast<size_t>(rb.min_index)] - n * n + n - 1;
  return rb;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

bool is_power_of_two(long n) { return n >= 1 && (n & (n - 1)) == 0; }

OddCaseCheck theo_odd_applies(const CyclicWord& w) {
  long L = static_cast<long>(w.length());
  if (L % 2 == 0) throw Error(ErrorCode::EvenLength, "length must be odd");
  BlockDecomposition d = block_decomposition(w);
  long n = d.n;
  if (L > 3 * n) return {true, "L>3n"};
  if (is_prime(n)) return {true, "n prime"};
  if (is_power_of_two(n)) return {true, "n power of 2"};
  return {false, "none"};
}

BoundReport bound_report_for_length(long L) {
  BoundReport r;
  r.L = L;
  r.upper = upper_bound(L);
  r.lower = lower_bound(L);
  if (L % 2 == 1 && L >= 3) {
    r.odd_conjecture = odd_conjecture_bound(L);
    r.max_forms = odd_max_forms(L);
  } else if (L == 2) {
    for (const char* s : {"aa", "bb", "AA", "BB", "aB", "Ab"}) r.max_forms.push_back(CyclicWord::from_linear(s));
    std::sort(r.max_forms.begin(), r.max_forms.end());
  } else if (L % 2 == 0) {
    r.max_forms.push_back(CyclicWord::from_linear(repeated("aB", L / 2)));
    r.max_forms.push_back(CyclicWord::from_linear(repeated("Ab", L / 2)));
    std::sort(r.max_forms.begin(), r.max_forms.end());
  } else {
    for (const char* s : {"a", "b", "A", "B"}) r.max_forms.push_back(CyclicWord::from_linear(s));
  }
  r.min_forms = min_forms(L);
  return r;
}

BoundReport bound_report(const CyclicWord& w) {
  BoundReport r = bound_report_for_length(static_cast<long>(w.length()));
  try {
    r.rotation = rotation_bound(w);
    if (r.L % 2 == 1) r.odd_case = theo_odd_applies(w);
  } catch (const Error& e) {
    if (e.code != ErrorCode::PurePower) throw;
  }
  return r;
}

}  // namespace pants
