// Tests for closed-form bounds, t-sequences, and the block-rotation bound.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "pants/bounds.hpp"

using namespace pants;

TEST_CASE("upper bound values") {
  CHECK(upper_bound(1) == 0);
  CHECK(upper_bound(2) == 1);
  CHECK(upper_bound(3) == 2);
  CHECK(upper_bound(4) == 5);
  CHECK(upper_bound(5) == 7);
  CHECK(upper_bound(6) == 11);
  CHECK(upper_bound(7) == 14);
  CHECK(upper_bound(12) == 41);
}

TEST_CASE("lower bound values") {
  CHECK(lower_bound(1) == 0);
  CHECK(lower_bound(2) == 0);
  CHECK(lower_bound(3) == 1);
  CHECK(lower_bound(4) == 1);
  CHECK(lower_bound(5) == 2);
  CHECK(lower_bound(6) == 2);
  CHECK(lower_bound(12) == 5);
}

TEST_CASE("odd-length maximum and its witnesses") {
  CHECK(odd_conjecture_bound(3) == 2);
  CHECK(odd_conjecture_bound(5) == 6);
  CHECK(odd_conjecture_bound(7) == 12);
  CHECK(odd_conjecture_bound(11) == 30);
  CHECK_THROWS_AS(odd_conjecture_bound(4), Error);
  CHECK_THROWS_AS(odd_conjecture_bound(1), Error);

  std::vector<CyclicWord> f3 = odd_max_forms(3);
  REQUIRE(f3.size() == 4);
  CHECK(f3[0].str() == "aaB");
  CHECK(f3[1].str() == "aBB");
  CHECK(f3[2].str() == "bbA");
  CHECK(f3[3].str() == "bAA");
  for (long L : {5L, 7L, 9L, 11L}) {
    std::vector<CyclicWord> f = odd_max_forms(L);
    CHECK(f.size() == 4);
    CHECK(std::set<CyclicWord>(f.begin(), f.end()).size() == 4);
    for (const CyclicWord& w : f) CHECK(static_cast<long>(w.length()) == L);
  }
}

TEST_CASE("minimum-value witnesses") {
  std::vector<CyclicWord> m6 = min_forms(6);
  REQUIRE(m6.size() == 2);
  CHECK(m6[0].str() == "ababab");
  CHECK(m6[1].str() == "ABABAB");
  std::vector<CyclicWord> m5 = min_forms(5);
  REQUIRE(m5.size() == 4);
  CHECK(m5[0].str() == "aabab");
  CHECK(m5[1].str() == "ababb");
  CHECK(m5[2].str() == "AABAB");
  CHECK(m5[3].str() == "ABABB");
  CHECK(min_forms(1).size() == 4);
}

TEST_CASE("shortest length reaching a given value") {
  CHECK(max_length_for_si(0) == 2);
  CHECK(max_length_for_si(1) == 4);
  CHECK(max_length_for_si(5) == 12);
  CHECK(basmajian_m(1) == doctest::Approx(2.0));
  CHECK(length_reaches(2, 1));
  CHECK(!length_reaches(2, 2));
  CHECK(length_reaches(3, 2));
}

TEST_CASE("t-sequence values for block words") {
  BlockDecomposition d = block_decomposition(CyclicWord::from_linear("aaBaBaB"));
  CHECK(f_value(d) == 19);
  CHECK(t_sequence(d) == std::vector<long>{19, 23, 21});

  RotationBound rb = rotation_bound(CyclicWord::from_linear("aaBaBaB"));
  CHECK(rb.t_values == std::vector<long>{19, 23, 21});
  CHECK(rb.min_index == 0);
  CHECK(rb.bound == 12);

  RotationBound rq = rotation_bound(CyclicWord::from_linear("Babba"));
  CHECK(rq.t_values == std::vector<long>{11, 9});
  CHECK(rq.min_index == 1);
  CHECK(rq.bound == 6);

  RotationBound rs = rotation_bound(CyclicWord::from_linear("aaB"));
  CHECK(rs.t_values == std::vector<long>{3});
  CHECK(rs.bound == 2);
}

static BlockDecomposition random_blocks(std::mt19937& rng) {
  std::uniform_int_distribution<int> nd(1, 8), ed(1, 5), sd(0, 1);
  BlockDecomposition d;
  d.n = nd(rng);
  d.anchor_offset = 0;
  for (int i = 0; i < d.n; ++i) {
    d.alpha_signs.push_back(sd(rng) ? 'A' : 'a');
    d.beta_signs.push_back(sd(rng) ? 'B' : 'b');
    d.alpha_exps.push_back(ed(rng));
    d.beta_exps.push_back(ed(rng));
  }
  return d;
}

TEST_CASE("t-sequence difference identities on random decompositions") {
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 1000; ++trial) {
    BlockDecomposition d = random_blocks(rng);
    long n = d.n;
    long sa = 0, sb = 0;
    for (int e : d.alpha_exps) sa += e;
    for (int e : d.beta_exps) sb += e;
    long L = sa + sb;
    std::vector<long> t = t_sequence(d);

    long sum = 0;
    for (long v : t) sum += v;
    CHECK(sum == n * n * L);

    for (int i = 0; i < n; ++i) {
      int ip = (i + 1) % static_cast<int>(n);
      long step = 2 * n * (d.alpha_exps[i] - d.beta_exps[i]) - 2 * (sa - sb);
      CHECK(t[static_cast<size_t>(ip)] - t[static_cast<size_t>(i)] == step);
      for (int j = 1; j < n; ++j) {
        long acc = 0;
        for (int m = 1; m <= j; ++m) {
          int idx = (i + m - 1) % static_cast<int>(n);
          acc += d.alpha_exps[idx] - d.beta_exps[idx];
        }
        long lhs = t[static_cast<size_t>((i + j) % n)] - t[static_cast<size_t>(i)];
        CHECK(lhs == 2 * n * acc - 2 * j * (sa - sb));
      }
    }

    if (L % 2 == 1 && ((is_prime(n) && L < 3 * n) || is_power_of_two(n))) {
      std::set<long> uniq(t.begin(), t.end());
      CHECK(uniq.size() == t.size());
    }

    std::vector<long> t2 = t_sequence(block_decomposition(d.reconstruct()));
    std::sort(t.begin(), t.end());
    std::sort(t2.begin(), t2.end());
    CHECK(t == t2);
  }
}

TEST_CASE("odd-case hypothesis check") {
  OddCaseCheck c1 = theo_odd_applies(CyclicWord::from_linear("aaBaBaB"));
  CHECK(c1.applies);
  CHECK(c1.reason == "n prime");
  OddCaseCheck c2 = theo_odd_applies(CyclicWord::from_linear("aaB"));
  CHECK(c2.applies);
  CHECK(c2.reason == "n power of 2");
  OddCaseCheck c3 = theo_odd_applies(CyclicWord::from_linear("aaaab"));
  CHECK(c3.applies);
  CHECK(c3.reason == "L>3n");
  OddCaseCheck c4 = theo_odd_applies(CyclicWord::from_linear("abababababb" "ab"));
  CHECK(!c4.applies);
  CHECK(c4.reason == "none");
  CHECK_THROWS_AS(theo_odd_applies(CyclicWord::from_linear("ab")), Error);
}

TEST_CASE("combined bound reports") {
  BoundReport r7 = bound_report_for_length(7);
  CHECK(r7.upper == 14);
  CHECK(r7.lower == 3);
  REQUIRE(r7.odd_conjecture.has_value());
  CHECK(*r7.odd_conjecture == 12);
  CHECK(r7.max_forms.size() == 4);
  CHECK(r7.min_forms.size() == 4);

  BoundReport r2 = bound_report_for_length(2);
  CHECK(r2.max_forms.size() == 6);
  CHECK(r2.min_forms.size() == 2);

  BoundReport rw = bound_report(CyclicWord::from_linear("aaBaBaB"));
  REQUIRE(rw.rotation.has_value());
  CHECK(rw.rotation->bound == 12);
  REQUIRE(rw.odd_case.has_value());
  CHECK(rw.odd_case->reason == "n prime");

  BoundReport rp = bound_report(CyclicWord::from_linear("aa"));
  CHECK(!rp.rotation.has_value());
  CHECK(rp.upper == 1);
}
