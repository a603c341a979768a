// Tests for linear reduction, cyclic canonical forms, and block decompositions.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pants/word.hpp"

using namespace pants;

TEST_CASE("linear reduction cancels inverse pairs") {
  CHECK(reduce("aAb") == "b");
  CHECK(reduce("abBA") == "");
  CHECK(reduce("aBbA") == "");
  CHECK(reduce("abAB") == "abAB");
  CHECK(reduce("baaAAb") == "bb");
}

TEST_CASE("parse rejects foreign characters") {
  CHECK_THROWS_AS(parse_letters("abc"), Error);
  CHECK_THROWS_AS(parse_letters("a b"), Error);
  try {
    parse_letters("ax");
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code == ErrorCode::ParseError);
  }
}

TEST_CASE("letter order is a, b, A, B") {
  CHECK(letter_rank('a') == 0);
  CHECK(letter_rank('b') == 1);
  CHECK(letter_rank('A') == 2);
  CHECK(letter_rank('B') == 3);
  CHECK(rank_less("aB", "bA"));
  CHECK(rank_less("ab", "abA"));
  CHECK(!rank_less("bA", "aB"));
}

TEST_CASE("canonical form is the least rotation") {
  CHECK(CyclicWord::from_linear("aB").str() == "aB");
  CHECK(CyclicWord::from_linear("Ba").str() == "aB");
  CHECK(CyclicWord::from_linear("Ab").str() == "bA");
  CHECK(CyclicWord::from_linear("AbAbAb").str() == "bAbAbA");
  CHECK(CyclicWord::from_linear("ababab").str() == "ababab");
  CHECK(CyclicWord::from_linear("AbabAb").str() == "abAbAb");
  CHECK(CyclicWord::from_linear("AAbabAbb").str() == "abAbbAAb");
  CHECK(CyclicWord::from_linear("aaBaBaB").str() == "aaBaBaB");
  CHECK(CyclicWord::from_linear("Babba").str() == "abbaB");
}

TEST_CASE("canonical form never exceeds any rotation") {
  for (const char* s : {"aB", "abAB", "AAbabAbb", "BBaab", "bbbAba"}) {
    CyclicWord w = CyclicWord::from_linear(s);
    for (size_t k = 0; k < w.length(); ++k) {
      std::string r = w.rotation(k);
      CHECK(!rank_less(r, w.str()));
      CHECK(CyclicWord::from_linear(r) == w);
    }
  }
}

TEST_CASE("cyclic reduction removes wrap-around cancellations") {
  CHECK(CyclicWord::from_linear("baB").str() == "a");
  CHECK(CyclicWord::from_linear("AbaBBa").str() == "aB");
  CHECK_THROWS_AS(CyclicWord::from_linear(""), Error);
  CHECK_THROWS_AS(CyclicWord::from_linear("aA"), Error);
  CHECK_THROWS_AS(CyclicWord::from_linear("abBA"), Error);
  try {
    CyclicWord::from_linear("BAab");
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code == ErrorCode::EmptyWord);
  }
}

TEST_CASE("indexing is safe modulo the length") {
  CyclicWord w = CyclicWord::from_linear("aaB");
  CHECK(w.at(0) == 'a');
  CHECK(w.at(2) == 'B');
  CHECK(w.at(3) == 'a');
  CHECK(w.at(-1) == 'B');
  CHECK(w.at(-4) == 'B');
}

TEST_CASE("inversion is an involution on classes") {
  CHECK(invert_linear("aaB") == "bAA");
  CHECK(CyclicWord::from_linear("aaB").inverse().str() == "bAA");
  CHECK(CyclicWord::from_linear("ab").inverse().str() == "AB");
  for (const char* s : {"aB", "aaB", "AAbabAbb", "Babba"}) {
    CyclicWord w = CyclicWord::from_linear(s);
    CHECK(w.inverse().inverse() == w);
  }
}

TEST_CASE("generator counts split by case") {
  auto [al, be] = alpha_beta_counts(CyclicWord::from_linear("aaB"));
  CHECK(al == 2);
  CHECK(be == 1);
  auto [al2, be2] = alpha_beta_counts(CyclicWord::from_linear("AbabAb"));
  CHECK(al2 == 3);
  CHECK(be2 == 3);
}

TEST_CASE("positivity means no generator meets its inverse") {
  CHECK(is_positive(CyclicWord::from_linear("aB")));
  CHECK(is_positive(CyclicWord::from_linear("AB")));
  CHECK(is_positive(CyclicWord::from_linear("abab")));
  CHECK(!is_positive(CyclicWord::from_linear("abAb")));
  CHECK(!is_positive(CyclicWord::from_linear("Babba")));
}

TEST_CASE("block decomposition of a mixed word") {
  CyclicWord w = CyclicWord::from_linear("AAbabAbb");
  BlockDecomposition d = block_decomposition(w);
  CHECK(d.n == 3);
  CHECK(d.anchor_offset == 0);
  CHECK(d.alpha_signs == std::vector<char>{'a', 'A', 'A'});
  CHECK(d.alpha_exps == std::vector<int>{1, 1, 2});
  CHECK(d.beta_signs == std::vector<char>{'b', 'b', 'b'});
  CHECK(d.beta_exps == std::vector<int>{1, 2, 1});
  CHECK(d.length() == 8);
  CHECK(d.reconstruct() == w);
}

TEST_CASE("block decomposition anchors on an alpha run") {
  CyclicWord w = CyclicWord::from_linear("aaBaBaB");
  BlockDecomposition d = block_decomposition(w);
  CHECK(d.n == 3);
  CHECK(d.alpha_exps == std::vector<int>{2, 1, 1});
  CHECK(d.beta_exps == std::vector<int>{1, 1, 1});
  CHECK(d.alpha_signs == std::vector<char>{'a', 'a', 'a'});
  CHECK(d.beta_signs == std::vector<char>{'B', 'B', 'B'});
  CHECK(d.reconstruct() == w);
}

TEST_CASE("words in one generator class have no block decomposition") {
  for (const char* s : {"a", "aa", "B", "BBB"}) {
    try {
      block_decomposition(CyclicWord::from_linear(s));
      FAIL("expected throw");
    } catch (const Error& e) {
      CHECK(e.code == ErrorCode::PurePower);
    }
  }
}

TEST_CASE("rotating a decomposition shifts its blocks") {
  BlockDecomposition d = block_decomposition(CyclicWord::from_linear("AAbabAbb"));
  BlockDecomposition r = d.rotated(1);
  CHECK(r.alpha_exps == std::vector<int>{1, 2, 1});
  CHECK(r.beta_exps == std::vector<int>{2, 1, 1});
  CHECK(r.alpha_signs == std::vector<char>{'A', 'A', 'a'});
  CHECK(d.rotated(3).alpha_exps == d.alpha_exps);
  CHECK(d.rotated(-1).alpha_exps == d.rotated(2).alpha_exps);
  CHECK(r.reconstruct() == d.reconstruct());
}

TEST_CASE("skeleton word keeps signs and drops exponents") {
  CHECK(skeleton_word(CyclicWord::from_linear("AAbabAbb")).str() == "abAbAb");
  CHECK(skeleton_word(CyclicWord::from_linear("aaBaBaB")).str() == "aBaBaB");
  CHECK(skeleton_word(CyclicWord::from_linear("aB")).str() == "aB");
}

TEST_CASE("primitive root extraction") {
  auto [r1, k1] = primitive_root(CyclicWord::from_linear("abab"));
  CHECK(r1.str() == "ab");
  CHECK(k1 == 2);
  auto [r2, k2] = primitive_root(CyclicWord::from_linear("aaB"));
  CHECK(r2.str() == "aaB");
  CHECK(k2 == 1);
  auto [r3, k3] = primitive_root(CyclicWord::from_linear("AbAbAb"));
  CHECK(r3.str() == "bA");
  CHECK(k3 == 3);
  auto [r4, k4] = primitive_root(CyclicWord::from_linear("aaa"));
  CHECK(r4.str() == "a");
  CHECK(k4 == 3);
}
