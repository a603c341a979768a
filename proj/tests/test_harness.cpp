// Tests for word enumeration, length surveys, SI-level scans, and export.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "pants/harness.hpp"
#include "pants/si.hpp"

using namespace pants;

namespace {

CyclicWord W(const char* s) { return CyclicWord::from_linear(s); }

bool cyclically_reduced(const std::string& s) {
  size_t L = s.size();
  for (size_t i = 0; i < L; ++i)
    if (s[(i + 1) % L] == inv(s[i])) return false;
  return true;
}

std::set<std::string> brute_classes(size_t L) {
  const char alphabet[4] = {'a', 'b', 'A', 'B'};
  std::set<std::string> out;
  std::vector<int> digit(L, 0);
  while (true) {
    std::string s(L, 'a');
    for (size_t i = 0; i < L; ++i) s[i] = alphabet[digit[i]];
    if (cyclically_reduced(s)) out.insert(CyclicWord::from_linear(s).str());
    size_t i = 0;
    while (i < L && digit[i] == 3) digit[i++] = 0;
    if (i == L) break;
    ++digit[i];
  }
  return out;
}

}  // namespace

TEST_CASE("length one enumerates the four generators") {
  std::vector<CyclicWord> ws = enumerate_words(1);
  REQUIRE(ws.size() == 4);
  CHECK(ws[0] == W("a"));
  CHECK(ws[1] == W("b"));
  CHECK(ws[2] == W("A"));
  CHECK(ws[3] == W("B"));
}

TEST_CASE("enumeration matches the brute-force class filter") {
  for (size_t L = 1; L <= 8; ++L) {
    std::vector<CyclicWord> ws = enumerate_words(static_cast<long>(L));
    std::set<std::string> brute = brute_classes(L);
    CHECK(ws.size() == brute.size());
    for (const CyclicWord& w : ws) CHECK(brute.count(w.str()) == 1);
  }
}

TEST_CASE("class counts by length are pinned") {
  const size_t expected[10] = {4, 8, 12, 26, 52, 132, 316, 836, 2196, 5936};
  for (long L = 1; L <= 10; ++L) CHECK(enumerate_words(L).size() == expected[L - 1]);
}

TEST_CASE("enumeration is sorted and deterministic") {
  std::vector<CyclicWord> a = enumerate_words(6);
  std::vector<CyclicWord> b = enumerate_words(6);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
  for (size_t i = 0; i + 1 < a.size(); ++i) CHECK(a[i] < a[i + 1]);
}

TEST_CASE("inverse-folded enumeration still covers every class") {
  for (long L : {3L, 5L, 6L}) {
    std::vector<CyclicWord> all = enumerate_words(L, false);
    std::vector<CyclicWord> half = enumerate_words(L, true);
    CHECK(half.size() < all.size());
    std::set<std::string> covered;
    for (const CyclicWord& w : half) {
      covered.insert(w.str());
      covered.insert(w.inverse().str());
      CHECK(!(w.inverse() < w));
    }
    CHECK(covered.size() == all.size());
  }
}

TEST_CASE("survey of length four matches the published extremes") {
  LengthSurvey sv = survey(4);
  CHECK(sv.class_count == 26);
  CHECK(sv.max_si == 5);
  REQUIRE(sv.maximizers.size() == 2);
  CHECK(sv.maximizers[0] == W("aBaB"));
  CHECK(sv.maximizers[1] == W("AbAb"));
  CHECK(sv.min_si == 1);
  std::set<std::string> mins;
  for (const CyclicWord& w : sv.minimizers) mins.insert(w.str());
  CHECK(mins.count(W("abab").str()) == 1);
  CHECK(mins.count(W("ABAB").str()) == 1);
  CHECK(sv.violations.empty());
}

TEST_CASE("survey of length two lists all six extremal words") {
  LengthSurvey sv = survey(2);
  CHECK(sv.class_count == 8);
  CHECK(sv.max_si == 1);
  CHECK(sv.maximizers.size() == 6);
  CHECK(sv.min_si == 0);
  REQUIRE(sv.minimizers.size() == 2);
  CHECK(sv.minimizers[0] == W("ab"));
  CHECK(sv.minimizers[1] == W("AB"));
  CHECK(sv.violations.empty());
}

TEST_CASE("survey of length five confirms the odd pattern") {
  LengthSurvey sv = survey(5);
  CHECK(sv.max_si == 6);
  REQUIRE(sv.maximizers.size() == 4);
  std::set<std::string> maxers;
  for (const CyclicWord& w : sv.maximizers) maxers.insert(w.str());
  CHECK(maxers == std::set<std::string>{W("aaBaB").str(), W("aBaBB").str(), W("AAbAb").str(),
                                        W("AbAbb").str()});
  CHECK(sv.min_si == 2);
  CHECK(sv.violations.empty());
}

TEST_CASE("survey bookkeeping stays internally consistent") {
  for (long L : {1L, 3L, 6L}) {
    LengthSurvey sv = survey(L);
    size_t total = 0;
    for (const auto& [value, count] : sv.si_histogram) total += count;
    CHECK(total == sv.class_count);
    CHECK(sv.si_histogram.begin()->first == sv.min_si);
    CHECK(sv.si_histogram.rbegin()->first == sv.max_si);
    CHECK(sv.violations.empty());
  }
}

TEST_CASE("surveys are reproducible across runs and job counts") {
  LengthSurvey a = survey(6, 1);
  LengthSurvey b = survey(6, 4);
  CHECK(a.class_count == b.class_count);
  CHECK(a.si_histogram == b.si_histogram);
  REQUIRE(a.maximizers.size() == b.maximizers.size());
  for (size_t i = 0; i < a.maximizers.size(); ++i) CHECK(a.maximizers[i] == b.maximizers[i]);
  CHECK(surveys_to_json({a}) == surveys_to_json({b}));
}

TEST_CASE("level scan at zero returns the six simple classes") {
  std::vector<CyclicWord> zs = classes_with_si(0);
  REQUIRE(zs.size() == 6);
  std::set<std::string> got;
  for (const CyclicWord& w : zs) got.insert(w.str());
  CHECK(got == std::set<std::string>{"a", "b", "A", "B", "ab", "AB"});
}

TEST_CASE("level scans agree with direct recomputation") {
  for (long k : {1L, 2L}) {
    std::vector<CyclicWord> ws = classes_with_si(k);
    std::set<std::string> got;
    for (const CyclicWord& w : ws) {
      CHECK(si_exact(w, {.linked_only = true}).si == k);
      got.insert(w.str());
    }
    for (long L = 1; L <= 2 * k + 2; ++L)
      for (const CyclicWord& w : enumerate_words(L))
        if (si_exact(w, {.linked_only = true}).si == k) CHECK(got.count(w.str()) == 1);
  }
  std::set<std::string> ones;
  for (const CyclicWord& w : classes_with_si(1)) ones.insert(w.str());
  for (const char* s : {"aa", "AA", "bb", "BB", "aB", "bA"}) CHECK(ones.count(s) == 1);
}

TEST_CASE("csv export uses the fixed schema") {
  std::vector<LengthSurvey> svs = {survey(2), survey(3)};
  std::string csv = surveys_to_csv(svs);
  std::istringstream in(csv);
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line == "L,class_count,max_si,min_si,maximizers,minimizers,violations");
  REQUIRE(std::getline(in, line));
  CHECK(line.substr(0, 4) == "2,8,");
  REQUIRE(std::getline(in, line));
  CHECK(line.substr(0, 5) == "3,12,");
  CHECK(!std::getline(in, line));
  CHECK(csv == surveys_to_csv({survey(2), survey(3)}));
}

TEST_CASE("json export mirrors the survey fields") {
  std::string text = surveys_to_json({survey(2)});
  nlohmann::json parsed = nlohmann::json::parse(text);
  REQUIRE(parsed.is_array());
  REQUIRE(parsed.size() == 1);
  const nlohmann::json& o = parsed[0];
  CHECK(o["L"] == 2);
  CHECK(o["class_count"] == 8);
  CHECK(o["max_si"] == 1);
  CHECK(o["min_si"] == 0);
  CHECK(o["si_histogram"]["0"] == 2);
  CHECK(o["si_histogram"]["1"] == 6);
  CHECK(o["maximizers"].size() == 6);
  CHECK(o["minimizers"] == nlohmann::json::array({"ab", "AB"}));
  CHECK(o["violations"].empty());
}

TEST_CASE("export writes files and reports failures") {
  std::vector<LengthSurvey> svs = {survey(2)};
  const char* path = "harness_export_test.csv";
  export_surveys(svs, "csv", path);
  std::ifstream f(path);
  REQUIRE(f.good());
  std::stringstream buf;
  buf << f.rdbuf();
  CHECK(buf.str() == surveys_to_csv(svs));
  f.close();
  std::remove(path);
  try {
    export_surveys(svs, "xml", path);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code == ErrorCode::ParseError);
  }
  try {
    export_surveys(svs, "csv", "no-such-dir/out.csv");
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code == ErrorCode::IOFailure);
  }
}
