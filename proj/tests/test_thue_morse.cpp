#include "doctest.h"

#include <set>

#include "cubefree/error.hpp"
#include "cubefree/oracle.hpp"
#include "cubefree/thue_morse.hpp"
#include "support.hpp"

using namespace cubefree;
using testing_support::w;

TEST_CASE("prefixes") {
  CHECK(tm_prefix(8).str() == "abbabaab");
  CHECK(tm_prefix(0).empty());
  CHECK(tm_prefix(16).str() == "abbabaabbaababba");
  for (std::size_t i = 1; i <= 300; ++i) CHECK(tm_prefix(300).at(i) == tm_letter(i));
}

TEST_CASE("ranges") {
  CHECK(tm_range(6, 16).str() == "aabbaababba");
  CHECK(tm_range(20, 30).str() == "babbaabbaba");
  CHECK(tm_range(1, 1).str() == "a");
  CHECK_THROWS_AS(tm_range(0, 3), PreconditionError);
  CHECK_THROWS_AS(tm_range(5, 4), PreconditionError);
  CHECK_THROWS_AS(tm_range(1, (std::size_t{1} << 27)), ResourceLimitError);
}

TEST_CASE("factors") {
  CHECK(is_tm_factor(w("abba")));
  CHECK_FALSE(is_tm_factor(w("aaa")));
  CHECK_FALSE(is_tm_factor(w("aabaa")));
  CHECK(is_tm_factor(Word()));
  CHECK(tm_first_occurrence(w("abbabaab")) == 1u);
  CHECK_THROWS_AS(is_tm_factor(Word::parse("abc")), PreconditionError);
}

TEST_CASE("find_occurrence_after") {
  CHECK(find_occurrence_after(w("ab"), 1) == 1);
  // T = abbabaab...: T[2..3] = bb, T[3..4] = ba, T[4..5] = ab.
  CHECK(find_occurrence_after(w("ab"), 2) == 4);
  CHECK_THROWS_AS(find_occurrence_after(w("aabaa"), 1), PreconditionError);
  for (std::size_t start = 1; start < 200; start += 7) {
    Word p = w("abba");
    std::size_t i = find_occurrence_after(p, start);
    CHECK(i >= start);
    CHECK(tm_range(i, i + p.size() - 1) == p);
  }
}

TEST_CASE("splice_pattern") {
  Word s = splice_pattern(w("ab"), w("ba"));
  CHECK(s.starts_with(w("ab")));
  CHECK(s.ends_with(w("ba")));
  CHECK(s.size() >= 5);
  CHECK(is_tm_factor(s));

  Word t = splice_pattern(w("a"), w("a"));
  CHECK(t.size() >= 3);
  CHECK(t.starts_with(w("a")));
  CHECK(t.ends_with(w("a")));
  CHECK(is_tm_factor(t));

  CHECK(splice_pattern(Word(), Word()).size() == 1);
  CHECK_THROWS_AS(splice_pattern(w("aaa"), w("a")), PreconditionError);
}

TEST_CASE("the search window holds every factor of the length in question") {
  Word t = tm_prefix(1 << 14);
  for (std::size_t len = 1; len <= 16; ++len) {
    std::set<std::string> exhaustive;
    for (std::size_t i = 1; i + len - 1 <= t.size(); ++i) {
      exhaustive.insert(t.factor(i, i + len - 1).str());
    }
    for (const std::string& f : exhaustive) CHECK(is_tm_factor(w(f)));
    for (const Word& x : testing_support::all_words(2, len)) {
      if (!exhaustive.count(x.str())) CHECK_FALSE(is_tm_factor(x));
    }
  }
}

TEST_CASE("factors are closed under reversal and uniform") {
  Word t = tm_prefix(4096);
  for (std::size_t len = 1; len <= 20; ++len) {
    std::set<std::string> seen;
    for (std::size_t i = 1; i + len - 1 <= t.size(); ++i) {
      Word f = t.factor(i, i + len - 1);
      if (!seen.insert(f.str()).second) continue;
      if (len <= 12) CHECK(is_tm_factor(reverse(f)));
      for (const char* bad : {"aabaa", "aababaa", "bbabb", "bbababb"}) {
        CHECK(f.str().find(bad) == std::string::npos);
      }
    }
  }
}
