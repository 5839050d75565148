#include "doctest.h"

#include "cubefree/analysis.hpp"
#include "cubefree/extend.hpp"
#include "cubefree/oracle.hpp"
#include "cubefree/thue_morse.hpp"
#include "cubefree/transition.hpp"
#include "support.hpp"

using namespace cubefree;
using testing_support::all_words;
using testing_support::cube_free_up_to;
using testing_support::Gen;
using testing_support::w;

namespace {

Word window(const Word& u, const TailCertificate& c) {
  Word full = u + c.pad;
  full.append(tm_range(c.r, c.r + verification_length(u, c)));
  return full;
}

bool contains(const Word& hay, const Word& needle) {
  return hay.str().find(needle.str()) != std::string::npos;
}

}  // namespace

TEST_CASE("append_check agrees with a full scan of w x") {
  Gen g(1);
  for (int iter = 0; iter < 3000; ++iter) {
    int d = iter % 3 == 0 ? 3 : 2;
    Word u = g.cube_free(d, g.between(0, 40));
    Letter x = static_cast<Letter>(g.below(static_cast<std::size_t>(d)));
    CHECK(append_check(u, x).has_value() == !oracle::naive_is_cube_free(u + x));
  }
}

TEST_CASE("a cube created by appending is a suffix") {
  Gen g(2);
  for (int iter = 0; iter < 2000; ++iter) {
    Word u = g.cube_free(2, g.between(1, 40));
    for (Letter x : {kLetterA, kLetterB}) {
      auto hit = append_check(u, x);
      if (!hit) continue;
      CHECK(hit->position + 3 * hit->period - 1 == u.size() + 1);
    }
  }
}

TEST_CASE("is_cube_free matches the naive check on random words") {
  Gen g(3);
  for (int iter = 0; iter < 3000; ++iter) {
    int d = 2 + static_cast<int>(g.below(2));
    Word u = g.word(d, g.between(0, 16));
    CHECK(is_cube_free(u) == oracle::naive_is_cube_free(u));
  }
}

TEST_CASE("periodic suffixes of cube-free words are shorter than three periods") {
  Gen g(4);
  for (int iter = 0; iter < 1000; ++iter) {
    Word u = g.cube_free(2 + static_cast<int>(g.below(2)), g.between(1, 50));
    for (std::size_t p = 1; p <= u.size(); ++p) {
      CHECK(max_periodic_suffix(u, p).length < 3 * p);
    }
  }
}

TEST_CASE("reversal preserves cube-freeness") {
  Gen g(5);
  for (int iter = 0; iter < 2000; ++iter) {
    Word u = g.word(2, g.between(0, 20));
    CHECK(is_cube_free(u) == is_cube_free(reverse(u)));
    CHECK(reverse(reverse(u)) == u);
  }
}

TEST_CASE("uniform words are exactly the c theta(u) d words") {
  for (std::size_t n = 0; n <= 14; ++n) {
    for (const Word& u : all_words(2, n)) {
      CHECK(is_uniform(u) == oracle::theta_decompose(u).has_value());
    }
  }
}

TEST_CASE("non_uniform_witness is empty exactly on uniform words") {
  for (const Word& u : cube_free_up_to(2, 14)) {
    auto wit = non_uniform_witness(u);
    CHECK(wit.has_value() == !is_uniform(u));
    if (wit) {
      CHECK(u.factor(wit->position, wit->position + wit->factor.size() - 1) == wit->factor);
      CHECK_FALSE(is_uniform(wit->factor));
    }
  }
}

TEST_CASE("words containing aabaa or bbabb are not uniform") {
  for (const Word& u : cube_free_up_to(2, 14)) {
    if (contains(u, w("aabaa")) || contains(u, w("bbabb"))) CHECK_FALSE(is_uniform(u));
  }
}

TEST_CASE("factorization segments concatenate back to the word") {
  Gen g(6);
  for (int iter = 0; iter < 2000; ++iter) {
    Word u = g.cube_free(2, g.between(5, 60));
    auto ms = scan_markers(u);
    if (ms.empty()) continue;
    u = u.prefix(ms.back().end());
    MarkerFactorization f = factorize(u);
    Word joined;
    for (const Word& s : f.segments) joined.append(s);
    CHECK(joined == u);
    CHECK(f.segments.size() == f.markers.size());
    for (const Word& s : f.segments) CHECK(scan_markers(s).size() <= 1);
  }
}

TEST_CASE("markers share two or more letters only in aabaabaa and bbabbabb") {
  for (const Word& u : cube_free_up_to(2, 18)) {
    auto ms = scan_markers(u);
    for (std::size_t i = 0; i + 1 < ms.size(); ++i) {
      bool wide = ms[i + 1].position + 1 < ms[i].end();
      if (wide) {
        CHECK((contains(u, w("aabaabaa")) || contains(u, w("bbabbabb"))));
      }
    }
  }
  CHECK(scan_markers(w("aabaabaa")).size() == 2);
}

TEST_CASE("certificates verify independently of the library detectors") {
  Gen g(7);
  ExtensionEngine engine;
  for (int iter = 0; iter < 200; ++iter) {
    int d = iter % 4 == 0 ? 3 : 2;
    Word u = g.cube_free(d, g.between(0, 24));
    auto v = engine.right(u);
    if (!v.extendable) {
      CHECK_FALSE(oracle::survives_to_depth(u, static_cast<std::size_t>(v.max_depth) + 1));
      continue;
    }
    CHECK(oracle::naive_is_cube_free(window(u, *v.certificate)));
  }
}

TEST_CASE("left and right extendability are dual") {
  Gen g(8);
  ExtensionEngine engine;
  for (int iter = 0; iter < 300; ++iter) {
    Word u = g.cube_free(2, g.between(0, 20));
    CHECK(engine.left(u).extendable == engine.right(reverse(u)).extendable);
  }
}

TEST_CASE("transition witnesses are cube-free joins") {
  Gen g(9);
  ExtensionEngine engine;
  for (int iter = 0; iter < 150; ++iter) {
    int d = iter % 3 == 0 ? 3 : 2;
    Word u = g.cube_free(d, g.between(0, 12));
    Word v = g.cube_free(d, g.between(0, 12));
    auto t = transition_exists(u, v, engine);
    if (t.exists) {
      REQUIRE(t.witness.has_value());
      CHECK(oracle::naive_is_cube_free(u + *t.witness + v));
    } else {
      CHECK((!engine.right(u).extendable || !engine.left(v).extendable));
    }
  }
}

TEST_CASE("ternary algorithm2 on random words") {
  Gen g(10);
  ExtensionEngine engine;
  for (int iter = 0; iter < 100; ++iter) {
    Word u = g.cube_free(3, g.between(1, 20));
    TailCertificate c = engine.algorithm2(u);
    CHECK(oracle::naive_is_cube_free(window(u, c)));
  }
}
