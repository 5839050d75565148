#include "doctest.h"

#include <cmath>
#include <thread>

#include "cubefree/analysis.hpp"
#include "cubefree/error.hpp"
#include "cubefree/extend.hpp"
#include "cubefree/oracle.hpp"
#include "cubefree/thue_morse.hpp"
#include "support.hpp"

using namespace cubefree;
using testing_support::cube_free_up_to;
using testing_support::w;

namespace {

Word window(const Word& u, const TailCertificate& c) {
  Word full = u + c.pad;
  full.append(tm_range(c.r, c.r + verification_length(u, c)));
  return full;
}

// Verification that does not go through the library's detectors.
bool independently_verified(const Word& u, const TailCertificate& c) {
  return oracle::naive_is_cube_free(window(u, c));
}

}  // namespace

TEST_CASE("verification length") {
  CHECK(verification_length(w("ab"), TailCertificate{w("abb"), 1}) == 4 * 6 + 64);
}

TEST_CASE("t_extend_uniform continues T on its own prefixes") {
  TailCertificate c = t_extend_uniform(w("abbabaab"));
  CHECK(c.pad.empty());
  CHECK(c.r == 9);
  CHECK(independently_verified(w("abbabaab"), c));
}

TEST_CASE("t_extend_uniform on abab") {
  // abab occurs in T at 11, so it is continued inside T; the alternative tail
  // T[6..] used for aligned words ending in ab works as well.
  TailCertificate c = t_extend_uniform(w("abab"));
  CHECK(verify_certificate(w("abab"), c));
  CHECK(independently_verified(w("abab"), c));
  CHECK(is_cube_free(w("abab") + tm_range(6, 6 + 4 * 4)));
}

TEST_CASE("t_extend_uniform preconditions") {
  CHECK_THROWS_AS(t_extend_uniform(w("aabaa")), PreconditionError);
  CHECK_THROWS_AS(t_extend_uniform(w("aaa")), PreconditionError);
  CHECK_THROWS_AS(t_extend_uniform(Word::parse("abc")), PreconditionError);
}

TEST_CASE("t_extend_uniform covers uniform words with a short context") {
  std::size_t covered = 0;
  for (const Word& u : cube_free_up_to(2, 12)) {
    if (u.size() < 5 || !is_uniform(u) || !has_short_context_for_uniform_extension(u)) continue;
    TailCertificate c = t_extend_uniform(u);
    CHECK(verify_certificate(u, c));
    CHECK(independently_verified(u, c));
    ++covered;
  }
  CHECK(covered > 100);
}

TEST_CASE("t_extend_with_uniform_context") {
  TailCertificate a = t_extend_with_uniform_context(Word(), w("abbabaa"));
  CHECK(w("abbabaa").starts_with(a.pad));
  CHECK(verify_certificate(Word(), a));

  TailCertificate b = t_extend_with_uniform_context(w("b"), w("abbab"));
  CHECK(verify_certificate(w("b"), b));
  CHECK(independently_verified(w("b"), b));

  CHECK_THROWS_AS(t_extend_with_uniform_context(w("a"), w("ababaab")), PreconditionError);
  CHECK_THROWS_AS(t_extend_with_uniform_context(w("ab"), w("abbab")), PreconditionError);
  CHECK_THROWS_AS(t_extend_with_uniform_context(w("a"), w("aabaa")), PreconditionError);
}

TEST_CASE("right extendability") {
  ExtensionEngine engine;
  auto t = engine.right(w("abbabaab"));
  REQUIRE(t.extendable);
  CHECK(verify_certificate(w("abbabaab"), *t.certificate));

  auto aa = engine.right(w("aa"));
  REQUIRE(aa.extendable);
  CHECK(verify_certificate(w("aa"), *aa.certificate));
  CHECK(oracle::survives_to_depth(w("aa"), 20));

  CHECK_THROWS_AS(engine.right(w("aaa")), PreconditionError);
}

TEST_CASE("a word found by the oracle without infinite contexts is refuted") {
  ExtensionEngine engine;
  std::optional<Word> dead;
  for (const Word& u : cube_free_up_to(2, 16)) {
    if (oracle::survives_to_depth(u, 40)) continue;
    auto tree = oracle::context_tree(u, 40);
    if (tree.exhausted && tree.max_depth > 0) {
      dead = u;
      auto v = engine.right(u);
      CHECK_FALSE(v.extendable);
      CHECK(static_cast<std::size_t>(v.max_depth) == tree.max_depth);
      break;
    }
  }
  CHECK(dead.has_value());
  auto none = engine.right(w("aabaabaa"));
  CHECK_FALSE(none.extendable);
  CHECK(none.max_depth == 0);
}

TEST_CASE("left extendability is right extendability of the reversal") {
  ExtensionEngine engine;
  for (const Word& u : cube_free_up_to(2, 10)) {
    CHECK(engine.left(u).extendable == engine.right(reverse(u)).extendable);
  }
  CHECK(engine.left(w("abbabaab")).extendable);
  CHECK(engine.left(w("aa")).extendable);
  CHECK_THROWS_AS(engine.left(w("bbb")), PreconditionError);
}

TEST_CASE("ternary extendability") {
  ExtensionEngine engine;
  for (const char* s : {"abc", "ccbaa", "cabcacb", "c"}) {
    Word u = Word::parse(s, 3);
    auto v = engine.right(u);
    REQUIRE(v.extendable);
    CHECK(verify_certificate(u, *v.certificate));
    CHECK(independently_verified(u, *v.certificate));
  }
}

TEST_CASE("algorithm2") {
  ExtensionEngine engine;
  for (const char* s : {"abbabaab", "aab"}) {
    TailCertificate c = engine.algorithm2(w(s));
    CHECK(verify_certificate(w(s), c));
    CHECK(independently_verified(w(s), c));
  }
  Word abc = Word::parse("abc", 3);
  TailCertificate c = engine.algorithm2(abc);
  CHECK(verify_certificate(abc, c));
  CHECK(independently_verified(abc, c));

  Word ab3 = Word::parse("abaabbaabbaa", 3);
  Algorithm2Trace t = engine.algorithm2_traced(ab3);
  CHECK(t.c_letter_steps >= 1);
  CHECK(verify_certificate(ab3, t.certificate));

  CHECK_THROWS_AS(engine.algorithm2(w("aabaabaa")), NotExtendableError);
  CHECK_THROWS_AS(engine.algorithm2(w("aaa")), PreconditionError);
}

TEST_CASE("algorithm2 iteration counts stay within the log bound") {
  ExtensionEngine engine;
  for (const Word& u : cube_free_up_to(2, 12)) {
    if (u.empty() || !engine.right(u).extendable) continue;
    Algorithm2Trace t = engine.algorithm2_traced(u);
    CHECK(static_cast<double>(t.marker_steps) <= log_bound(u.size()) + 1);
  }
}

TEST_CASE("heuristic context bound still yields verified certificates") {
  SearchOptions opts;
  opts.assume_context_bound = 40;
  ExtensionEngine engine(opts);
  Word u = Word::parse("abc", 3);
  CHECK(verify_certificate(u, engine.algorithm2(u)));
}

TEST_CASE("node budget") {
  SearchOptions opts;
  opts.node_budget = 1;
  ExtensionEngine engine(opts);
  CHECK_THROWS_AS(engine.right(w("aabaa")), ResourceLimitError);
}

TEST_CASE("verdicts are memoized and shared across threads") {
  ExtensionEngine engine;
  std::vector<Word> words = cube_free_up_to(2, 9);
  std::vector<std::thread> pool;
  std::vector<int> yes(4, 0);
  for (int t = 0; t < 4; ++t) {
    pool.emplace_back([&, t] {
      for (const Word& u : words) yes[static_cast<std::size_t>(t)] += engine.right(u).extendable;
    });
  }
  for (auto& th : pool) th.join();
  CHECK(yes[0] == yes[1]);
  CHECK(yes[1] == yes[2]);
  CHECK(yes[2] == yes[3]);
  CHECK(engine.cached_verdicts() >= words.size());
}

TEST_CASE("log_bound") {
  CHECK(log_bound(1024) == doctest::Approx(65.66).epsilon(1e-12));
  CHECK(log_bound(2) == 1.0);
  CHECK(log_bound(512) == doctest::Approx(57.53).epsilon(1e-12));
  CHECK_THROWS_AS(log_bound(0), PreconditionError);
}

TEST_CASE("chain_length_audit") {
  CHECK(chain_length_audit(w("ab"), w("b")) == 0);
  CHECK(chain_length_audit(w("aabaab"), w("ab")) == 2);
  CHECK(chain_length_audit(w("aba"), w("b")) == 1);
  CHECK_THROWS_AS(chain_length_audit(w("aa"), w("a")), PreconditionError);
  // Each step is checked on its own prefix; recomputing from scratch agrees.
  Word u = w("aabaab");
  for (const Word& x : {w("a"), w("ab"), w("aba"), w("abaa"), w("bb")}) {
    if (!is_cube_free(u + x)) continue;
    std::size_t k = chain_length_audit(u, x);
    CHECK(k <= x.size());
    if (k > 0) CHECK(chain_length_audit(u, x.prefix(k)) == k);
  }
}
