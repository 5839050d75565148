#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cubefree/oracle.hpp"
#include "cubefree/words.hpp"

namespace testing_support {

using cubefree::Alphabet;
using cubefree::Letter;
using cubefree::Word;

inline Word w(std::string_view s, int d = 2) { return Word::parse(s, d); }

/// Every word of length n over d letters, lexicographic.
inline std::vector<Word> all_words(int d, std::size_t n) {
  std::vector<Word> out;
  std::vector<Letter> s(n, 0);
  while (true) {
    out.emplace_back(s, Alphabet(d));
    std::size_t i = n;
    while (i > 0 && s[i - 1] == d - 1) s[--i] = 0;
    if (i == 0) break;
    ++s[i - 1];
  }
  return out;
}

inline std::vector<Word> cube_free_up_to(int d, std::size_t max_n) {
  std::vector<Word> out;
  for (std::size_t n = 0; n <= max_n; ++n) {
    auto e = cubefree::oracle::enumerate_cube_free(d, n, true);
    out.insert(out.end(), e.words.begin(), e.words.end());
  }
  return out;
}

/// Seeded generator of words for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::size_t below(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
  }
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }

  Word word(int d, std::size_t n) {
    std::vector<Letter> s(n);
    for (auto& x : s) x = static_cast<Letter>(below(static_cast<std::size_t>(d)));
    return Word(s, Alphabet(d));
  }

  /// A cube-free word of length n built by random-order backtracking.
  Word cube_free(int d, std::size_t n) {
    std::vector<Letter> s;
    auto dfs = [&](auto&& self) -> bool {
      if (s.size() == n) return true;
      std::vector<Letter> order(static_cast<std::size_t>(d));
      for (int i = 0; i < d; ++i) order[static_cast<std::size_t>(i)] = static_cast<Letter>(i);
      std::shuffle(order.begin(), order.end(), rng_);
      for (Letter x : order) {
        s.push_back(x);
        if (!cubefree::ends_with_cube(s) && self(self)) return true;
        s.pop_back();
      }
      return false;
    };
    dfs(dfs);
    return Word(s, Alphabet(d));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace testing_support
