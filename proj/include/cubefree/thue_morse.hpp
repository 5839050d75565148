#pragma once

#include <cstddef>
#include <optional>

#include "cubefree/words.hpp"

namespace cubefree {

/// T[i] (1-based) from the popcount parity of i-1. Independent of the cache.
Letter tm_letter(std::size_t i);

/// Length-n prefix of T = abbabaab..., generated by iterating
/// theta(a) = ab, theta(b) = ba on a shared, lazily doubled cache.
Word tm_prefix(std::size_t n);

/// T[i..j], 1-based inclusive, i <= j.
Word tm_range(std::size_t i, std::size_t j);

/// Whether w occurs in T. Searches the prefix of length max(64, 8|w|),
/// which holds every factor of that length.
bool is_tm_factor(const Word& w);

/// First occurrence of w in T, if w is a factor.
std::optional<std::size_t> tm_first_occurrence(const Word& w);

/// Smallest i >= start with T[i..i+|pattern|-1] = pattern. The scan is
/// capped at start + 64(|pattern|+1); a miss past the cap is an error.
std::size_t find_occurrence_after(const Word& pattern, std::size_t start);

struct SplicePattern {
  Word word;                 ///< u1 w1 v1r, a factor of T
  std::size_t position = 0;  ///< where `word` occurs in T
};

/// Shortest factor of T of the form u1 w1 v1r with w1 nonempty (ties broken
/// by the leftmost occurrence). Both inputs must be factors of T.
SplicePattern find_splice_pattern(const Word& u1, const Word& v1r);
Word splice_pattern(const Word& u1, const Word& v1r);

}  // namespace cubefree
