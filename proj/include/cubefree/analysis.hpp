#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "cubefree/words.hpp"

namespace cubefree {

// Uniform words are c theta(u) d with c, d in {a, b, empty}; right aligned
// when d is empty. Markers are the four binary factors that break uniformity.

enum class MarkerKind { AABAA, ABABA, BABAB, BBABB };

std::string_view marker_name(MarkerKind kind);
const Word& marker_word(MarkerKind kind);
inline constexpr std::array<MarkerKind, 4> kMarkerKinds = {
    MarkerKind::AABAA, MarkerKind::ABABA, MarkerKind::BABAB, MarkerKind::BBABB};

struct Marker {
  MarkerKind kind;
  std::size_t position;  ///< 1-based start
  std::size_t end() const noexcept { return position + 4; }
  friend bool operator==(const Marker&, const Marker&) = default;
};

/// One of the four factors aabaa, aababaa, bbabb, bbababb at a position.
struct FactorOccurrence {
  Word factor;
  std::size_t position = 0;
  friend bool operator==(const FactorOccurrence&, const FactorOccurrence&) = default;
};

/// u = y_m ... y_2 y_1 split at marker ends. `segments` is stored left to
/// right, so segments.front() is y_m and segments.back() is y_1.
struct MarkerFactorization {
  std::vector<Word> segments;
  std::vector<Marker> markers;  ///< z_m, ..., z_1 left to right
};

/// Parity rule: all occurrences of aa and bb start at positions of one parity.
bool is_uniform(const Word& w);
bool is_uniform(std::span<const Letter> w);

/// Uniform with every block boundary counted from the right end.
bool is_right_aligned(const Word& w);
bool is_right_aligned(std::span<const Letter> w);

/// Leftmost occurrence of aabaa, aababaa, bbabb or bbababb in a cube-free
/// binary word; empty exactly when the word is uniform.
std::optional<FactorOccurrence> non_uniform_witness(const Word& w);

/// Every occurrence of every marker, ordered by position.
std::vector<Marker> scan_markers(const Word& w);
std::vector<Marker> scan_markers(std::span<const Letter> w);

/// Whether the word ends with one of the four markers.
bool ends_with_marker(std::span<const Letter> w);

/// Whether the word starts with ababa or babab.
bool has_forbidden_prefix(std::span<const Letter> w);

MarkerFactorization factorize(const Word& w);

/// Positions (1-based, ascending) of letters other than a and b.
std::vector<std::size_t> c_letter_positions(const Word& w);

}  // namespace cubefree
