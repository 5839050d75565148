#include "cubefree/analysis.hpp"

#include <algorithm>

#include "cubefree/error.hpp"

namespace cubefree {
namespace {

const std::array<Word, 4>& marker_words() {
  static const std::array<Word, 4> words = {Word::parse("aabaa"), Word::parse("ababa"),
                                            Word::parse("babab"), Word::parse("bbabb")};
  return words;
}

const std::array<Word, 4>& non_uniform_factors() {
  static const std::array<Word, 4> words = {Word::parse("aabaa"), Word::parse("aababaa"),
                                            Word::parse("bbabb"), Word::parse("bbababb")};
  return words;
}

void require_binary(std::span<const Letter> w, const char* op) {
  if (std::any_of(w.begin(), w.end(), [](Letter x) { return x >= 2; })) {
    throw PreconditionError(std::string(op) + ": word is not binary");
  }
}

bool occurs_at(std::span<const Letter> w, std::size_t index0, const Word& pattern) {
  if (index0 + pattern.size() > w.size()) return false;
  return std::equal(pattern.letters().begin(), pattern.letters().end(),
                    w.begin() + static_cast<std::ptrdiff_t>(index0));
}

}  // namespace

std::string_view marker_name(MarkerKind kind) {
  switch (kind) {
    case MarkerKind::AABAA: return "AABAA";
    case MarkerKind::ABABA: return "ABABA";
    case MarkerKind::BABAB: return "BABAB";
    case MarkerKind::BBABB: return "BBABB";
  }
  return "?";
}

const Word& marker_word(MarkerKind kind) {
  return marker_words()[static_cast<std::size_t>(kind)];
}

bool is_uniform(std::span<const Letter> w) {
  require_binary(w, "is_uniform");
  int parity = -1;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] != w[i + 1]) continue;
    int p = static_cast<int>(i & 1);
    if (parity == -1) {
      parity = p;
    } else if (parity != p) {
      return false;
    }
  }
  return true;
}

bool is_uniform(const Word& w) { return is_uniform(w.letters()); }

bool is_right_aligned(std::span<const Letter> w) {
  require_binary(w, "is_right_aligned");
  // Blocks are w[n-1..n], w[n-3..n-2], ...; a factor cc must straddle two
  // blocks, so its first letter ends a block: (n - i) even for 1-based i.
  const std::size_t n = w.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (w[i] == w[i + 1] && ((n - (i + 1)) & 1) != 0) return false;
  }
  return true;
}

bool is_right_aligned(const Word& w) { return is_right_aligned(w.letters()); }

std::optional<FactorOccurrence> non_uniform_witness(const Word& w) {
  require_binary(w.letters(), "non_uniform_witness");
  if (!is_cube_free(w)) {
    throw PreconditionError("non_uniform_witness: \"" + w.str() + "\" is not cube-free");
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (const Word& f : non_uniform_factors()) {
      if (occurs_at(w.letters(), i, f)) return FactorOccurrence{f, i + 1};
    }
  }
  return std::nullopt;
}

std::vector<Marker> scan_markers(std::span<const Letter> w) {
  require_binary(w, "scan_markers");
  std::vector<Marker> out;
  for (std::size_t i = 0; i + 5 <= w.size(); ++i) {
    for (MarkerKind kind : kMarkerKinds) {
      if (occurs_at(w, i, marker_word(kind))) out.push_back(Marker{kind, i + 1});
    }
  }
  return out;
}

std::vector<Marker> scan_markers(const Word& w) { return scan_markers(w.letters()); }

bool ends_with_marker(std::span<const Letter> w) {
  if (w.size() < 5) return false;
  for (MarkerKind kind : kMarkerKinds) {
    if (occurs_at(w, w.size() - 5, marker_word(kind))) return true;
  }
  return false;
}

bool has_forbidden_prefix(std::span<const Letter> w) {
  return occurs_at(w, 0, marker_word(MarkerKind::ABABA)) ||
         occurs_at(w, 0, marker_word(MarkerKind::BABAB));
}

MarkerFactorization factorize(const Word& w) {
  require_binary(w.letters(), "factorize");
  if (!is_cube_free(w)) {
    throw PreconditionError("factorize: \"" + w.str() + "\" is not cube-free");
  }
  if (!ends_with_marker(w.letters())) {
    throw PreconditionError("factorize: \"" + w.str() + "\" does not end with a marker");
  }
  MarkerFactorization out;
  out.markers = scan_markers(w);
  // y_i runs from the letter after z_{i+1} to the last letter of z_i, even
  // when the two markers share a letter.
  std::size_t start = 1;
  for (const Marker& z : out.markers) {
    out.segments.push_back(w.factor(start, z.end()));
    start = z.end() + 1;
  }
  return out;
}

std::vector<std::size_t> c_letter_positions(const Word& w) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (Alphabet::is_c_letter(w[i])) out.push_back(i + 1);
  }
  return out;
}

}  // namespace cubefree
