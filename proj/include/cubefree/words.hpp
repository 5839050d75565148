#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cubefree {

using Letter = std::uint8_t;

inline constexpr Letter kLetterA = 0;
inline constexpr Letter kLetterB = 1;

/// Sigma_d = {a, b, c_1, ..., c_{d-2}}; letters are indices 0..d-1 rendered as 'a'+i.
class Alphabet {
 public:
  static constexpr int kMinSize = 2;
  static constexpr int kMaxSize = 26;

  constexpr Alphabet() = default;
  explicit Alphabet(int size);

  static constexpr Alphabet binary() { return Alphabet{}; }

  constexpr int size() const noexcept { return size_; }
  constexpr bool contains(Letter x) const noexcept { return x < size_; }
  static constexpr bool is_c_letter(Letter x) noexcept { return x >= 2; }

  friend constexpr bool operator==(Alphabet, Alphabet) = default;

 private:
  int size_ = 2;
};

/// A finite word over an alphabet.
///
/// Public positions are 1-based (`at`, `factor`) to match w[i..j] notation;
/// `operator[]` and `letters()` expose the raw 0-based storage for loops.
class Word {
 public:
  Word() = default;
  explicit Word(Alphabet alphabet) : alphabet_(alphabet) {}
  Word(std::vector<Letter> letters, Alphabet alphabet);

  /// Parses 'a'..'z'. The alphabet is forced when `alphabet_size` is given,
  /// otherwise inferred as max(2, highest letter index + 1).
  static Word parse(std::string_view text,
                    std::optional<int> alphabet_size = std::nullopt);

  std::string str() const;

  Alphabet alphabet() const noexcept { return alphabet_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  std::span<const Letter> letters() const noexcept { return letters_; }

  Letter operator[](std::size_t index0) const noexcept { return letters_[index0]; }
  /// 1-based access; throws PreconditionError when out of range.
  Letter at(std::size_t pos) const;
  Letter back() const { return letters_.back(); }

  /// w[i..j], 1-based inclusive. An empty range (j = i-1) yields the empty word.
  Word factor(std::size_t i, std::size_t j) const;
  Word prefix(std::size_t n) const;
  Word suffix(std::size_t n) const;

  void push_back(Letter x);
  void pop_back() { letters_.pop_back(); }
  Word& append(const Word& other);

  /// Same letters viewed over another (large enough) alphabet.
  Word with_alphabet(Alphabet alphabet) const;
  bool is_binary() const noexcept;
  bool starts_with(const Word& other) const noexcept;
  bool ends_with(const Word& other) const noexcept;

  friend Word operator+(Word lhs, const Word& rhs) { return std::move(lhs.append(rhs)); }
  friend Word operator+(Word lhs, Letter x) {
    lhs.push_back(x);
    return lhs;
  }
  friend bool operator==(const Word& x, const Word& y) noexcept {
    return x.letters_ == y.letters_;
  }
  friend std::strong_ordering operator<=>(const Word& x, const Word& y) noexcept;

 private:
  std::vector<Letter> letters_;
  Alphabet alphabet_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

/// Occurrence of x^3 at `position` (1-based) with |x| = `period`.
struct CubeWitness {
  std::size_t position = 0;
  std::size_t period = 0;
  friend bool operator==(const CubeWitness&, const CubeWitness&) = default;
};

/// Longest suffix of a word having a given period.
struct PeriodicSuffix {
  std::size_t period = 0;
  std::size_t length = 0;
  friend bool operator==(const PeriodicSuffix&, const PeriodicSuffix&) = default;
};

/// Leftmost cube occurrence, ties broken by the smallest period.
std::optional<CubeWitness> find_cube(const Word& w);
std::optional<CubeWitness> find_cube(std::span<const Letter> w);
bool is_cube_free(const Word& w);
bool is_cube_free(std::span<const Letter> w);

/// Shortest-period cube that is a suffix of `w`, without checking the rest.
/// This is the hot path of every search: if w[1..n-1] is cube-free then
/// any cube of w is a suffix.
std::optional<CubeWitness> find_suffix_cube(std::span<const Letter> w);
bool ends_with_cube(std::span<const Letter> w);

/// Cube created by appending `x` to the cube-free word `w`, if any.
std::optional<CubeWitness> append_check(const Word& w, Letter x);

PeriodicSuffix max_periodic_suffix(const Word& w, std::size_t period);

/// gcd(p, q) when a word of length `length` with periods p and q is forced
/// to have period gcd(p, q).
std::optional<std::size_t> fine_wilf_period(std::size_t p, std::size_t q,
                                            std::size_t length);

Word reverse(const Word& w);
/// Exchanges a and b; c-letters are left alone.
Word complement(const Word& w);

/// True if some letter has index >= 2.
bool has_c_letter(const Word& w) noexcept;

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

}  // namespace cubefree
