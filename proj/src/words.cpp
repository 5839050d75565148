#include "cubefree/words.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

#include "cubefree/error.hpp"

namespace cubefree {

Alphabet::Alphabet(int size) : size_(size) {
  if (size < kMinSize || size > kMaxSize) {
    throw PreconditionError("alphabet size must be in [2, 26], got " +
                            std::to_string(size));
  }
}

Word::Word(std::vector<Letter> letters, Alphabet alphabet)
    : letters_(std::move(letters)), alphabet_(alphabet) {
  for (Letter x : letters_) {
    if (!alphabet_.contains(x)) {
      throw PreconditionError("letter index " + std::to_string(x) +
                              " outside alphabet of size " +
                              std::to_string(alphabet_.size()));
    }
  }
}

Word Word::parse(std::string_view text, std::optional<int> alphabet_size) {
  std::vector<Letter> letters;
  letters.reserve(text.size());
  int highest = -1;
  for (char ch : text) {
    if (ch < 'a' || ch > 'z') {
      throw ParseError(std::string("invalid letter '") + ch + "' in word \"" +
                       std::string(text) + "\"");
    }
    int index = ch - 'a';
    highest = std::max(highest, index);
    letters.push_back(static_cast<Letter>(index));
  }
  int d = alphabet_size.value_or(std::max(Alphabet::kMinSize, highest + 1));
  if (d < Alphabet::kMinSize || d > Alphabet::kMaxSize) {
    throw ParseError("alphabet size must be in [2, 26], got " + std::to_string(d));
  }
  if (highest >= d) {
    throw ParseError("letter '" + std::string(1, static_cast<char>('a' + highest)) +
                     "' is outside the alphabet of size " + std::to_string(d));
  }
  return Word(std::move(letters), Alphabet(d));
}

std::string Word::str() const {
  std::string s;
  s.reserve(letters_.size());
  for (Letter x : letters_) s.push_back(static_cast<char>('a' + x));
  return s;
}

Letter Word::at(std::size_t pos) const {
  if (pos < 1 || pos > letters_.size()) {
    throw PreconditionError("position " + std::to_string(pos) +
                            " out of range for word of length " +
                            std::to_string(letters_.size()));
  }
  return letters_[pos - 1];
}

Word Word::factor(std::size_t i, std::size_t j) const {
  if (i < 1 || j + 1 < i || j > letters_.size()) {
    throw PreconditionError("factor [" + std::to_string(i) + ".." + std::to_string(j) +
                            "] out of range for word of length " +
                            std::to_string(letters_.size()));
  }
  Word out(alphabet_);
  out.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(i - 1),
                      letters_.begin() + static_cast<std::ptrdiff_t>(j));
  return out;
}

Word Word::prefix(std::size_t n) const { return factor(1, n); }

Word Word::suffix(std::size_t n) const {
  if (n > letters_.size()) {
    throw PreconditionError("suffix longer than word");
  }
  return factor(letters_.size() - n + 1, letters_.size());
}

void Word::push_back(Letter x) {
  if (!alphabet_.contains(x)) {
    throw PreconditionError("letter index " + std::to_string(x) +
                            " outside alphabet of size " +
                            std::to_string(alphabet_.size()));
  }
  letters_.push_back(x);
}

Word& Word::append(const Word& other) {
  if (other.alphabet_.size() > alphabet_.size()) alphabet_ = other.alphabet_;
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
  return *this;
}

Word Word::with_alphabet(Alphabet alphabet) const {
  return Word(letters_, alphabet);
}

bool Word::is_binary() const noexcept {
  return std::all_of(letters_.begin(), letters_.end(),
                     [](Letter x) { return x < 2; });
}

bool Word::starts_with(const Word& other) const noexcept {
  return other.size() <= size() &&
         std::equal(other.letters_.begin(), other.letters_.end(), letters_.begin());
}

bool Word::ends_with(const Word& other) const noexcept {
  return other.size() <= size() &&
         std::equal(other.letters_.rbegin(), other.letters_.rend(), letters_.rbegin());
}

std::strong_ordering operator<=>(const Word& x, const Word& y) noexcept {
  if (x.size() != y.size()) return x.size() <=> y.size();
  return std::lexicographical_compare_three_way(x.letters_.begin(), x.letters_.end(),
                                                y.letters_.begin(), y.letters_.end());
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.str(); }

std::optional<CubeWitness> find_cube(std::span<const Letter> w) {
  // For each period, a cube of period p starts at i iff w[j] == w[j+p] for the
  // 2p consecutive indices j = i..i+2p-1.
  const std::size_t n = w.size();
  std::optional<CubeWitness> best;
  for (std::size_t p = 1; 3 * p <= n; ++p) {
    std::size_t run = 0;
    for (std::size_t j = 0; j + p < n; ++j) {
      run = (w[j] == w[j + p]) ? run + 1 : 0;
      if (run == 2 * p) {
        std::size_t start = j + 2 - 2 * p;  // 1-based
        if (!best || start < best->position) best = CubeWitness{start, p};
        break;
      }
    }
  }
  return best;
}

std::optional<CubeWitness> find_cube(const Word& w) { return find_cube(w.letters()); }

bool is_cube_free(std::span<const Letter> w) { return !find_cube(w).has_value(); }
bool is_cube_free(const Word& w) { return is_cube_free(w.letters()); }

std::optional<CubeWitness> find_suffix_cube(std::span<const Letter> w) {
  const std::size_t n = w.size();
  for (std::size_t p = 1; 3 * p <= n; ++p) {
    bool cube = true;
    for (std::size_t j = n - 2 * p; j < n; ++j) {
      if (w[j] != w[j - p]) {
        cube = false;
        break;
      }
    }
    if (cube) return CubeWitness{n - 3 * p + 1, p};
  }
  return std::nullopt;
}

bool ends_with_cube(std::span<const Letter> w) { return find_suffix_cube(w).has_value(); }

std::optional<CubeWitness> append_check(const Word& w, Letter x) {
  if (!is_cube_free(w)) {
    throw PreconditionError("append_check: \"" + w.str() + "\" already contains a cube");
  }
  Word extended = w + x;
  return find_suffix_cube(extended.letters());
}

PeriodicSuffix max_periodic_suffix(const Word& w, std::size_t period) {
  if (period < 1 || period > w.size()) {
    throw PreconditionError("max_periodic_suffix: period " + std::to_string(period) +
                            " out of range for word of length " +
                            std::to_string(w.size()));
  }
  const std::size_t n = w.size();
  std::size_t length = period;
  while (length < n && w[n - 1 - length] == w[n - 1 - length + period]) ++length;
  return {period, length};
}

std::optional<std::size_t> fine_wilf_period(std::size_t p, std::size_t q,
                                            std::size_t length) {
  if (p < 1 || q < 1) {
    throw PreconditionError("fine_wilf_period: periods must be positive");
  }
  std::size_t g = std::gcd(p, q);
  if (length + g >= p + q) return g;
  return std::nullopt;
}

Word reverse(const Word& w) {
  std::vector<Letter> letters(w.letters().rbegin(), w.letters().rend());
  return Word(std::move(letters), w.alphabet());
}

Word complement(const Word& w) {
  std::vector<Letter> letters(w.letters().begin(), w.letters().end());
  for (Letter& x : letters) {
    if (x < 2) x ^= 1;
  }
  return Word(std::move(letters), w.alphabet());
}

bool has_c_letter(const Word& w) noexcept { return !w.is_binary(); }

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (Letter x : w.letters()) {
    h ^= x + 1;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace cubefree
