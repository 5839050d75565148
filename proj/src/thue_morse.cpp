#include "cubefree/thue_morse.hpp"

#include <algorithm>
#include <bit>
#include <memory>
#include <mutex>
#include <vector>

#include "cubefree/error.hpp"

namespace cubefree {
namespace {

using Prefix = std::vector<Letter>;

// Readers receive an immutable snapshot; growth publishes a new vector, so a
// snapshot held by one thread is never mutated by another.
class PrefixCache {
 public:
  std::shared_ptr<const Prefix> at_least(std::size_t n) {
    std::lock_guard lock(mutex_);
    if (!data_) data_ = std::make_shared<const Prefix>(Prefix{kLetterA});
    while (data_->size() < n) {
      Prefix next;
      next.reserve(2 * data_->size());
      for (Letter x : *data_) {
        next.push_back(x);
        next.push_back(x ^ 1);
      }
      data_ = std::make_shared<const Prefix>(std::move(next));
    }
    return data_;
  }

 private:
  std::mutex mutex_;
  std::shared_ptr<const Prefix> data_;
};

PrefixCache& cache() {
  static PrefixCache instance;
  return instance;
}

constexpr std::size_t kMaxPrefix = std::size_t{1} << 26;

void require_binary(const Word& w, const char* op) {
  if (!w.is_binary()) {
    throw PreconditionError(std::string(op) + ": \"" + w.str() + "\" is not binary");
  }
}

// 0-based index of the first occurrence of `pattern` at or after `from0`
// whose last letter lies before `limit0`.
std::optional<std::size_t> scan(const Prefix& t, std::span<const Letter> pattern,
                                std::size_t from0, std::size_t limit0) {
  limit0 = std::min(limit0, t.size());
  if (from0 + pattern.size() > limit0) return std::nullopt;
  auto first = t.begin() + static_cast<std::ptrdiff_t>(from0);
  auto last = t.begin() + static_cast<std::ptrdiff_t>(limit0);
  auto it = std::search(first, last, pattern.begin(), pattern.end());
  if (it == last) return std::nullopt;
  return static_cast<std::size_t>(it - t.begin());
}

}  // namespace

Letter tm_letter(std::size_t i) {
  if (i < 1) throw PreconditionError("tm_letter: positions are 1-based");
  return static_cast<Letter>(std::popcount(i - 1) & 1);
}

Word tm_prefix(std::size_t n) {
  if (n > kMaxPrefix) throw ResourceLimitError("tm_prefix: length too large");
  auto t = cache().at_least(n);
  return Word(Prefix(t->begin(), t->begin() + static_cast<std::ptrdiff_t>(n)),
              Alphabet::binary());
}

Word tm_range(std::size_t i, std::size_t j) {
  if (i < 1 || i > j) {
    throw PreconditionError("tm_range: need 1 <= i <= j, got [" + std::to_string(i) +
                            ".." + std::to_string(j) + "]");
  }
  if (j > kMaxPrefix) throw ResourceLimitError("tm_range: index too large");
  auto t = cache().at_least(j);
  return Word(Prefix(t->begin() + static_cast<std::ptrdiff_t>(i - 1),
                     t->begin() + static_cast<std::ptrdiff_t>(j)),
              Alphabet::binary());
}

std::optional<std::size_t> tm_first_occurrence(const Word& w) {
  require_binary(w, "is_tm_factor");
  if (w.empty()) return 1;
  const std::size_t window = std::max<std::size_t>(64, 8 * w.size());
  auto t = cache().at_least(window);
  auto hit = scan(*t, w.letters(), 0, window);
  if (!hit) return std::nullopt;
  return *hit + 1;
}

bool is_tm_factor(const Word& w) { return tm_first_occurrence(w).has_value(); }

std::size_t find_occurrence_after(const Word& pattern, std::size_t start) {
  require_binary(pattern, "find_occurrence_after");
  if (start < 1) throw PreconditionError("find_occurrence_after: start must be >= 1");
  const std::size_t cap = start + 64 * (pattern.size() + 1);
  auto t = cache().at_least(cap + pattern.size());
  auto hit = scan(*t, pattern.letters(), start - 1, cap + pattern.size());
  if (!hit) {
    throw PreconditionError("find_occurrence_after: \"" + pattern.str() +
                            "\" is not a Thue-Morse factor");
  }
  return *hit + 1;
}

SplicePattern find_splice_pattern(const Word& u1, const Word& v1r) {
  if (!is_tm_factor(u1)) {
    throw PreconditionError("splice_pattern: \"" + u1.str() + "\" is not a Thue-Morse factor");
  }
  if (!is_tm_factor(v1r)) {
    throw PreconditionError("splice_pattern: \"" + v1r.str() + "\" is not a Thue-Morse factor");
  }
  std::size_t window = std::max<std::size_t>(64, 8 * (u1.size() + v1r.size() + 1));
  for (; window <= kMaxPrefix; window *= 2) {
    auto t = cache().at_least(window);
    std::optional<SplicePattern> best;
    std::size_t best_len = 0;
    std::size_t from = 0;
    while (auto i = scan(*t, u1.letters(), from, window)) {
      from = *i + 1;
      // v1r must start strictly after u1 ends, leaving w1 nonempty.
      auto j = scan(*t, v1r.letters(), *i + u1.size() + 1, window);
      if (!j) break;
      std::size_t len = *j + v1r.size() - *i;
      if (!best || len < best_len) {
        best_len = len;
        best = SplicePattern{Word(Prefix(t->begin() + static_cast<std::ptrdiff_t>(*i),
                                         t->begin() + static_cast<std::ptrdiff_t>(*i + len)),
                                  Alphabet::binary()),
                             *i + 1};
      }
    }
    if (best) return *best;
  }
  throw ResourceLimitError("splice_pattern: no splice found within the search window");
}

Word splice_pattern(const Word& u1, const Word& v1r) {
  return find_splice_pattern(u1, v1r).word;
}

}  // namespace cubefree
