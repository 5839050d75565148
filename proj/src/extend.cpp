#include "cubefree/extend.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "cubefree/analysis.hpp"
#include "cubefree/error.hpp"
#include "cubefree/thue_morse.hpp"

namespace cubefree {
namespace {

constexpr std::size_t kMaxAlgorithm2Steps = 64;

Word binary_word(std::string_view s) { return Word::parse(s, 2); }

bool cube_free_with(const Word& u, std::string_view suffix) {
  return is_cube_free(u + binary_word(suffix));
}

void require_binary(const Word& w, const char* op) {
  if (!w.is_binary()) {
    throw PreconditionError(std::string(op) + ": \"" + w.str() + "\" is not binary");
  }
}

void require_cube_free(const Word& w, const char* op) {
  if (!is_cube_free(w)) {
    throw PreconditionError(std::string(op) + ": \"" + w.str() + "\" is not cube-free");
  }
}

// A tail T[r..], or its complement when `complemented` is set. Complemented
// tails are turned into T-suffixes only once the full prefix is known.
struct Tail {
  std::size_t r = 1;
  bool complemented = false;
};

struct PartialCertificate {
  Word pad;
  Tail tail;
};

PartialCertificate exchange_letters(PartialCertificate pc) {
  pc.pad = complement(pc.pad);
  pc.tail.complemented = !pc.tail.complemented;
  return pc;
}

// Some s with T[s..s+len-1] equal to the complement of T[r..r+len-1]. Every
// factor of the complement of T is a factor of T, and T[s..] is overlap-free,
// so the seam argument behind verification_length carries over.
std::size_t complement_tail_start(std::size_t r, std::size_t len) {
  Word pattern = complement(tm_range(r, r + len - 1));
  auto s = tm_first_occurrence(pattern);
  if (!s) throw std::logic_error("complement of a Thue-Morse factor not found in T");
  return *s;
}

TailCertificate resolve(const Word& u, const PartialCertificate& pc) {
  TailCertificate cert{pc.pad, pc.tail.r};
  if (pc.tail.complemented) {
    cert.r = complement_tail_start(pc.tail.r, verification_length(u, cert) + 1);
  }
  return cert;
}

void require_verified(const Word& u, const TailCertificate& cert, const char* op) {
  if (!verify_certificate(u, cert)) {
    throw std::logic_error(std::string(op) + ": constructed certificate (Y=\"" +
                           cert.pad.str() + "\", r=" + std::to_string(cert.r) +
                           ") for \"" + u.str() + "\" failed verification");
  }
}

// Case 1 with last block ab: u aa cube-free gives u T[6..] = ...ab aabbaababba...;
// otherwise u babb is cube-free and u T[20..] = ...ab babbaabbaba... works.
std::optional<PartialCertificate> aligned_ab_tail(const Word& u) {
  if (cube_free_with(u, "aa")) return PartialCertificate{Word(), Tail{6}};
  if (cube_free_with(u, "babb")) return PartialCertificate{Word(), Tail{20}};
  return std::nullopt;
}

// Tail choice for a uniform cube-free binary word that has a short context.
std::optional<PartialCertificate> uniform_tail(const Word& u) {
  if (auto i = tm_first_occurrence(u)) {
    return PartialCertificate{Word(), Tail{*i + u.size()}};
  }
  const std::size_t n = u.size();
  if (n < 5) return std::nullopt;  // every uniform cube-free word this short is in T
  if (is_right_aligned(u)) {
    if (u[n - 2] == kLetterA) return aligned_ab_tail(u);
    auto flipped = aligned_ab_tail(complement(u));
    if (!flipped) return std::nullopt;
    return exchange_letters(*flipped);
  }
  // Case 2: u = c theta(v) d with a trailing single letter d.
  if (u.back() == kLetterB) {
    auto flipped = uniform_tail(complement(u));
    if (!flipped) return std::nullopt;
    return exchange_letters(*flipped);
  }
  if (u[n - 3] == kLetterA) {
    // v_n = ab: u T[7..] = c theta(v) T[6..].
    return PartialCertificate{Word(), Tail{7}};
  }
  // v_n = ba: u a ends with aaa, so u b is right aligned and extends as in Case 1.
  auto inner = uniform_tail(u + kLetterB);
  if (!inner) return std::nullopt;
  inner->pad = binary_word("b") + inner->pad;
  return inner;
}

PartialCertificate uniform_context_partial(const Word& u, const Word& w) {
  const std::size_t n = u.size();
  Word hat;
  bool found = false;
  for (std::size_t len : {2 * n, 2 * n + 1}) {
    Word candidate = w.prefix(len);
    if (is_right_aligned(candidate)) {
      hat = std::move(candidate);
      found = true;
      break;
    }
  }
  if (!found) throw std::logic_error("uniform context has no right-aligned prefix");

  Word uw = u + hat;
  Word rest;  // the uniform word that is handed to the T-tail
  if (is_uniform(uw)) {
    rest = uw;
  } else {
    // All markers of u w^ start inside u; cut after the first letter of the
    // rightmost one.
    auto markers = scan_markers(uw);
    const Marker& z = markers.back();
    if (z.position > n) throw std::logic_error("rightmost marker does not start in u");
    rest = uw.factor(z.position + 1, uw.size());
  }
  auto inner = uniform_tail(rest);
  if (!inner) {
    throw std::logic_error("no T-tail for uniform block \"" + rest.str() + "\"");
  }
  return PartialCertificate{hat + inner->pad, inner->tail};
}

std::string memo_key(const Word& u) {
  return std::to_string(u.alphabet().size()) + ":" + u.str();
}

std::size_t ceil_half(std::size_t n) { return (n + 1) / 2; }

// Letters after the last c-letter, over the binary alphabet.
Word binary_run(const Word& w) {
  std::size_t start = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (Alphabet::is_c_letter(w[i])) start = i + 1;
  }
  return w.factor(start + 1, w.size()).with_alphabet(Alphabet::binary());
}

}  // namespace

std::size_t verification_length(const Word& u, const TailCertificate& cert) {
  return 4 * (u.size() + cert.pad.size() + 1) + 64;
}

bool tail_is_cube_free(const Word& u, const TailCertificate& cert) {
  if (cert.r < 1) return false;
  const std::size_t len = verification_length(u, cert);
  Word full = u + cert.pad;
  full.append(tm_range(cert.r, cert.r + len));
  return is_cube_free(full);
}

bool seam_conditions_hold(const Word& u, const TailCertificate& cert) {
  const Word full = u + cert.pad;
  const std::size_t n = full.size();
  std::size_t binary_from = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (Alphabet::is_c_letter(full[i])) binary_from = i + 2;
  }
  const auto letters = full.letters();
  for (std::size_t b = binary_from; b <= n + 1; ++b) {
    if (b > 1 && n + 1 - b < ceil_half(b - 1)) break;
    if (b > 1 && binary_from == 1) break;
    for (std::size_t s = b; s <= n + 1; ++s) {
      const std::size_t tail_len = n + 1 - s;
      if (tail_len < 2 * (s - b)) break;
      auto tail = letters.subspan(s - 1);
      if (is_uniform(tail) && !has_forbidden_prefix(tail)) return true;
    }
  }
  return false;
}

bool verify_certificate(const Word& u, const TailCertificate& cert) {
  return tail_is_cube_free(u, cert) && seam_conditions_hold(u, cert);
}

bool has_short_context_for_uniform_extension(const Word& u) {
  const std::size_t length = is_right_aligned(u) ? 2 : 3;
  for (unsigned mask = 0; mask < (1u << length); ++mask) {
    Word x(Alphabet::binary());
    for (std::size_t i = 0; i < length; ++i) x.push_back((mask >> (length - 1 - i)) & 1);
    if (is_cube_free(u + x)) return true;
  }
  return false;
}

TailCertificate t_extend_uniform(const Word& u) {
  require_binary(u, "t_extend_uniform");
  require_cube_free(u, "t_extend_uniform");
  if (!is_uniform(u)) {
    throw PreconditionError("t_extend_uniform: \"" + u.str() + "\" is not uniform");
  }
  if (!has_short_context_for_uniform_extension(u)) {
    throw PreconditionError("t_extend_uniform: \"" + u.str() +
                            "\" has no qualifying short right context");
  }
  auto pc = uniform_tail(u);
  if (!pc) throw std::logic_error("t_extend_uniform: case analysis found no tail");
  TailCertificate cert = resolve(u, *pc);
  require_verified(u, cert, "t_extend_uniform");
  return cert;
}

TailCertificate t_extend_with_uniform_context(const Word& u, const Word& w) {
  require_binary(u, "t_extend_with_uniform_context");
  require_binary(w, "t_extend_with_uniform_context");
  Word uw = u + w;
  require_cube_free(uw, "t_extend_with_uniform_context");
  if (!is_uniform(w)) {
    throw PreconditionError("t_extend_with_uniform_context: context \"" + w.str() +
                            "\" is not uniform");
  }
  if (w.size() < 2 * u.size() + 3) {
    throw PreconditionError("t_extend_with_uniform_context: context shorter than 2|u|+3");
  }
  if (has_forbidden_prefix(w.letters())) {
    throw PreconditionError("t_extend_with_uniform_context: context starts with ababa or babab");
  }
  TailCertificate cert = resolve(u, uniform_context_partial(u, w));
  require_verified(u, cert, "t_extend_with_uniform_context");
  return cert;
}

// ---------------------------------------------------------------------------

struct ExtensionEngine::Impl {
  explicit Impl(SearchOptions opts) : options(opts) {}

  SearchOptions options;
  mutable std::mutex mutex;
  std::unordered_map<std::string, ExtendabilityVerdict> memo;

  std::optional<ExtendabilityVerdict> lookup(const std::string& key) const {
    std::lock_guard lock(mutex);
    auto it = memo.find(key);
    if (it == memo.end()) return std::nullopt;
    return it->second;
  }

  void store(const std::string& key, const ExtendabilityVerdict& v) {
    std::lock_guard lock(mutex);
    memo.emplace(key, v);
  }

  void charge(std::size_t& visited) const {
    if (++visited > options.node_budget) {
      throw ResourceLimitError("search exceeded the node budget of " +
                               std::to_string(options.node_budget));
    }
  }

  ExtendabilityVerdict right(const Word& u) {
    const std::string key = memo_key(u);
    if (auto hit = lookup(key)) return *hit;
    ExtendabilityVerdict v = u.alphabet().size() == 2 ? binary_search(u) : dary_search(u);
    store(key, v);
    return v;
  }

  // First (lexicographic) uniform right context of `u` of the given length
  // that does not start with ababa or babab.
  std::optional<Word> find_uniform_context(const Word& u, std::size_t length) {
    std::vector<Letter> buf(u.letters().begin(), u.letters().end());
    const std::size_t base = buf.size();
    std::vector<int> parity(length + 1, -1);
    std::size_t visited = 0;

    auto dfs = [&](auto&& self, std::size_t k) -> bool {
      if (k == length) return true;
      for (Letter x : {kLetterA, kLetterB}) {
        int par = parity[k];
        if (k >= 1 && buf[base + k - 1] == x) {
          int p = static_cast<int>((k - 1) & 1);
          if (par != -1 && par != p) continue;
          par = p;
        }
        buf.push_back(x);
        bool ok = !ends_with_cube(buf);
        if (ok && k + 1 == 5) {
          ok = !has_forbidden_prefix(std::span<const Letter>(buf).subspan(base));
        }
        if (ok) {
          charge(visited);
          parity[k + 1] = par;
          if (self(self, k + 1)) return true;
        }
        buf.pop_back();
      }
      return false;
    };
    if (!dfs(dfs, 0)) return std::nullopt;
    return Word(std::vector<Letter>(buf.begin() + static_cast<std::ptrdiff_t>(base), buf.end()),
                Alphabet::binary());
  }

  ExtendabilityVerdict binary_search(const Word& u) {
    std::deque<Word> queue;
    queue.emplace_back(Alphabet::binary());
    std::size_t visited = 0;
    int max_depth = 0;
    while (!queue.empty()) {
      Word x = std::move(queue.front());
      queue.pop_front();
      charge(visited);
      Word node = u + x;
      if (auto w = find_uniform_context(node, 2 * node.size() + 3)) {
        TailCertificate inner = t_extend_with_uniform_context(node, *w);
        TailCertificate cert{x + inner.pad, inner.r};
        require_verified(u, cert, "is_right_extendable");
        return ExtendabilityVerdict::yes(std::move(cert));
      }
      for (Letter a : {kLetterA, kLetterB}) {
        Word child = node + a;
        if (ends_with_cube(child.letters())) continue;
        queue.push_back(x + a);
        max_depth = std::max(max_depth, static_cast<int>(x.size() + 1));
      }
    }
    return ExtendabilityVerdict::no(max_depth);
  }

  // Binary words w of length ceil(|node|/2), lexicographic, with node w
  // cube-free; stops at the first one accepted by `accept`.
  template <typename Accept>
  std::optional<Word> first_binary_context(const Word& node, std::size_t length,
                                           Accept&& accept) {
    std::vector<Letter> buf(node.letters().begin(), node.letters().end());
    const std::size_t base = buf.size();
    std::size_t visited = 0;
    std::optional<Word> found;
    auto dfs = [&](auto&& self, std::size_t k) -> bool {
      if (k == length) {
        Word w(std::vector<Letter>(buf.begin() + static_cast<std::ptrdiff_t>(base), buf.end()),
               Alphabet::binary());
        if (accept(w)) {
          found = std::move(w);
          return true;
        }
        return false;
      }
      for (Letter x : {kLetterA, kLetterB}) {
        buf.push_back(x);
        if (!ends_with_cube(buf)) {
          charge(visited);
          if (self(self, k + 1)) return true;
        }
        buf.pop_back();
      }
      return false;
    };
    dfs(dfs, 0);
    return found;
  }

  ExtendabilityVerdict dary_search(const Word& u) {
    const int d = u.alphabet().size();
    std::deque<Word> queue;
    queue.emplace_back(u.alphabet());
    std::size_t visited = 0;
    int max_depth = 0;
    while (!queue.empty()) {
      Word x = std::move(queue.front());
      queue.pop_front();
      charge(visited);
      Word node = u + x;
      std::optional<TailCertificate> cert;
      if (node.is_binary()) {
        ExtendabilityVerdict b = right(node.with_alphabet(Alphabet::binary()));
        if (b.extendable) cert = TailCertificate{x + b.certificate->pad, b.certificate->r};
      } else {
        // A binary block w of length ceil(|node|/2) keeps every cube that meets
        // a c-letter inside node w, so only the binary run P w after the last
        // c-letter has to be extendable.
        const Word run = binary_run(node);
        std::optional<TailCertificate> inner;
        auto w = first_binary_context(node, ceil_half(node.size()), [&](const Word& cand) {
          ExtendabilityVerdict b = right(run + cand);
          if (!b.extendable) return false;
          inner = b.certificate;
          return true;
        });
        if (w) cert = TailCertificate{x + *w + inner->pad, inner->r};
      }
      if (cert) {
        cert->pad = cert->pad.with_alphabet(u.alphabet());
        require_verified(u, *cert, "is_right_extendable");
        return ExtendabilityVerdict::yes(std::move(*cert));
      }
      for (int a = 0; a < d; ++a) {
        Word child = node + static_cast<Letter>(a);
        if (ends_with_cube(child.letters())) continue;
        queue.push_back(x + static_cast<Letter>(a));
        max_depth = std::max(max_depth, static_cast<int>(x.size() + 1));
      }
    }
    return ExtendabilityVerdict::no(max_depth);
  }

  bool has_context_of_length(const Word& u, std::size_t length) {
    std::vector<Letter> buf(u.letters().begin(), u.letters().end());
    const int d = u.alphabet().size();
    std::size_t visited = 0;
    auto dfs = [&](auto&& self, std::size_t k) -> bool {
      if (k == length) return true;
      for (int a = 0; a < d; ++a) {
        buf.push_back(static_cast<Letter>(a));
        if (!ends_with_cube(buf)) {
          charge(visited);
          if (self(self, k + 1)) return true;
        }
        buf.pop_back();
      }
      return false;
    };
    return dfs(dfs, 0);
  }

  bool extendable_for_search(const Word& w) {
    if (options.assume_context_bound) {
      return has_context_of_length(w, *options.assume_context_bound);
    }
    return right(w).extendable;
  }

  // Shortest (then lexicographic) v c, v binary and c a c-letter, with
  // node v c cube-free and right extendable.
  std::optional<Word> shortest_c_context(const Word& node) {
    const int d = node.alphabet().size();
    std::deque<Word> queue;
    queue.emplace_back(node.alphabet());
    std::size_t visited = 0;
    while (!queue.empty()) {
      Word v = std::move(queue.front());
      queue.pop_front();
      charge(visited);
      Word base = node + v;
      for (int c = 2; c < d; ++c) {
        Word cand = base + static_cast<Letter>(c);
        if (ends_with_cube(cand.letters())) continue;
        if (extendable_for_search(cand)) return v + static_cast<Letter>(c);
      }
      for (Letter a : {kLetterA, kLetterB}) {
        if (!ends_with_cube((base + a).letters())) queue.push_back(v + a);
      }
    }
    return std::nullopt;
  }

  // Shortest nonempty v with node v cube-free, ending with a marker and
  // right extendable.
  std::optional<Word> shortest_marker_context(const Word& node) {
    std::deque<Word> queue;
    queue.emplace_back(Alphabet::binary());
    std::size_t visited = 0;
    while (!queue.empty()) {
      Word v = std::move(queue.front());
      queue.pop_front();
      charge(visited);
      for (Letter a : {kLetterA, kLetterB}) {
        Word next = v + a;
        Word cand = node + next;
        if (ends_with_cube(cand.letters())) continue;
        if (ends_with_marker(cand.letters()) && extendable_for_search(cand)) return next;
        queue.push_back(std::move(next));
      }
    }
    return std::nullopt;
  }

  Algorithm2Trace algorithm2(const Word& u) {
    require_cube_free(u, "algorithm2");
    ExtendabilityVerdict verdict = right(u);
    if (!verdict.extendable) {
      throw NotExtendableError("algorithm2: \"" + u.str() + "\" is not right extendable",
                               verdict.max_depth);
    }
    const Alphabet alphabet = u.alphabet();
    Algorithm2Trace trace;
    Word pad(alphabet);
    Word hat(Alphabet::binary());

    const bool binary_start =
        u.is_binary() &&
        (alphabet.size() == 2 || extendable_for_search(u.with_alphabet(Alphabet::binary())));
    if (binary_start) {
      hat = u.with_alphabet(Alphabet::binary());
    } else {
      // Step 1: push c-letters until a long binary context exists.
      Word node = u;
      while (true) {
        if (!node.is_binary()) {
          const Word run = binary_run(node);
          auto w = first_binary_context(node, ceil_half(node.size()), [&](const Word& cand) {
            return extendable_for_search(run + cand);
          });
          if (w) {
            hat = run + *w;
            pad.append(*w);
            break;
          }
        }
        if (trace.c_letter_steps == kMaxAlgorithm2Steps) {
          throw ResourceLimitError("algorithm2: too many c-letter steps");
        }
        auto vc = shortest_c_context(node);
        if (!vc) throw std::logic_error("algorithm2: no extendable context ending with a c-letter");
        node.append(*vc);
        pad.append(*vc);
        ++trace.c_letter_steps;
      }
    }

    // Step 2: push markers until a long uniform context exists.
    while (true) {
      if (auto w = find_uniform_context(hat, 2 * hat.size() + 3)) {
        TailCertificate inner = t_extend_with_uniform_context(hat, *w);
        pad.append(inner.pad);
        trace.certificate = TailCertificate{pad.with_alphabet(alphabet), inner.r};
        break;
      }
      if (trace.marker_steps == kMaxAlgorithm2Steps) {
        throw ResourceLimitError("algorithm2: too many marker steps");
      }
      auto v = shortest_marker_context(hat);
      if (!v) throw std::logic_error("algorithm2: no extendable context ending with a marker");
      hat.append(*v);
      pad.append(*v);
      ++trace.marker_steps;
    }
    require_verified(u, trace.certificate, "algorithm2");
    return trace;
  }
};

ExtensionEngine::ExtensionEngine(SearchOptions options)
    : impl_(std::make_unique<Impl>(options)) {}

ExtensionEngine::~ExtensionEngine() = default;

const SearchOptions& ExtensionEngine::options() const noexcept { return impl_->options; }

ExtendabilityVerdict ExtensionEngine::right(const Word& u) {
  require_cube_free(u, "is_right_extendable");
  return impl_->right(u);
}

ExtendabilityVerdict ExtensionEngine::left(const Word& u) {
  require_cube_free(u, "is_left_extendable");
  return impl_->right(reverse(u));
}

TailCertificate ExtensionEngine::algorithm2(const Word& u) {
  return impl_->algorithm2(u).certificate;
}

Algorithm2Trace ExtensionEngine::algorithm2_traced(const Word& u) {
  return impl_->algorithm2(u);
}

std::size_t ExtensionEngine::cached_verdicts() const {
  std::lock_guard lock(impl_->mutex);
  return impl_->memo.size();
}

ExtensionEngine& default_engine() {
  static ExtensionEngine engine;
  return engine;
}

ExtendabilityVerdict is_right_extendable(const Word& u) { return default_engine().right(u); }
ExtendabilityVerdict is_left_extendable(const Word& u) { return default_engine().left(u); }
TailCertificate algorithm2(const Word& u) { return default_engine().algorithm2(u); }

double log_bound(std::size_t n) {
  if (n < 1) throw PreconditionError("log_bound: n must be >= 1");
  return std::max(1.0, 8.13 * std::log2(static_cast<double>(n)) - 15.64);
}

std::size_t chain_length_audit(const Word& u, const Word& w) {
  require_cube_free(u, "chain_length_audit");
  Word current = u;
  if (!is_cube_free(u + w)) {
    throw PreconditionError("chain_length_audit: \"" + w.str() + "\" is not a right context of \"" +
                            u.str() + "\"");
  }
  // Periods usable at step i given some valid choice at step i-1.
  std::vector<std::size_t> previous;
  std::size_t k = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    current.push_back(w[i]);
    std::vector<std::size_t> usable;
    for (std::size_t p = 2; 3 * p - 2 <= current.size(); ++p) {
      if (max_periodic_suffix(current, p).length < 3 * p - 2) continue;
      bool reachable = (i == 0) || std::any_of(previous.begin(), previous.end(),
                                               [p](std::size_t q) { return q != p; });
      if (reachable) usable.push_back(p);
    }
    if (usable.empty()) break;
    previous = std::move(usable);
    k = i + 1;
  }
  return k;
}

}  // namespace cubefree
