#include "cubefree/transition.hpp"

#include <deque>
#include <stdexcept>
#include <string>

#include "cubefree/error.hpp"
#include "cubefree/thue_morse.hpp"

namespace cubefree {
namespace {

constexpr std::size_t kDirectSlack = 4;
constexpr int kSpliceGrowth = 8;

void require_cube_free(const Word& w, const char* op) {
  if (!is_cube_free(w)) {
    throw PreconditionError(std::string(op) + ": \"" + w.str() + "\" is not cube-free");
  }
}

void require_pair(const Word& u, const Word& v, const char* op) {
  require_cube_free(u, op);
  require_cube_free(v, op);
  if (u.alphabet() != v.alphabet()) {
    throw PreconditionError(std::string(op) + ": words are over different alphabets");
  }
}

std::size_t ceil_half(std::size_t n) { return (n + 1) / 2; }

// Shortest w (then lexicographic) with u w cube-free and u w v cube-free,
// searching contexts of u up to `max_len` letters, or the whole finite
// context tree when `max_len` is empty.
std::optional<Word> search_witness(const Word& u, const Word& v,
                                   std::optional<std::size_t> max_len,
                                   std::size_t node_budget) {
  const int d = u.alphabet().size();
  std::deque<Word> queue;
  queue.emplace_back(u.alphabet());
  std::size_t visited = 0;
  std::vector<Letter> buf;
  while (!queue.empty()) {
    Word w = std::move(queue.front());
    queue.pop_front();
    if (++visited > node_budget) {
      throw ResourceLimitError("transition search exceeded the node budget");
    }
    buf.assign(u.letters().begin(), u.letters().end());
    buf.insert(buf.end(), w.letters().begin(), w.letters().end());
    bool ok = true;
    for (Letter x : v.letters()) {
      buf.push_back(x);
      if (ends_with_cube(buf)) {
        ok = false;
        break;
      }
    }
    if (ok) return w;
    if (max_len && w.size() >= *max_len) continue;
    buf.resize(u.size() + w.size());
    for (int a = 0; a < d; ++a) {
      buf.push_back(static_cast<Letter>(a));
      if (!ends_with_cube(buf)) queue.push_back(w + static_cast<Letter>(a));
      buf.pop_back();
    }
  }
  return std::nullopt;
}

Word construct_binary(const Word& u, const Word& v, ExtensionEngine& engine) {
  const Word rv = reverse(v);
  for (const Word* end : {&u, &rv}) {
    ExtendabilityVerdict verdict = engine.right(*end);
    if (!verdict.extendable) {
      throw NotExtendableError("construct_transition: \"" + (end == &u ? u : v).str() +
                                   "\" is not extendable towards the other word",
                               verdict.max_depth);
    }
  }
  const TailCertificate c1 = engine.algorithm2(u);
  const TailCertificate c2 = engine.algorithm2(rv);
  const std::size_t n1 = u.size() + c1.pad.size();
  const std::size_t n2 = rv.size() + c2.pad.size();
  for (int grow = 0; grow < kSpliceGrowth; ++grow) {
    const std::size_t len1 = (2 * n1 + 1) * (std::size_t{1} << grow) - 1;
    const std::size_t len2 = (2 * n2 + 1) * (std::size_t{1} << grow) - 1;
    Word u1 = len1 ? tm_range(c1.r, c1.r + len1 - 1) : Word();
    Word v1 = len2 ? tm_range(c2.r, c2.r + len2 - 1) : Word();
    Word joint;
    try {
      joint = splice_pattern(u1, reverse(v1));
    } catch (const ResourceLimitError&) {
      continue;
    }
    Word result = c1.pad + joint + reverse(c2.pad);
    result = result.with_alphabet(u.alphabet());
    if (is_cube_free(u + result + v)) return result;
  }
  throw std::logic_error("construct_transition: spliced word for (\"" + u.str() + "\", \"" +
                         v.str() + "\") is not cube-free");
}

struct SplitContext {
  Word x;   ///< ends with a c-letter
  Word u1;  ///< binary, length ceil(|u x| / 2)
};

// Cuts an infinite right context of u with finitely many c-letters after its
// last c-letter. A purely binary context gets one letter replaced by c_1.
SplitContext split_context(const Word& u, ExtensionEngine& engine) {
  const Alphabet alphabet = u.alphabet();
  const TailCertificate cert = engine.algorithm2(u);
  auto context = [&](const TailCertificate& c, std::size_t length) {
    Word out = c.pad;
    if (length > out.size()) out.append(tm_range(c.r, c.r + length - out.size() - 1));
    return out.prefix(length).with_alphabet(alphabet);
  };
  auto cut = [&](const TailCertificate& c, std::size_t q) {
    const std::size_t len = ceil_half(u.size() + q);
    Word ctx = context(c, q + len);
    return SplitContext{ctx.prefix(q), ctx.factor(q + 1, q + len).with_alphabet(Alphabet::binary())};
  };

  std::size_t last_c = 0;
  for (std::size_t i = 0; i < cert.pad.size(); ++i) {
    if (Alphabet::is_c_letter(cert.pad[i])) last_c = i + 1;
  }
  if (last_c > 0) return cut(cert, last_c);

  const std::size_t first = std::max<std::size_t>(1, u.size());
  const std::size_t limit = first + 2 * cert.pad.size() + 16;
  std::vector<std::size_t> positions{first};
  for (std::size_t q = 1; q <= limit; ++q) {
    if (q != first) positions.push_back(q);
  }
  for (std::size_t q : positions) {
    const std::size_t lo = std::max(q, cert.pad.size());
    const std::size_t hi = lo + 2 * (u.size() + q) + 16;
    for (std::size_t m = lo; m <= hi; ++m) {
      Word pad = context(cert, m);
      Word forced = pad.prefix(q - 1) + Letter{2};
      forced.append(pad.factor(q + 1, m));
      if (!is_cube_free(u + forced.prefix(q))) break;
      TailCertificate candidate{forced, cert.r + (m - cert.pad.size())};
      if (verify_certificate(u, candidate)) return cut(candidate, q);
    }
  }
  throw std::logic_error("transition_dary: no c-letter can be forced into a context of \"" +
                         u.str() + "\"");
}

}  // namespace

std::string_view method_name(TransitionMethod method) {
  switch (method) {
    case TransitionMethod::DIRECT_CONTEXT: return "DIRECT_CONTEXT";
    case TransitionMethod::THEOREM: return "THEOREM";
    case TransitionMethod::EXHAUSTED: return "EXHAUSTED";
  }
  return "?";
}

Word splice(const Word& u, const Word& u1, const Word& v, const Word& v1) {
  for (const Word* w : {&u, &u1, &v, &v1}) {
    if (!w->is_binary()) throw PreconditionError("splice: words must be binary");
  }
  require_cube_free(u, "splice");
  require_cube_free(v, "splice");
  if (u1.size() != 2 * u.size() || v1.size() != 2 * v.size()) {
    throw PreconditionError("splice: contexts must have lengths 2|u| and 2|v|");
  }
  if (!is_tm_factor(u1) || !is_tm_factor(v1)) {
    throw PreconditionError("splice: contexts must be Thue-Morse factors");
  }
  if (!is_cube_free(u + u1) || !is_cube_free(v + v1)) {
    throw PreconditionError("splice: supplied words are not right contexts");
  }
  Word w = splice_pattern(u1, reverse(v1));
  if (!is_cube_free(u + w + reverse(v))) {
    throw std::logic_error("splice: u w reverse(v) is not cube-free");
  }
  return w;
}

TransitionResult transition_exists(const Word& u, const Word& v, ExtensionEngine& engine) {
  require_pair(u, v, "transition_exists");
  const std::size_t budget = engine.options().node_budget;
  auto found = [](Word w, TransitionMethod m) { return TransitionResult{true, std::move(w), m}; };

  if (!engine.right(u).extendable) {
    if (auto w = search_witness(u, v, std::nullopt, budget)) {
      return found(*w, TransitionMethod::DIRECT_CONTEXT);
    }
    return TransitionResult{};
  }
  if (!engine.left(v).extendable) {
    if (auto w = search_witness(reverse(v), reverse(u), std::nullopt, budget)) {
      return found(reverse(*w), TransitionMethod::DIRECT_CONTEXT);
    }
    return TransitionResult{};
  }
  if (auto w = search_witness(u, v, kDirectSlack, budget)) {
    return found(*w, TransitionMethod::DIRECT_CONTEXT);
  }
  return found(construct_transition(u, v, engine), TransitionMethod::THEOREM);
}

Word construct_transition(const Word& u, const Word& v, ExtensionEngine& engine) {
  require_pair(u, v, "construct_transition");
  if (u.alphabet().size() >= 3) return transition_dary(u, v, engine);
  return construct_binary(u, v, engine);
}

Word transition_dary(const Word& u, const Word& v, ExtensionEngine& engine) {
  require_pair(u, v, "transition_dary");
  if (u.alphabet().size() < 3) {
    throw PreconditionError("transition_dary: alphabet must have at least 3 letters");
  }
  ExtendabilityVerdict right = engine.right(u);
  if (!right.extendable) {
    throw NotExtendableError("transition_dary: \"" + u.str() + "\" is not right extendable",
                             right.max_depth);
  }
  ExtendabilityVerdict left = engine.left(v);
  if (!left.extendable) {
    throw NotExtendableError("transition_dary: \"" + v.str() + "\" is not left extendable",
                             left.max_depth);
  }
  SplitContext front = split_context(u, engine);
  SplitContext back = split_context(reverse(v), engine);
  Word v1 = reverse(back.u1);
  Word w1 = construct_binary(front.u1, v1, engine);
  Word result = front.x + front.u1.with_alphabet(u.alphabet()) + w1.with_alphabet(u.alphabet()) +
                v1.with_alphabet(u.alphabet()) + reverse(back.x);
  if (!is_cube_free(u + result + v)) {
    throw std::logic_error("transition_dary: assembled word for (\"" + u.str() + "\", \"" +
                           v.str() + "\") is not cube-free");
  }
  return result;
}

}  // namespace cubefree
