#include "cubefree/oracle.hpp"

#include <algorithm>
#include <string>

#include "cubefree/error.hpp"

namespace cubefree::oracle {
namespace {

using Letters = std::vector<Letter>;

Letters copy(const Word& w) { return Letters(w.letters().begin(), w.letters().end()); }

bool equal_blocks(const Letters& s, std::size_t i, std::size_t j, std::size_t len) {
  for (std::size_t k = 0; k < len; ++k) {
    if (s[i + k] != s[j + k]) return false;
  }
  return true;
}

bool has_cube(const Letters& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t p = 1; i + 3 * p <= s.size(); ++p) {
      if (equal_blocks(s, i, i + p, p) && equal_blocks(s, i, i + 2 * p, p)) return true;
    }
  }
  return false;
}

bool has_suffix_cube(const Letters& s) {
  for (std::size_t p = 1; 3 * p <= s.size(); ++p) {
    const std::size_t i = s.size() - 3 * p;
    if (equal_blocks(s, i, i + p, p) && equal_blocks(s, i, i + 2 * p, p)) return true;
  }
  return false;
}

const std::vector<Letters>& markers() {
  static const std::vector<Letters> m = {
      {0, 0, 1, 0, 0}, {0, 1, 0, 1, 0}, {1, 0, 1, 0, 1}, {1, 1, 0, 1, 1}};
  return m;
}

std::size_t count_markers(const Letters& s) {
  std::size_t n = 0;
  for (std::size_t i = 0; i + 5 <= s.size(); ++i) {
    for (const Letters& m : markers()) {
      if (std::equal(m.begin(), m.end(), s.begin() + static_cast<std::ptrdiff_t>(i))) ++n;
    }
  }
  return n;
}

Letters power(const Letters& x, int e) {
  Letters out;
  for (int i = 0; i < e; ++i) out.insert(out.end(), x.begin(), x.end());
  return out;
}

Letters theta(const Letters& u) {
  Letters out;
  for (Letter x : u) {
    out.push_back(x);
    out.push_back(static_cast<Letter>(1 - x));
  }
  return out;
}

bool periodic_suffix(const Letters& s, std::size_t p, std::size_t len) {
  if (len > s.size()) return false;
  const std::size_t start = s.size() - len;
  for (std::size_t i = start; i + p < s.size(); ++i) {
    if (s[i] != s[i + p]) return false;
  }
  return true;
}

void require_binary(const Word& w, const char* op) {
  for (Letter x : w.letters()) {
    if (x > 1) throw PreconditionError(std::string(op) + ": word is not binary");
  }
}

}  // namespace

bool naive_is_cube_free(const Word& w) { return !has_cube(copy(w)); }

Enumeration enumerate_cube_free(int d, std::size_t n, bool list) {
  if (d < Alphabet::kMinSize || d > Alphabet::kMaxSize) {
    throw PreconditionError("enumerate_cube_free: alphabet size out of range");
  }
  if (list && n > kMaxListLength) {
    throw ResourceLimitError("enumerate_cube_free: listing is capped at length " +
                             std::to_string(kMaxListLength));
  }
  const Alphabet alphabet(d);
  Enumeration out;
  Word w(alphabet);
  std::uint64_t nodes = 0;
  auto dfs = [&](auto&& self) -> void {
    if (++nodes > kMaxEnumerationNodes) {
      throw ResourceLimitError("enumerate_cube_free: search exceeded the node cap");
    }
    if (w.size() == n) {
      ++out.count;
      if (list) {
        if (out.count > kMaxListCount) {
          throw ResourceLimitError("enumerate_cube_free: more than 10^6 words to list");
        }
        out.words.push_back(w);
      }
      return;
    }
    for (int a = 0; a < d; ++a) {
      if (append_check(w, static_cast<Letter>(a))) continue;
      w.push_back(static_cast<Letter>(a));
      self(self);
      w.pop_back();
    }
  };
  dfs(dfs);
  return out;
}

std::uint64_t filter_count(int d, std::size_t n) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= static_cast<std::uint64_t>(d);
    if (total > kMaxEnumerationNodes) {
      throw ResourceLimitError("filter_count: too many words");
    }
  }
  std::uint64_t count = 0;
  Letters s(n);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (std::size_t i = 0; i < n; ++i) {
      s[n - 1 - i] = static_cast<Letter>(c % static_cast<std::uint64_t>(d));
      c /= static_cast<std::uint64_t>(d);
    }
    if (!has_cube(s)) ++count;
  }
  return count;
}

ContextTreeReport context_tree(const Word& u, std::size_t depth) {
  if (!naive_is_cube_free(u)) {
    throw PreconditionError("context_tree: \"" + u.str() + "\" is not cube-free");
  }
  const Letter d = static_cast<Letter>(u.alphabet().size());
  ContextTreeReport report;
  report.root = u;
  std::vector<Letters> level{copy(u)};
  report.alive_at_depth[0] = 1;
  for (std::size_t k = 1; k <= depth && !level.empty(); ++k) {
    std::vector<Letters> next;
    for (const Letters& s : level) {
      for (Letter a = 0; a < d; ++a) {
        Letters t = s;
        t.push_back(a);
        if (!has_suffix_cube(t)) next.push_back(std::move(t));
      }
    }
    if (next.empty()) break;
    report.alive_at_depth[k] = next.size();
    report.max_depth = k;
    level = std::move(next);
  }
  report.exhausted = report.max_depth < depth;
  return report;
}

bool survives_to_depth(const Word& u, std::size_t depth) {
  if (!naive_is_cube_free(u)) {
    throw PreconditionError("survives_to_depth: \"" + u.str() + "\" is not cube-free");
  }
  const Letter d = static_cast<Letter>(u.alphabet().size());
  Letters s = copy(u);
  const std::size_t target = s.size() + depth;
  auto dfs = [&](auto&& self) -> bool {
    if (s.size() == target) return true;
    for (Letter a = 0; a < d; ++a) {
      s.push_back(a);
      if (!has_suffix_cube(s) && self(self)) return true;
      s.pop_back();
    }
    return false;
  };
  return dfs(dfs);
}

std::optional<ThetaDecomposition> theta_decompose(const Word& w) {
  require_binary(w, "theta_decompose");
  const Letters s = copy(w);
  const std::size_t n = s.size();
  // c and d range over {empty, a, b}; the middle must be an image under theta.
  for (std::size_t lead = 0; lead <= 1 && lead <= n; ++lead) {
    for (std::size_t trail = 0; trail <= 1 && lead + trail <= n; ++trail) {
      const std::size_t mid = n - lead - trail;
      if (mid % 2 != 0) continue;
      Letters pre(s.begin() + static_cast<std::ptrdiff_t>(lead),
                  s.begin() + static_cast<std::ptrdiff_t>(lead + mid));
      Letters u;
      for (std::size_t i = 0; i < mid; i += 2) u.push_back(pre[i]);
      if (theta(u) != pre) continue;
      ThetaDecomposition out;
      if (lead) out.c = s.front();
      if (trail) out.d = s.back();
      out.u = Word(u, Alphabet::binary());
      return out;
    }
  }
  return std::nullopt;
}

bool is_overlap_free(const Word& w) {
  require_binary(w, "is_overlap_free");
  const Letters s = copy(w);
  // c x c x c is a factor of length 2p + 1 with period p = |x| + 1.
  for (std::size_t p = 1; 2 * p + 1 <= s.size(); ++p) {
    for (std::size_t i = 0; i + 2 * p + 1 <= s.size(); ++i) {
      bool periodic = true;
      for (std::size_t k = i; k + p < i + 2 * p + 1; ++k) {
        if (s[k] != s[k + p]) {
          periodic = false;
          break;
        }
      }
      if (periodic) return false;
    }
  }
  return true;
}

std::string_view cube_class_name(CubeClass c) {
  switch (c) {
    case CubeClass::MINI: return "MINI";
    case CubeClass::MIDI: return "MIDI";
    case CubeClass::MAXI: return "MAXI";
    case CubeClass::UNIFORM_CUBE: return "UNIFORM_CUBE";
  }
  return "?";
}

CubeClass classify_cube(const Word& containing, const CubeWitness& witness) {
  require_binary(containing, "classify_cube");
  const Letters s = copy(containing);
  const std::size_t p = witness.period;
  if (witness.position < 1 || p < 1 || witness.position - 1 + 3 * p > s.size()) {
    throw PreconditionError("classify_cube: witness out of range");
  }
  const std::size_t i = witness.position - 1;
  if (!equal_blocks(s, i, i + p, p) || !equal_blocks(s, i, i + 2 * p, p)) {
    throw PreconditionError("classify_cube: witness is not a cube");
  }
  Letters x(s.begin() + static_cast<std::ptrdiff_t>(i),
            s.begin() + static_cast<std::ptrdiff_t>(i + p));
  if (count_markers(x) > 0) return CubeClass::MAXI;
  if (count_markers(power(x, 2)) > 0) return CubeClass::MIDI;
  if (count_markers(power(x, 3)) > 0) return CubeClass::MINI;
  return CubeClass::UNIFORM_CUBE;
}

ChainRecord longest_chain(const Word& u) {
  require_binary(u, "greedy_chain_search");
  Letters s = copy(u);
  Letters w;
  ChainRecord best{u, Word(Alphabet::binary()), 0};
  auto dfs = [&](auto&& self, std::size_t previous) -> void {
    if (w.size() > best.k) {
      best.k = w.size();
      best.w = Word(w, Alphabet::binary());
    }
    for (Letter a : {Letter{0}, Letter{1}}) {
      s.push_back(a);
      w.push_back(a);
      if (!has_suffix_cube(s)) {
        for (std::size_t p = 2; 3 * p - 2 <= s.size(); ++p) {
          if (p != previous && periodic_suffix(s, p, 3 * p - 2)) self(self, p);
        }
      }
      w.pop_back();
      s.pop_back();
    }
  };
  dfs(dfs, 0);
  return best;
}

std::vector<ChainRecord> greedy_chain_search(std::size_t max_n) {
  if (max_n > kMaxChainSearchLength) {
    throw ResourceLimitError("greedy_chain_search: length is capped at " +
                             std::to_string(kMaxChainSearchLength));
  }
  std::vector<ChainRecord> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (const Word& u : enumerate_cube_free(2, n, true).words) out.push_back(longest_chain(u));
  }
  return out;
}

}  // namespace cubefree::oracle
