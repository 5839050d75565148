#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "cubefree/words.hpp"

// Brute-force reference implementations. Nothing here calls the optimized
// detectors, so results can be compared against them.
namespace cubefree::oracle {

/// Compares every factor xxx directly.
bool naive_is_cube_free(const Word& w);

struct Enumeration {
  std::uint64_t count = 0;
  std::vector<Word> words;  ///< filled only when a list was requested
};

inline constexpr std::size_t kMaxListLength = 24;
inline constexpr std::uint64_t kMaxListCount = 1'000'000;
inline constexpr std::uint64_t kMaxEnumerationNodes = 200'000'000;

/// Cube-free words of length n over an alphabet of size d, in lexicographic order.
Enumeration enumerate_cube_free(int d, std::size_t n, bool list = false);

/// Recount by generating all d^n words and filtering with naive_is_cube_free.
std::uint64_t filter_count(int d, std::size_t n);

struct ContextTreeReport {
  Word root;
  std::map<std::size_t, std::uint64_t> alive_at_depth;
  bool exhausted = false;  ///< no context of length `depth` exists
  std::size_t max_depth = 0;  ///< longest context found (at most `depth`)
};

ContextTreeReport context_tree(const Word& u, std::size_t depth);

/// Whether u has a right context of the given length; depth-first.
bool survives_to_depth(const Word& u, std::size_t depth);

struct ThetaDecomposition {
  std::optional<Letter> c;
  Word u;
  std::optional<Letter> d;
};

/// Some w = c theta(u) d with c, d in {a, b, empty}, if one exists.
std::optional<ThetaDecomposition> theta_decompose(const Word& w);

bool is_overlap_free(const Word& w);

enum class CubeClass { MINI, MIDI, MAXI, UNIFORM_CUBE };
std::string_view cube_class_name(CubeClass c);

/// Classification of a cube occurrence by where markers fall in its root x.
CubeClass classify_cube(const Word& containing, const CubeWitness& witness);

struct ChainRecord {
  Word u;
  Word w;
  std::size_t k = 0;
};

inline constexpr std::size_t kMaxChainSearchLength = 20;

/// For every binary cube-free u with 1 <= |u| <= max_n, the longest context
/// w along which every prefix extension u w[1..i] ends with a p_i-periodic
/// suffix of length 3p_i - 2 (p_i >= 2), consecutive p_i differing.
std::vector<ChainRecord> greedy_chain_search(std::size_t max_n);

/// Same search for a single word.
ChainRecord longest_chain(const Word& u);

}  // namespace cubefree::oracle
