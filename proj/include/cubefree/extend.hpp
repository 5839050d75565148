#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "cubefree/words.hpp"

namespace cubefree {

/// Finite data (Y, r) standing for the infinite right context Y T[r..] of
/// the word it certifies. `r` is a 1-based index into T.
struct TailCertificate {
  Word pad;
  std::size_t r = 1;
  friend bool operator==(const TailCertificate&, const TailCertificate&) = default;
};

struct ExtendabilityVerdict {
  bool extendable = false;
  std::optional<TailCertificate> certificate;  ///< present iff extendable
  int max_depth = 0;  ///< No: length of the longest context of the exhausted tree

  static ExtendabilityVerdict yes(TailCertificate cert) {
    return {true, std::move(cert), 0};
  }
  static ExtendabilityVerdict no(int max_depth) { return {false, std::nullopt, max_depth}; }
};

/// Number of tail letters checked when verifying a certificate for u:
/// 4(|uY| + 1) + 64. Any cube of u Y T[r..] meeting u Y has period at most
/// |uY| and at most 2|uY| letters in the tail, because T is overlap-free.
std::size_t verification_length(const Word& u, const TailCertificate& cert);

/// u Y T[r..r+L] is cube-free for L = verification_length(u, cert).
bool tail_is_cube_free(const Word& u, const TailCertificate& cert);

/// Structure at the seam: u Y = Q P S where S is uniform, has no prefix
/// ababa/babab and |S| >= 2|P|; P S is binary; and Q is either empty or
/// contains a c-letter with |P S| >= ceil(|Q|/2).
bool seam_conditions_hold(const Word& u, const TailCertificate& cert);

/// Both checks above.
bool verify_certificate(const Word& u, const TailCertificate& cert);

/// Right context of length 3 exists, or u is right aligned and one of length 2 exists.
bool has_short_context_for_uniform_extension(const Word& u);

/// T-extension of a uniform cube-free binary word with a short right
/// context: continues T when u is a factor of T, otherwise picks the tail
/// T[6..] or T[20..] (up to exchanging a and b) by the case analysis on the
/// last block of u.
TailCertificate t_extend_uniform(const Word& u);

/// T-extension of a cube-free binary u with a uniform right context w,
/// |w| >= 2|u| + 3, w not starting with ababa or babab. The pad of the
/// result is a prefix of w followed by whatever the uniform case adds.
TailCertificate t_extend_with_uniform_context(const Word& u, const Word& w);

struct SearchOptions {
  /// Heuristic: treat "has a right context of this length" as extendable
  /// inside Algorithm 2's intermediate searches. Not a proof.
  std::optional<std::size_t> assume_context_bound;
  /// Upper bound on context-tree nodes visited by a single decision.
  std::size_t node_budget = 4'000'000;
};

struct Algorithm2Trace {
  TailCertificate certificate;
  std::size_t c_letter_steps = 0;  ///< iterations appending v c (d >= 3)
  std::size_t marker_steps = 0;    ///< iterations appending a marker-ending context
};

/// Right/left extendability decisions and explicit infinite contexts.
/// Verdicts are memoized per word; the table is shared by all callers.
/// Safe to use from several threads.
class ExtensionEngine {
 public:
  explicit ExtensionEngine(SearchOptions options = {});
  ~ExtensionEngine();
  ExtensionEngine(const ExtensionEngine&) = delete;
  ExtensionEngine& operator=(const ExtensionEngine&) = delete;

  const SearchOptions& options() const noexcept;

  ExtendabilityVerdict right(const Word& u);
  /// Decided on the reversal; the certificate extends reverse(u) to the right.
  ExtendabilityVerdict left(const Word& u);

  TailCertificate algorithm2(const Word& u);
  Algorithm2Trace algorithm2_traced(const Word& u);

  std::size_t cached_verdicts() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Process-wide engine with default options.
ExtensionEngine& default_engine();

ExtendabilityVerdict is_right_extendable(const Word& u);
ExtendabilityVerdict is_left_extendable(const Word& u);
TailCertificate algorithm2(const Word& u);

/// max(1, 8.13 log2(n) - 15.64).
double log_bound(std::size_t n);

/// Largest k <= |w| such that for i = 1..k some p_i >= 2 makes the suffix of
/// length 3p_i - 2 of u w[1..i] p_i-periodic, with p_i != p_{i+1}.
std::size_t chain_length_audit(const Word& u, const Word& w);

}  // namespace cubefree
