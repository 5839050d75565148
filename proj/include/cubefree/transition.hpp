#pragma once

#include <optional>
#include <string_view>

#include "cubefree/extend.hpp"
#include "cubefree/words.hpp"

namespace cubefree {

enum class TransitionMethod {
  DIRECT_CONTEXT,  ///< found by searching contexts of u (or left contexts of v)
  THEOREM,         ///< both ends extendable; witness built from certificates
  EXHAUSTED,       ///< a finite context tree was exhausted without a witness
};

std::string_view method_name(TransitionMethod method);

struct TransitionResult {
  bool exists = false;
  std::optional<Word> witness;  ///< u witness v is cube-free
  TransitionMethod method = TransitionMethod::EXHAUSTED;
};

/// Given TM-factor right contexts u1 of u (|u1| = 2|u|) and v1 of v
/// (|v1| = 2|v|), returns w = u1 w1 reverse(v1), a factor of T, such that
/// u w reverse(v) is cube-free.
Word splice(const Word& u, const Word& u1, const Word& v, const Word& v1);

/// Decides whether some w makes u w v cube-free and produces one.
TransitionResult transition_exists(const Word& u, const Word& v,
                                   ExtensionEngine& engine = default_engine());

/// Binary transition word for right-extendable u and left-extendable v,
/// assembled from the infinite contexts of u and reverse(v) joined inside T.
/// Delegates to transition_dary when the alphabet has a c-letter.
Word construct_transition(const Word& u, const Word& v,
                          ExtensionEngine& engine = default_engine());

/// Transition word x u1 w1 v1 y over an alphabet of size >= 3, where x ends
/// and y starts with a c-letter and u1 w1 v1 is a binary transition word.
Word transition_dary(const Word& u, const Word& v,
                     ExtensionEngine& engine = default_engine());

}  // namespace cubefree
