#pragma once

#include <cstddef>
#include <string>

#include "json.hpp"

#include "cubefree/extend.hpp"
#include "cubefree/words.hpp"

namespace cubefree {

enum class Side { RIGHT, LEFT };

/// A certificate together with the word it extends. For the left side the
/// infinite word is reverse(word) Y T[r..], read backwards.
struct CertificateRecord {
  Word word;
  TailCertificate certificate;
  Side side = Side::RIGHT;
};

/// A transition witness: u w v is cube-free.
struct TransitionRecord {
  Word u;
  Word v;
  Word w;
};

/// {"word", "Y", "r", "verified_prefix", "alphabet", "side"}; r is 1-based.
nlohmann::json to_json(const CertificateRecord& record);
/// {"u", "v", "w", "alphabet"}.
nlohmann::json to_json(const TransitionRecord& record);

/// Throws ParseError on missing fields, wrong types or letters outside the alphabet.
CertificateRecord certificate_from_json(const nlohmann::json& j);
TransitionRecord transition_from_json(const nlohmann::json& j);

bool verify(const CertificateRecord& record);
bool verify(const TransitionRecord& record);

/// Dispatches on the fields present: "Y" for certificates, "w" for transitions.
bool verify_json(const nlohmann::json& j);

}  // namespace cubefree
