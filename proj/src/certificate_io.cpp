#include "cubefree/certificate_io.hpp"

#include "cubefree/error.hpp"

namespace cubefree {
namespace {

using nlohmann::json;

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw ParseError(std::string("missing field \"") + name + "\"");
  }
  return j.at(name);
}

int alphabet_of(const json& j, std::initializer_list<const char*> word_fields) {
  if (j.is_object() && j.contains("alphabet")) {
    const json& a = j.at("alphabet");
    if (!a.is_number_integer()) throw ParseError("\"alphabet\" must be an integer");
    int d = a.get<int>();
    if (d < Alphabet::kMinSize || d > Alphabet::kMaxSize) {
      throw ParseError("\"alphabet\" out of range");
    }
    return d;
  }
  int d = Alphabet::kMinSize;
  for (const char* name : word_fields) {
    const json& f = field(j, name);
    if (!f.is_string()) throw ParseError(std::string("\"") + name + "\" must be a string");
    d = std::max(d, Word::parse(f.get<std::string>()).alphabet().size());
  }
  return d;
}

Word word_field(const json& j, const char* name, int d) {
  const json& f = field(j, name);
  if (!f.is_string()) throw ParseError(std::string("\"") + name + "\" must be a string");
  return Word::parse(f.get<std::string>(), d);
}

}  // namespace

json to_json(const CertificateRecord& record) {
  const Word base = record.side == Side::RIGHT ? record.word : reverse(record.word);
  return json{{"word", record.word.str()},
              {"Y", record.certificate.pad.str()},
              {"r", record.certificate.r},
              {"verified_prefix", verification_length(base, record.certificate)},
              {"alphabet", record.word.alphabet().size()},
              {"side", record.side == Side::RIGHT ? "right" : "left"}};
}

json to_json(const TransitionRecord& record) {
  return json{{"u", record.u.str()},
              {"v", record.v.str()},
              {"w", record.w.str()},
              {"alphabet", record.u.alphabet().size()}};
}

CertificateRecord certificate_from_json(const json& j) {
  const int d = alphabet_of(j, {"word", "Y"});
  CertificateRecord out;
  out.word = word_field(j, "word", d);
  out.certificate.pad = word_field(j, "Y", d);
  const json& r = field(j, "r");
  if (!r.is_number_integer() || r.get<long long>() < 1) {
    throw ParseError("\"r\" must be a positive integer");
  }
  out.certificate.r = r.get<std::size_t>();
  if (j.contains("side")) {
    const json& s = j.at("side");
    if (s == "right") {
      out.side = Side::RIGHT;
    } else if (s == "left") {
      out.side = Side::LEFT;
    } else {
      throw ParseError("\"side\" must be \"right\" or \"left\"");
    }
  }
  return out;
}

TransitionRecord transition_from_json(const json& j) {
  const int d = alphabet_of(j, {"u", "v", "w"});
  return TransitionRecord{word_field(j, "u", d), word_field(j, "v", d), word_field(j, "w", d)};
}

bool verify(const CertificateRecord& record) {
  const Word base = record.side == Side::RIGHT ? record.word : reverse(record.word);
  return verify_certificate(base, record.certificate);
}

bool verify(const TransitionRecord& record) {
  return is_cube_free(record.u + record.w + record.v);
}

bool verify_json(const json& j) {
  if (j.is_object() && j.contains("Y")) return verify(certificate_from_json(j));
  if (j.is_object() && j.contains("w")) return verify(transition_from_json(j));
  throw ParseError("expected a certificate (\"Y\") or a transition witness (\"w\")");
}

}  // namespace cubefree
