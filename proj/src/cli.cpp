#include "cubefree/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "cubefree/analysis.hpp"
#include "cubefree/certificate_io.hpp"
#include "cubefree/error.hpp"
#include "cubefree/extend.hpp"
#include "cubefree/oracle.hpp"
#include "cubefree/thue_morse.hpp"
#include "cubefree/transition.hpp"

namespace cubefree {
namespace {

using nlohmann::json;

struct Globals {
  std::optional<int> alphabet;
  bool json = false;
  std::optional<std::size_t> context_bound;
};

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

Word parse_word(const std::string& text, const Globals& g) {
  return Word::parse(text, g.alphabet);
}

// Both words over the forced alphabet, or the larger of the inferred ones.
std::pair<Word, Word> parse_pair(const std::string& a, const std::string& b, const Globals& g) {
  Word u = parse_word(a, g);
  Word v = parse_word(b, g);
  if (!g.alphabet) {
    const Alphabet common(std::max(u.alphabet().size(), v.alphabet().size()));
    u = u.with_alphabet(common);
    v = v.with_alphabet(common);
  }
  return {u, v};
}

SearchOptions search_options(const Globals& g) {
  SearchOptions opts;
  opts.assume_context_bound = g.context_bound;
  return opts;
}

void require_cube_free_input(const Word& w) {
  if (!is_cube_free(w)) throw PreconditionError("\"" + w.str() + "\" is not cube-free");
}

void emit(const Io& io, const json& j) { io.out << j.dump() << "\n"; }

int cmd_check(const std::string& text, const Globals& g, const Io& io) {
  Word w = parse_word(text, g);
  auto cube = find_cube(w);
  if (g.json) {
    json j{{"word", w.str()}, {"cube_free", !cube}};
    if (cube) {
      j["position"] = cube->position;
      j["period"] = cube->period;
      j["root"] = w.factor(cube->position, cube->position + cube->period - 1).str();
    }
    emit(io, j);
  } else if (cube) {
    io.out << "cube at " << cube->position << " period " << cube->period << " root "
           << w.factor(cube->position, cube->position + cube->period - 1) << "\n";
  } else {
    io.out << "cube-free\n";
  }
  return cube ? kExitNegative : kExitPositive;
}

int cmd_extendable(const std::string& side_text, const std::string& text, const Globals& g,
                   const Io& io) {
  Word w = parse_word(text, g);
  require_cube_free_input(w);
  ExtensionEngine engine(search_options(g));
  const Side side = side_text == "left" ? Side::LEFT : Side::RIGHT;
  ExtendabilityVerdict v = side == Side::LEFT ? engine.left(w) : engine.right(w);
  json j;
  if (v.extendable) {
    j = to_json(CertificateRecord{w, *v.certificate, side});
  } else {
    j = json{{"exhausted_at", v.max_depth}};
  }
  if (g.json) {
    j["extendable"] = v.extendable;
  } else {
    io.out << (v.extendable ? "yes" : "no") << "\n";
  }
  emit(io, j);
  return v.extendable ? kExitPositive : kExitNegative;
}

int cmd_extend(const std::string& text, const Globals& g, const Io& io) {
  Word w = parse_word(text, g);
  require_cube_free_input(w);
  ExtensionEngine engine(search_options(g));
  try {
    Algorithm2Trace trace = engine.algorithm2_traced(w);
    json j = to_json(CertificateRecord{w, trace.certificate, Side::RIGHT});
    if (g.json) {
      j["c_letter_steps"] = trace.c_letter_steps;
      j["marker_steps"] = trace.marker_steps;
    }
    emit(io, j);
    return kExitPositive;
  } catch (const NotExtendableError& e) {
    if (!g.json) io.out << "not right extendable\n";
    emit(io, json{{"exhausted_at", e.exhausted_at()}});
    return kExitNegative;
  }
}

int cmd_transition(const std::string& a, const std::string& b, const Globals& g, const Io& io) {
  auto [u, v] = parse_pair(a, b, g);
  ExtensionEngine engine(search_options(g));
  TransitionResult r = transition_exists(u, v, engine);
  if (g.json) {
    json j;
    if (r.exists) {
      j = to_json(TransitionRecord{u, v, *r.witness});
    } else {
      j = json{{"u", u.str()}, {"v", v.str()}};
    }
    j["exists"] = r.exists;
    j["method"] = std::string(method_name(r.method));
    emit(io, j);
  } else if (r.exists) {
    io.out << *r.witness << "\n";
    io.out << "verified: u w v is cube-free (" << method_name(r.method) << ", |w| = "
           << r.witness->size() << ")\n";
  } else {
    io.out << "none\n";
    io.out << "every context tree that could contain a witness is finite and was exhausted\n";
  }
  return r.exists ? kExitPositive : kExitNegative;
}

int cmd_markers(const std::string& text, const Globals& g, const Io& io) {
  Word w = parse_word(text, g);
  if (!w.is_binary()) throw PreconditionError("markers: word must be binary");
  w = w.with_alphabet(Alphabet::binary());
  auto found = scan_markers(w);
  std::optional<MarkerFactorization> fact;
  if (is_cube_free(w) && ends_with_marker(w.letters())) fact = factorize(w);
  if (g.json) {
    json list = json::array();
    for (const Marker& m : found) {
      list.push_back(json{{"kind", std::string(marker_name(m.kind))}, {"position", m.position}});
    }
    json j{{"word", w.str()}, {"markers", list}};
    if (fact) {
      json segs = json::array();
      for (const Word& s : fact->segments) segs.push_back(s.str());
      j["factorization"] = segs;
    }
    emit(io, j);
    return kExitPositive;
  }
  if (found.empty()) {
    io.out << "(none)\n";
  } else {
    for (std::size_t i = 0; i < found.size(); ++i) {
      io.out << (i ? " " : "") << marker_name(found[i].kind) << "@" << found[i].position;
    }
    io.out << "\n";
  }
  if (fact) {
    io.out << "factorization ";
    for (std::size_t i = 0; i < fact->segments.size(); ++i) {
      io.out << (i ? "|" : "") << fact->segments[i];
    }
    io.out << "\n";
  }
  return kExitPositive;
}

struct TmArgs {
  std::optional<std::size_t> prefix;
  std::optional<std::string> factor;
  std::vector<std::size_t> range;
};

int cmd_tm(const TmArgs& a, const Globals& g, const Io& io) {
  const int given = a.prefix.has_value() + a.factor.has_value() + !a.range.empty();
  if (given != 1) throw PreconditionError("tm: give exactly one of --prefix, --factor, --range");
  if (a.prefix) {
    Word t = tm_prefix(*a.prefix);
    if (g.json) {
      emit(io, json{{"prefix", t.str()}});
    } else {
      io.out << t << "\n";
    }
    return kExitPositive;
  }
  if (!a.range.empty()) {
    Word t = tm_range(a.range[0], a.range[1]);
    if (g.json) {
      emit(io, json{{"range", t.str()}, {"i", a.range[0]}, {"j", a.range[1]}});
    } else {
      io.out << t << "\n";
    }
    return kExitPositive;
  }
  Word w = Word::parse(*a.factor, g.alphabet);
  if (!w.is_binary()) throw PreconditionError("tm: a factor of T must be binary");
  auto pos = tm_first_occurrence(w.with_alphabet(Alphabet::binary()));
  if (g.json) {
    json j{{"word", w.str()}, {"factor", pos.has_value()}};
    if (pos) j["position"] = *pos;
    emit(io, j);
  } else if (pos) {
    io.out << "factor at " << *pos << "\n";
  } else {
    io.out << "not-a-factor\n";
  }
  return pos ? kExitPositive : kExitNegative;
}

int cmd_enumerate(int d, std::size_t n, bool list, const Globals& g, const Io& io) {
  oracle::Enumeration e = oracle::enumerate_cube_free(d, n, list);
  if (g.json) {
    json j{{"alphabet", d}, {"length", n}, {"count", e.count}};
    if (list) {
      json words = json::array();
      for (const Word& w : e.words) words.push_back(w.str());
      j["words"] = words;
    }
    emit(io, j);
    return kExitPositive;
  }
  io.out << e.count << "\n";
  for (const Word& w : e.words) io.out << w << "\n";
  return kExitPositive;
}

int cmd_audit(std::size_t max_n, const Globals& g, const Io& io) {
  if (max_n > oracle::kMaxChainSearchLength) {
    throw ResourceLimitError("audit: length is capped at " +
                             std::to_string(oracle::kMaxChainSearchLength));
  }
  if (max_n < 1) throw PreconditionError("audit: length must be at least 1");
  std::vector<std::size_t> max_k(max_n + 1, 0);
  std::vector<oracle::ChainRecord> worst(max_n + 1);
  for (const oracle::ChainRecord& rec : oracle::greedy_chain_search(max_n)) {
    const std::size_t n = rec.u.size();
    if (worst[n].u.empty() || rec.k > max_k[n]) {
      max_k[n] = rec.k;
      worst[n] = rec;
    }
  }
  bool violated = false;
  json rows = json::array();
  if (!g.json) io.out << "n\tmax_k\tbound\twitness\n";
  for (std::size_t n = 1; n <= max_n; ++n) {
    const double bound = log_bound(n);
    const bool bad = static_cast<double>(max_k[n]) > bound;
    violated = violated || bad;
    if (g.json) {
      rows.push_back(json{{"n", n}, {"max_k", max_k[n]}, {"bound", bound},
                          {"u", worst[n].u.str()}, {"w", worst[n].w.str()}, {"violation", bad}});
    } else {
      std::ostringstream b;
      b.setf(std::ios::fixed);
      b.precision(2);
      b << bound;
      io.out << n << "\t" << max_k[n] << "\t" << b.str() << "\t" << worst[n].u << "|"
             << worst[n].w << (bad ? "\tVIOLATION" : "") << "\n";
    }
  }
  if (g.json) emit(io, json{{"rows", rows}, {"violation", violated}});
  return violated ? kExitNegative : kExitPositive;
}

int cmd_verify(const std::string& source, const Globals& g, const Io& io) {
  json j;
  try {
    if (source == "-") {
      j = json::parse(io.in);
    } else {
      std::ifstream f(source);
      if (!f) throw ParseError("cannot open \"" + source + "\"");
      j = json::parse(f);
    }
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  const bool ok = verify_json(j);
  if (g.json) {
    emit(io, json{{"verified", ok}});
  } else {
    io.out << (ok ? "verified" : "verification failed") << "\n";
  }
  return ok ? kExitPositive : kExitNegative;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Cube-free words: detection, extendability certificates and transitions"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  int alphabet = 0;
  std::size_t context_bound = 0;
  auto* alphabet_opt =
      app.add_option("--alphabet", alphabet, "Force the alphabet size d (letters a..)")
          ->check(CLI::Range(Alphabet::kMinSize, Alphabet::kMaxSize));
  app.add_flag("--json", g.json, "Machine-readable output");
  auto* bound_opt = app.add_option("--assume-context-bound", context_bound,
                                   "Heuristic: a context of length B counts as extendable");

  std::string word, word2, side, source = "-";
  TmArgs tm_args;
  int enum_d = 2;
  std::size_t enum_n = 0, audit_n = 0;
  bool enum_list = false;

  auto* check = app.add_subcommand("check", "Find a cube in a word");
  check->add_option("word", word)->required();
  auto* extendable = app.add_subcommand("extendable", "Decide right or left extendability");
  extendable->add_option("side", side)->required()->check(CLI::IsMember({"right", "left"}));
  extendable->add_option("word", word)->required();
  auto* extend = app.add_subcommand("extend", "Explicit infinite right context");
  extend->add_option("word", word)->required();
  auto* transition = app.add_subcommand("transition", "Find w with u w v cube-free");
  transition->add_option("u", word)->required();
  transition->add_option("v", word2)->required();
  auto* markers = app.add_subcommand("markers", "List markers and the marker factorization");
  markers->add_option("word", word)->required();
  auto* tm = app.add_subcommand("tm", "Thue-Morse prefixes, ranges and factors");
  tm->add_option("--prefix", tm_args.prefix, "Prefix of length n");
  tm->add_option("--factor", tm_args.factor, "Test whether a word occurs in T");
  tm->add_option("--range", tm_args.range, "T[i..j], 1-based")->expected(2);
  auto* enumerate = app.add_subcommand("enumerate", "Count cube-free words of length n");
  enumerate->add_option("d", enum_d)->required()->check(
      CLI::Range(Alphabet::kMinSize, Alphabet::kMaxSize));
  enumerate->add_option("n", enum_n)->required();
  enumerate->add_flag("--list", enum_list, "Also print the words");
  auto* audit = app.add_subcommand("audit", "Longest periodic chains against the log bound");
  audit->add_option("max_n", audit_n)->required();
  auto* verify_cmd = app.add_subcommand("verify", "Re-check a certificate or witness JSON");
  verify_cmd->add_option("file", source, "JSON file, or - for stdin");

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPositive : kExitUsage;
  }
  if (alphabet_opt->count()) g.alphabet = alphabet;
  if (bound_opt->count()) g.context_bound = context_bound;

  const Io io{in, out, err};
  try {
    if (check->parsed()) return cmd_check(word, g, io);
    if (extendable->parsed()) return cmd_extendable(side, word, g, io);
    if (extend->parsed()) return cmd_extend(word, g, io);
    if (transition->parsed()) return cmd_transition(word, word2, g, io);
    if (markers->parsed()) return cmd_markers(word, g, io);
    if (tm->parsed()) return cmd_tm(tm_args, g, io);
    if (enumerate->parsed()) return cmd_enumerate(enum_d, enum_n, enum_list, g, io);
    if (audit->parsed()) return cmd_audit(audit_n, g, io);
    if (verify_cmd->parsed()) return cmd_verify(source, g, io);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace cubefree
