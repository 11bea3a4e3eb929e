#pragma once
// JSON documents that name a collection of algebra objects: groups, homs,
// simplicial groups, chain complexes, crossed structures, theory ids, and
// chain corpora. Every cross-reference is resolved and every object runs
// through its validating constructor at load time, so a Document that loads
// without throwing only hands out well-formed objects.
//
// Grammar (each section optional, entries keyed by name):
//   groups:     "S3"                              stock group by name
//               {"table": [[..], ..]}             validated Cayley table
//   homs:       {"from": g, "to": g, "map": [..]}
//   simplicial: {"kind": "dis"|"ind", "group": g, "degree": d}
//               {"kind": "eilenberg_maclane", "group": g, "n": n, "degree": d}
//               {"kind": "nerve", "crossed": x, "degree": d}
//               {"kind": "tables", "levels": [g..], "faces": [[hom..]..],
//                "degens": [[hom..]..]}
//   chains:     {"lo": k, "groups": [g..], "diffs": [hom..]}
//               {"kind": "moore", "simplicial": s}
//   crossed:    {"kind": "crossed_module", "a": g, "b": g, "delta": hom,
//                "action": "conjugation"|"trivial"|{"perms": [[..]..]}}
//               {"kind": "reduced_two_crossed"|"stable", "group": g}   (id, commutator)
//               {"kind": "reduced_two_crossed"|"stable", "l": g, "m": g,
//                "delta": hom, "lifting": [..flat..]}
//               {"kind": "two_crossed", "l": g, "m": g, "n": g, "delta2": hom,
//                "delta1": hom, "action_on_l": .., "action_on_m": ..,
//                "lifting": [..flat..]}
//               {"kind": "crossed_complex", "chain": c, "actions": [..]}
//   theories:   "mu-ngeq:N" | "mu-geq:N"
//   corpora:    [chain name, ..]
// Hom positions accept either the name of a homs entry (endpoint instances
// must match) or an inline {"map": [..]} / "zero" / "identity". The
// "conjugation" action acts through delta and needs delta injective with all
// conjugates landing in its image.
//
// Load failures throw Error with code "ParseError" (unreadable JSON),
// "DocumentInvalid" (wrong shape), "UnknownName", "CircularReference",
// "InstanceMismatch", or whatever the object constructors raise.

#include <map>
#include <string>
#include <vector>

#include "moorekit/chain.hpp"
#include "moorekit/crossed.hpp"
#include "moorekit/group.hpp"
#include "moorekit/simplicial.hpp"

namespace moorekit {

// "mu-ngeq:N" / "mu-geq:N" (accepts '_' for '-'); Error("DocumentInvalid").
TheoryId parse_theory_spec(const std::string& spec);

// Kind-tagged crossed entry; exactly one payload is populated.
struct CrossedEntry {
  std::string kind;  // crossed_module | two_crossed | reduced_two_crossed |
                     // stable | crossed_complex
  std::optional<CrossedModule> crossed_module;
  std::optional<TwoCrossedModule> two_crossed;
  std::optional<ReducedTwoCrossedModule> reduced;
  std::optional<StableCrossedModule> stable;
  std::optional<CrossedComplex> crossed_complex;
};

class Document {
 public:
  static Document load_file(const std::string& path);
  static Document load(const json& doc, std::string origin = "");

  // Lookups throw Error("UnknownName") with a {section, name} witness.
  const FiniteGroup& group(const std::string& name) const;
  const GroupHom& hom(const std::string& name) const;
  const SimplicialGroup& simplicial(const std::string& name) const;
  const ChainComplex& chain(const std::string& name) const;
  const CrossedEntry& crossed(const std::string& name) const;
  TheoryId theory(const std::string& name) const;
  const std::vector<ChainComplex>& corpus(const std::string& name) const;

  bool has(const std::string& section, const std::string& name) const;
  std::vector<std::string> names(const std::string& section) const;  // sorted

  // Re-derives the validation evidence for one named object and returns a
  // deterministic report with an "ok" flag; crossed entries include the full
  // per-axiom report. The one-argument form searches the sections in the
  // order groups, homs, simplicial, chains, crossed, theories, corpora.
  json validate_object(const std::string& name) const;
  json validate_object(const std::string& section, const std::string& name) const;

 private:
  std::map<std::string, FiniteGroup> groups_;
  std::map<std::string, GroupHom> homs_;
  std::map<std::string, SimplicialGroup> simplicial_;
  std::map<std::string, ChainComplex> chains_;
  std::map<std::string, CrossedEntry> crossed_;
  std::map<std::string, TheoryId> theories_;
  std::map<std::string, std::vector<ChainComplex>> corpora_;
  friend struct DocumentBuilder;
};

}  // namespace moorekit
