#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ordmon/word.hpp"

namespace ordmon {

// One defining relation lhs = rhs.  Ids are stable across releases; they name
// the schema and the index tuple, e.g. "D.3[1,2,3]" or "ID.c[3|1,2]".
struct Relation {
  std::string id;
  Word lhs;
  Word rhs;

  bool operator==(const Relation&) const = default;
};

struct Presentation {
  Family family = Family::D;
  int n = 0;
  std::vector<GeneratorSymbol> letters;
  std::vector<Relation> relations;

  const Relation* find(const std::string& id) const;

 private:
  mutable std::map<std::string, std::size_t> index_;
};

// Defining relations for D, ID, C, IC, PC on {1..n}.  PD has no presentation
// of its own (it is handled through the bottom-adjoining isomorphism) and is
// rejected.  Chained equalities are split into two relations with suffixed
// ids (e.g. ID.d1 / ID.d2).
Presentation build_presentation(Family fam, int n);

struct RelationCheck {
  std::string id;
  bool holds = false;
  int witness = 0;  // first chain point where the two sides disagree; 0 if none
};

struct SoundnessReport {
  Family family = Family::D;
  int n = 0;
  bool all_hold = false;
  std::vector<RelationCheck> checks;
};

// Evaluates both sides of every relation and compares pointwise.
SoundnessReport check_soundness(const Presentation& p);

// One line per relation: "<id>: <lhs> = <rhs>".
std::string export_presentation(const Presentation& p);

// Inverse of export_presentation (modulo insignificant whitespace).
Presentation parse_presentation(const std::string& text, Family fam, int n);

// Why each index tuple excluded by a schema's side condition is excluded:
// either the two sides differ concretely (the guard is necessary) or they
// agree and the instance is merely redundant.
struct SideConditionFinding {
  std::string schema;    // e.g. "IC.23"
  std::string tuple;     // e.g. "i=2,j=2"
  bool unsound = false;  // true: sides differ concretely at this n
};

std::vector<SideConditionFinding> audit_side_conditions(Family fam, int n);

}  // namespace ordmon
