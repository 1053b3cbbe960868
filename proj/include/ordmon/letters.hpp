#pragma once

#include <string>
#include <vector>

#include "ordmon/chain_map.hpp"

namespace ordmon {

// Generator alphabets, written as they appear in words:
//
//   D   e[i,j]  1 <= i < j <= n    full idempotent sending j to i
//   ID  f[i]    1 <= i <= n        partial identity with i removed
//       a[i,j]  1 <= i < j <= n    injective step sending j to i, i removed
//   C   e[i]    1 <= i <= n-1      full idempotent sending i+1 to i
//   IC  e[i]    1 <= i <= n        partial identity with i removed
//       a[i]    1 <= i <= n-1      injective step sending i+1 to i, i removed
//   PC  f[i]    1 <= i <= n        partial identity with i removed
//       e[i]    1 <= i <= n-1      full idempotent sending i+1 to i
enum class LetterKind : char { E = 'e', F = 'f', A = 'a', B = 'b' };

struct GeneratorSymbol {
  LetterKind kind = LetterKind::E;
  int i = 0;
  int j = 0;  // 0 for single-index letters

  bool binary() const { return j != 0; }
  std::string token() const;  // "e[1,3]" / "f[2]"

  bool operator==(const GeneratorSymbol&) const = default;
};

GeneratorSymbol letter(LetterKind kind, int i);
GeneratorSymbol letter(LetterKind kind, int i, int j);

// True iff sym denotes a generator of the family on {1..n}.
bool letter_valid(Family fam, int n, const GeneratorSymbol& sym);

// Rank of a letter kind inside its family's canonical alphabet order
// (prefix kinds of the normal forms come first).  Throws for foreign kinds.
int letter_kind_rank(Family fam, LetterKind kind);

// Canonical order: by kind rank, then i, then j.
bool letter_less(Family fam, const GeneratorSymbol& a, const GeneratorSymbol& b);

// The full alphabet of the family in canonical order.
std::vector<GeneratorSymbol> alphabet(Family fam, int n);

// Concrete map denoted by one generator letter.
PartialMap generator_map(Family fam, const GeneratorSymbol& sym, int n);

}  // namespace ordmon
