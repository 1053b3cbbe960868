#pragma once

#include <string>
#include <vector>

#include "ordmon/chain_map.hpp"
#include "ordmon/letters.hpp"

namespace ordmon {

// A word over the generator alphabet of one family on {1..n}.  The empty
// word is printed as "1" and denotes the identity.
struct Word {
  Family family = Family::D;
  int n = 0;
  std::vector<GeneratorSymbol> letters;

  bool empty() const { return letters.empty(); }
  std::size_t size() const { return letters.size(); }

  bool operator==(const Word&) const = default;
};

// Grammar:  WORD := "1" | TOKEN (WS TOKEN)* ;  TOKEN := KIND "[" INT ("," INT)? "]"
// Every token must denote a generator of the family on {1..n}.
Word parse_word(const std::string& text, Family fam, int n);

// Single-space separated canonical rendering; empty word renders as "1".
std::string format_word(const Word& w);

// Left-to-right product of the generator maps.
PartialMap evaluate(const Word& w);

// Shortlex: length first, then canonical letter order.
bool shortlex_less(const Word& a, const Word& b);

Word concat(const Word& a, const Word& b);

}  // namespace ordmon
