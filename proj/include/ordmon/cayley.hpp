#pragma once

#include <cstdint>
#include <string>

#include "ordmon/chain_map.hpp"

namespace ordmon {

// Right Cayley graph of the family on {1..n} as Graphviz DOT: one node per
// element (identified by its image row, e.g. "1,1,3"), one edge per
// (element, generator) labeled with the generator token.  Needs a generator
// alphabet, so PD is rejected.
std::string cayley_dot(Family fam, int n,
                       std::uint64_t candidate_cap = kDefaultCandidateCap);

}  // namespace ordmon
