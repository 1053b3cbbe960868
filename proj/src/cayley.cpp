#include "ordmon/cayley.hpp"

#include "ordmon/letters.hpp"

namespace ordmon {

std::string cayley_dot(Family fam, int n, std::uint64_t candidate_cap) {
  auto gens = alphabet(fam, n);
  auto elems = brute_force_enumerate(fam, n, candidate_cap);
  std::string out = "digraph cayley {\n";
  for (const auto& m : elems) out += "  \"" + m.to_string() + "\";\n";
  for (const auto& m : elems)
    for (const auto& g : gens) {
      PartialMap target = compose(m, generator_map(fam, g, n));
      out += "  \"" + m.to_string() + "\" -> \"" + target.to_string() +
             "\" [label=\"" + g.token() + "\"];\n";
    }
  out += "}\n";
  return out;
}

}  // namespace ordmon
