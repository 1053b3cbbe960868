#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ordmon/presentation.hpp"
#include "ordmon/word.hpp"

namespace ordmon {

// Canonical word shapes.  A word is normal iff it parses into one of these
// descriptors with every side condition satisfied.
//
// D:  e[i_1,j_1] ... e[i_k,j_k] with 2 <= j_1 < ... < j_k <= n, i_s < j_s.
struct DNormalForm {
  std::vector<std::pair<int, int>> pairs;  // (i_s, j_s)
};

// ID: f[i_1] ... f[i_k] a[t_1,j_1] ... a[t_r,j_r] with f-indices strictly
//     increasing, j's strictly increasing, t_s < j_s, t's pairwise distinct,
//     and f-indices disjoint from all t's and j's.
struct IDNormalForm {
  std::vector<int> f_indices;
  std::vector<std::pair<int, int>> a_pairs;  // (t_s, j_s)
};

// IC: e[i_1] ... e[i_k] (a[j_1] a[j_1 - 1] ... a[t_1]) ... (a[j_p] ... a[t_p])
//     with e-indices strictly increasing, j's strictly increasing, t's
//     strictly increasing, t_s <= j_s, and e-indices disjoint from every run
//     interval {t_s..j_s} and from every j_s + 1.
struct ICNormalForm {
  std::vector<int> e_indices;
  std::vector<std::pair<int, int>> runs;  // (j_s, t_s), letters descend j_s..t_s
};

// PC: f[p_1] ... f[p_r] (e[j_1] ... e[i_1]) ... (e[j_k] ... e[i_k]) with
//     f-indices strictly increasing, i's strictly increasing, j's strictly
//     increasing, i_s <= j_s, and f-indices disjoint from every j_s + 1.
struct PCNormalForm {
  std::vector<int> f_indices;
  std::vector<std::pair<int, int>> runs;  // (j_s, i_s)
};

using NormalFormDescriptor =
    std::variant<DNormalForm, IDNormalForm, ICNormalForm, PCNormalForm>;

// Parses w into the family's descriptor; empty when w is not normal.
// Families without a canonical form here (C, PD) are rejected.
std::optional<NormalFormDescriptor> recognize(const Word& w);

// All normal words of the family on {1..n}, in shortlex order.
std::vector<Word> enumerate_normal_forms(Family fam, int n);

enum class Direction { LR, RL };

struct RewriteStep {
  std::string relation_id;
  int pos = 0;  // letter index where the replaced side starts
  Direction dir = Direction::LR;

  bool operator==(const RewriteStep&) const = default;
};

// A replayable certificate: applying the steps to start yields end.
struct Derivation {
  Word start;
  std::vector<RewriteStep> steps;
  Word end;
};

struct NormalizeResult {
  Word word;
  Derivation derivation;
};

// Rewrites w to its canonical form, logging every relation application.
// Provided for D, ID and IC; the step budget 10*len^2 is a termination
// guard only and throws StepCapError when exceeded.
NormalizeResult normalize(const Word& w, const Presentation& p);
NormalizeResult normalize(const Word& w);

// Independent replay of a derivation against the given presentation.
bool check_derivation(const Derivation& d, const Presentation& p);

// Generator word for a member of IC: partial identities for the missing
// domain points, then one descending run per displaced point.
Word factorize_ic(const PartialMap& alpha);

}  // namespace ordmon
