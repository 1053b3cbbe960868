#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ordmon/congruence.hpp"
#include "ordmon/presentation.hpp"

namespace ordmon {

struct GenerationCheck {
  bool generates = false;
  std::uint64_t closure_size = 0;
};

// Closure of {identity} under right multiplication by the generator maps,
// compared against the brute-force element set.
GenerationCheck generators_generate(Family fam, int n);

struct VerifyOptions {
  CongruenceLimits limits;
  // Cross-check the presented size for families that already have a normal
  // form count, up to this n.  (C has no normal form and is always counted.)
  int presented_cross_check_max_n = 5;
  // Normalizer sampling: exhaustive words of length <= 4 up to this n ...
  int exhaustive_sample_max_n = 4;
  // ... plus 10^4 seeded-random words of length <= 12 up to this n.
  int random_sample_max_n = 5;
  std::uint32_t random_seed = 12345;
  int random_sample_count = 10'000;
  int random_sample_max_len = 12;
};

struct VerificationReport {
  std::string family;
  int n = 0;
  bool relations_sound = false;
  bool generators_generate = false;
  std::uint64_t concrete_size = 0;
  std::optional<std::uint64_t> normal_form_count;
  std::optional<std::uint64_t> presented_size;
  std::uint64_t derivations_checked = 0;
  std::string verdict;  // "pass" | "fail" | "incomplete"
  // Present only when a resource limit stopped a stage (verdict "incomplete").
  std::optional<std::string> failed_stage;
};

// Full pipeline for one family and chain size: soundness, generation,
// concrete count against the normal-form count and/or presented size, and
// normalizer sampling with derivation replay.
VerificationReport verify_presentation(Family fam, int n,
                                       const VerifyOptions& opts = {});

struct PdIsoReport {
  int n = 0;
  std::uint64_t pd_size = 0;
  std::uint64_t d_next_size = 0;
  bool size_match = false;
  bool bijective = false;
  bool homomorphic = false;
  std::string verdict;  // "pass" | "fail"
};

// Checks that adjoining a bottom point maps PD_n isomorphically onto D_{n+1}:
// cardinalities agree, the map is a bijection onto the enumerated D_{n+1},
// and it respects every composition pair.
PdIsoReport verify_pd_iso(int n);

}  // namespace ordmon
