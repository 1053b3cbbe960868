#pragma once

#include <cstdint>
#include <string>

#include "ordmon/presentation.hpp"

namespace ordmon {

struct CongruenceLimits {
  std::uint64_t max_states = 500'000;
  std::uint64_t max_steps = 100'000'000;
};

enum class PresentedSizeStatus { Completed, Exhausted };

struct PresentedSizeResult {
  PresentedSizeStatus status = PresentedSizeStatus::Exhausted;
  std::uint64_t size = 0;       // meaningful only when Completed
  std::string method;           // how the count was obtained
};

// Cardinality of the monoid presented by p, by coset enumeration over the
// right Cayley table: states are scanned against every relation until a
// fixpoint, merged states are pooled through a union-find, and the live
// state count is the answer.  Hitting a limit yields Exhausted, not an
// exception.  Deterministic for fixed inputs.
PresentedSizeResult presented_size(const Presentation& p,
                                   const CongruenceLimits& limits = {});

}  // namespace ordmon
