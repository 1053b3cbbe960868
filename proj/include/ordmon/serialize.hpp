#pragma once

#include <string>

#include "json.hpp"
#include "ordmon/chain_map.hpp"
#include "ordmon/congruence.hpp"
#include "ordmon/normal_form.hpp"
#include "ordmon/presentation.hpp"
#include "ordmon/verification.hpp"

namespace ordmon {

// All encoders use insertion-ordered objects so that equal inputs always
// serialize to identical bytes.
using Json = nlohmann::ordered_json;

Json to_json(const PartialMap& m);                 // {"n":3,"images":[1,0,3]}
PartialMap partial_map_from_json(const Json& j);

Json to_json(const RewriteStep& s);                // {"rel":...,"pos":...,"dir":...}
Json to_json(const Derivation& d);                 // {"start":...,"steps":[...],"end":...}
Derivation derivation_from_json(const Json& j, Family fam, int n);

Json to_json(const SoundnessReport& r);
Json to_json(const PresentedSizeResult& r);
Json to_json(const VerificationReport& r);
Json to_json(const PdIsoReport& r);

}  // namespace ordmon
