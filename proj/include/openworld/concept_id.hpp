#pragma once

#include <string>
#include <string_view>

namespace openworld {

// Canonical concept identifier: lowercase token, underscores for spaces,
// ConceptNet URI prefixes stripped (e.g. "/c/en/Peanut Butter/n" -> "peanut_butter").
using ConceptId = std::string;

// Idempotent: normalize(normalize(x)) == normalize(x).
ConceptId normalize_concept(std::string_view raw);

// "/r/IsA" -> "IsA"; plain names pass through unchanged.
std::string normalize_relation(std::string_view raw);

// Language tag of a ConceptNet concept URI ("/c/en/knife" -> "en"), empty for
// non-URI tokens.
std::string concept_uri_language(std::string_view raw);

// Relations whose name starts with "Not" carry negated assertion weight.
bool is_negated_relation(std::string_view relation);

}  // namespace openworld
