#pragma once

// JSON (and CSV) encodings. All vertex, level and coordinate numbers are
// 1-based on the wire.

#include <json.hpp>
#include <string>
#include <vector>

#include "bruhat/coxeter.hpp"
#include "bruhat/orbit.hpp"
#include "bruhat/sigma.hpp"
#include "bruhat/special.hpp"
#include "bruhat/word.hpp"

namespace bruhat {

using Json = nlohmann::ordered_json;

Json to_json(const CartanSpec& cartan);

/// [-1, 2, -2, 1]
Json to_json(const SignedWord& word);
SignedWord signed_word_from_json(const Json& json, const CartanSpec& cartan);

Json to_json(const SigmaGraph& graph);

/// {d, orbit_count, fixed_points, nontrivial, histogram: [[size, mult], ...],
/// representatives?: [...]}
Json to_json(const OrbitSummary& summary, bool with_representatives = true);

/// {d, generators: [{target, mask: [...], bias}]}
Json to_json(const TransvectionSet& action);
TransvectionSet transvection_set_from_json(const Json& json);

Json to_json(const std::vector<KnownCount>& table);
std::string to_csv(const std::vector<KnownCount>& table);

}  // namespace bruhat
