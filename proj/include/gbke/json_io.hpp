#pragma once

#include "gbke/order.hpp"
#include "gbke/polynomial.hpp"
#include "gbke/ugb.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace gbke {

using json = nlohmann::json;

// Ring: {"n": 7, "field": "fp:32003", "vars": ["a", ...]}
json ring_to_json(const RingContext& ring);
Ring ring_from_json(const json& j);

// Polynomial: [[coeff_string, [e_1..e_n]], ...] in canonical term order.
json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Ring& ring, const json& j);

// {"ring": ..., "polynomials": [...], "provenance": "..."}
json ugb_to_json(const UniversalBasis& U);
UniversalBasis ugb_from_json(const json& j);

// [{"gens": ["a*g", ...], "exponents": [[...]], "eta_raw": "...",
//   "key_hex": "...", "witness_w": [..]}]
json keylist_to_json(const RingContext& ring, const KeyList& keys);
KeyList keylist_from_json(const RingContext& ring, const json& j);

json weight_to_json(const WeightVector& w);
WeightVector weight_from_json(const json& j);

// {"kind": "lex"|"grevlex"|"weight", "perm": [...], "weights": [...]}
json order_to_json(const MonomialOrder& o);
MonomialOrder order_from_json(const json& j);

json read_json_file(const std::string& path);
/// Writes with 2-space indentation and a trailing newline.
void write_json_file(const std::string& path, const json& j);

}  // namespace gbke
