#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "ainf/relation.hpp"

namespace ainf {

// Deterministic text renderings: terms in canonical order, explicit signs,
// coefficients spelled out when not ±1, factors joined by ⊗.
std::string to_text(const Tensor& t);
std::string to_text(const Chain& c);

std::string to_text(const RelationReport& r);

// JSON forms are byte-deterministic (keys sorted, terms in canonical order).
// A tensor renders as [ { "coeff": n, "word": ["e1", "e2"] }, ... ]; a
// relation report as one { "cell", "relation", "terms", "holds" } entry per
// generator, coefficients reduced when the report's view is mod 2. The CLI
// owns the surrounding "command"/"params"/"results" envelope.
nlohmann::json terms_json(const Tensor& t);
nlohmann::json report_json(const RelationReport& r);

std::string matrix_text(const std::vector<std::vector<int>>& m);

}  // namespace ainf
