#pragma once

#include <memory>
#include <string>

#include <json.hpp>

#include "starring/classify.hpp"
#include "starring/star_ring.hpp"
#include "starring/theorems.hpp"

namespace starring {

/// Parses a ring-spec document (JSON, schema version 1) into a fully
/// validated *-ring. Syntax errors carry line/column; semantic errors
/// (unknown kinds, inadmissible involutions, axiom failures) carry the
/// offending ids.
std::shared_ptr<const StarRing> parse_ring_spec(const std::string& text,
                                                int max_order = kDefaultMaxOrder,
                                                std::uint64_t sample_seed = 0x5eedULL);

// Machine renderings: canonical JSON (sorted keys), newline-terminated,
// byte-deterministic across runs and thread counts.
nlohmann::json to_json(const Witness& w);
nlohmann::json to_json(const PredicateResult& v);
nlohmann::json to_json(const ClassificationReport& r);
nlohmann::json to_json(const ClaimVerdict& v);
nlohmann::json to_json(const SuiteReport& r);

Witness witness_from_json(const nlohmann::json& j);
ClassificationReport classification_from_json(const nlohmann::json& j);
SuiteReport suite_from_json(const nlohmann::json& j);

enum class RenderMode { Human, Machine };

std::string render_report(const nlohmann::json& machine, RenderMode mode);

}  // namespace starring
