#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "helly/engine.hpp"
#include "helly/homology.hpp"
#include "helly/sweep.hpp"
#include "helly/transversal.hpp"
#include "helly/transversal_sweep.hpp"
#include "helly/transversal_verify.hpp"

namespace helly {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kConventionNote =
    "open sets are modeled as closed subcomplexes of one ambient simplicial complex "
    "(or as open convex polygons for line transversals); homology is reduced, "
    "with H_-1 = 0 exactly when the space is nonempty";

// Top-level report object: tool, version, command, statement tag, echoed
// parameters and the convention note, in that key order. The caller adds
// the payload.
Json report_header(const std::string& command, const std::string& statement,
                   const Json& parameters);

Json to_json(const BettiVector& b);
Json to_json(const SubcomplexFamily& family, const LedgerEntry& e);
Json to_json(const SubcomplexFamily& family, const Verdict& v);
Json to_json(const SweepReport& r);

Json to_json(const Direction& d);
Json to_json(const TransversalProfile& p);
Json to_json(const ComponentSummary& s);
Json to_json(const PolygonFamily& family, const TransversalVerdict& v);
Json to_json(const PlaneSweepReport& r);

// Deterministic text form: two-space indentation and a trailing newline.
std::string dump(const Json& j);

}  // namespace helly
