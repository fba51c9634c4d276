#pragma once

#include <json.hpp>

#include "cagekit/analysis.hpp"
#include "cagekit/feasibility.hpp"
#include "cagekit/identities.hpp"
#include "cagekit/irreducible.hpp"
#include "cagekit/spectrum.hpp"

namespace cagekit {

// Integers are serialized as decimal strings so arbitrary precision survives
// the round trip; coefficient arrays are lowest degree first.
nlohmann::json to_json(const IntPolynomial& p);
nlohmann::json to_json(const IrreducibilityCertificate& cert);
nlohmann::json to_json(const GraphProfile& p);
nlohmann::json to_json(const ExcessOutcome& e);
nlohmann::json to_json(const IdentityReport& r);
nlohmann::json to_json(const SpectralReport& r);
nlohmann::json to_json(const FeasibilityVerdict& v);
nlohmann::json scan_to_json(const std::vector<FeasibilityVerdict>& rows);

}  // namespace cagekit
