#pragma once

#include "hlink/constructions.hpp"
#include "json.hpp"

namespace hlink {

/// Sidecar metadata: {family, params, labels, claimed_n, claimed_min_degree,
/// claimed_kappa, witness: {pattern, tau_by_label}}.
nlohmann::ordered_json instance_metadata(const ConstructedInstance& inst);

/// Parameters as a JSON object; integer-valued ones become numbers.
nlohmann::ordered_json params_json(const std::vector<std::pair<std::string, std::string>>& params);

}  // namespace hlink
