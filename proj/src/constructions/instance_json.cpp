#include "hlink/instance_json.hpp"

#include <charconv>

namespace hlink {

namespace {

nlohmann::ordered_json param_value(const std::string& text) {
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec == std::errc() && ptr == text.data() + text.size()) return value;
  return text;
}

}  // namespace

nlohmann::ordered_json params_json(const std::vector<std::pair<std::string, std::string>>& params) {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  for (const auto& [key, value] : params) out[key] = param_value(value);
  return out;
}

nlohmann::ordered_json instance_metadata(const ConstructedInstance& inst) {
  return {
      {"family", inst.family},
      {"params", params_json(inst.params)},
      {"labels", inst.labels},
      {"claimed_n", inst.claimed_n},
      {"claimed_min_degree", inst.claimed_min_degree},
      {"claimed_kappa", inst.claimed_kappa},
      {"witness", {{"pattern", inst.witness_pattern}, {"tau_by_label", inst.witness_labels()}}},
  };
}

}  // namespace hlink
