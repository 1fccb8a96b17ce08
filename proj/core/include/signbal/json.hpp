#pragma once

#include <nlohmann/json.hpp>

#include "signbal/balance.hpp"
#include "signbal/dynamics.hpp"
#include "signbal/generate.hpp"
#include "signbal/spectral.hpp"

namespace signbal {

// Result objects serialize one way. Parameter records round-trip; reading
// them rejects unknown keys and wrong types with InvalidConfig, and missing
// keys keep their defaults.

void to_json(nlohmann::json& j, const Bipartition& b);
void to_json(nlohmann::json& j, const Edge& e);
void to_json(nlohmann::json& j, const BalanceClassification& c);
void to_json(nlohmann::json& j, const FrustrationReport& r);
void to_json(nlohmann::json& j, const BalanceMeasures& m);
void to_json(nlohmann::json& j, const PerturbationEstimate& p);
void to_json(nlohmann::json& j, const SpectralTheoremReport& r);
void to_json(nlohmann::json& j, const StationaryPrediction& p);
void to_json(nlohmann::json& j, const ActivationSets& a);

void to_json(nlohmann::json& j, const SSBMParams& p);
void from_json(const nlohmann::json& j, SSBMParams& p);
void to_json(nlohmann::json& j, const BipartitionRule& r);
void from_json(const nlohmann::json& j, BipartitionRule& r);
void to_json(nlohmann::json& j, const LatticeParams& p);
void from_json(const nlohmann::json& j, LatticeParams& p);
void to_json(nlohmann::json& j, const ELTConfig& c);
void from_json(const nlohmann::json& j, ELTConfig& c);

[[nodiscard]] nlohmann::json vector_to_json(const Vector& v);
[[nodiscard]] Vector vector_from_json(const nlohmann::json& j);

/// Throws InvalidConfig if j is not an object or has a key outside `allowed`.
void require_keys(const nlohmann::json& j, std::initializer_list<std::string_view> allowed, std::string_view what);

}  // namespace signbal
