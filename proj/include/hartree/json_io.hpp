#pragma once

#include "hartree/configurations.hpp"
#include "hartree/energy.hpp"
#include "hartree/ground_state.hpp"
#include "hartree/landscape.hpp"
#include "hartree/profiles.hpp"
#include "hartree/reduced_model.hpp"

#include <json.hpp>

#include <filesystem>

namespace hartree {

using json = nlohmann::json;

/// SystemParams document:
///   {"mu": [mu1, mu2, mu3], "beta": [b12, b13, b23], "lambda": l,
///    "potentials": [{"a": .., "m": .., "theta": 2}, x3]}
/// Per-component "lambda" may be given and must then read 1, 1, lambda.
void to_json(json& j, const PotentialSpec& p);
void to_json(json& j, const SystemParams& p);
void from_json(const json& j, SystemParams& p);

/// Configurations store only (k, r, rho, variant); centers are regenerated.
void to_json(json& j, const PeakConfig& c);
PeakConfig peak_config_from_json(const json& j);

void to_json(json& j, const RadialGrid& g);
void to_json(json& j, const GroundStateStats& s);
void to_json(json& j, const SyncCoefficients& s);
void to_json(json& j, const DomainVerdict& v);
/// Constants with a "provenance" object explaining each field.
void to_json(json& j, const ReducedConstants& c);
void to_json(json& j, const CaseVerdict& v);
void to_json(json& j, const MaximizerResult& r);
void to_json(json& j, const PeakRadii& p);
void to_json(json& j, const EnergyBreakdown& e);
void to_json(json& j, const PairwiseEnergy& e);

json read_json_file(const std::filesystem::path& path);
void write_json_file(const json& j, const std::filesystem::path& path);

}  // namespace hartree
