#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "rig/bounds.hpp"
#include "rig/branching.hpp"
#include "rig/components.hpp"
#include "rig/discovery.hpp"
#include "rig/harness.hpp"
#include "rig/model.hpp"
#include "rig/sampler.hpp"

// JSON representations of the library types, usable through nlohmann's
// j.get<T>() / json(x) conversions. Parse errors surface as
// nlohmann::json::exception or std::invalid_argument.
namespace rig {

using nlohmann::json;

// {"n": int, "model": {"kind": "uniform"|"powerlaw"|"explicit",
//                      "c": float?, "m": int?, "tau": float?, "values": [float]?}}
void to_json(json& j, const WeightSpec& spec);
void from_json(const json& j, WeightSpec& spec);

// {"n": int, "seed": int, "attrs": [[int]]}
void to_json(json& j, const BipartiteSample& b);
BipartiteSample sample_from_json(const json& j);

// {"n", "sizes_topk" (first 100), "largest", "second", "count"}
void to_json(json& j, const ComponentSummary& s);

void to_json(json& j, const ExactSizeDistribution& d);
void to_json(json& j, const DiscoveryTrace& t);
void to_json(json& j, const ExtinctionSolution& s);
void to_json(json& j, const GwEstimate& e);
void to_json(json& j, const TailBound& b);

void to_json(json& j, const RegimeReport& r);
void from_json(const json& j, RegimeReport& r);

void to_json(json& j, const VerifyThresholds& t);
void from_json(const json& j, VerifyThresholds& t);

void to_json(json& j, const ModelFamily& f);
void from_json(const json& j, ModelFamily& f);

void to_json(json& j, const SweepConfig& cfg);
void from_json(const json& j, SweepConfig& cfg);

void to_json(json& j, const VerificationReport& r);
void to_json(json& j, const GapSummary& g);

json read_json_file(const std::filesystem::path& path);
/// Throws std::runtime_error naming the path when it cannot be written.
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace rig
