#pragma once

// JSON encodings of result records. Edge sets are arrays of colex pair
// indices; every document that carries them also carries the convention tag.

#include <string>

#include <json.hpp>

#include "ffree/alteration.hpp"
#include "ffree/density.hpp"
#include "ffree/exact.hpp"
#include "ffree/thresholds.hpp"

namespace ffree {

using Json = nlohmann::ordered_json;

Json edge_ids_json(const LabeledGraph& g);
Json to_json(const DensityReport& report);
Json to_json(const LemmaConstants& c);
Json to_json(const TrialRecord& rec, const std::string& seed_text);
Json to_json(const MuEstimate& est);
Json to_json(const ThresholdEstimate& est, const std::string& seed_text);
Json to_json(const ScalingFit& fit, const std::string& seed_text);
Json to_json(const Certificate& cert);
Json to_json(const FractionalCertificate& cert);
Json to_json(const GapReport& report);

}  // namespace ffree
