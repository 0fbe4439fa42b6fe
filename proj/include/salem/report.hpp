#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "salem/certify.hpp"
#include "salem/construct.hpp"

namespace salem {

using json = nlohmann::json;

json to_json(const RootPattern& rp);
json to_json(const IrreducibilityWitness& w);
json to_json(const SalemCertificate& c);
json to_json(const ConstructionPlan& p);
json to_json(const SearchReport& r);

RootPattern root_pattern_from_json(const json& j);
IrreducibilityWitness witness_from_json(const json& j);
/// Throws std::invalid_argument (or a json exception) on malformed input.
SalemCertificate certificate_from_json(const json& j);
/// Accepts a search report, a bare certificate, or an array of certificates.
std::vector<SalemCertificate> certificates_from_json(const json& j);

/// One row per examined a: a,verdict,check,detail. Certified rows carry α to
/// 15 decimals; rejected rows carry the failed check and its reason.
std::string to_csv(const SearchReport& r);

}  // namespace salem
