#pragma once

#include "cograph/obstructions.hpp"
#include "cograph/solver.hpp"
#include "cograph/strength.hpp"

#include <json.hpp>

#include <string>

namespace cograph {

using Json = nlohmann::json;

/// "F<k>", "Q<k>" or "R".
std::string label_name(const VertexLabel& label);
VertexLabel parse_label(const std::string& text);

Json to_json(Triple t);
Json to_json(const TripleSet& set);
Json to_json(const PartitionCertificate& cert);
Json to_json(const StrengthProfile& profile);
Json to_json(const ObstructionReport& report);

PartitionCertificate certificate_from_json(const Json& j);

}  // namespace cograph
