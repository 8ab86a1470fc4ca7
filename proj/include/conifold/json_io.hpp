#pragma once

#include <json.hpp>

#include "conifold/flip.hpp"
#include "conifold/quiver.hpp"
#include "conifold/series2.hpp"
#include "conifold/windows.hpp"

namespace conifold {

using json = nlohmann::json;

json to_json(const YoungDiagram& d);
json to_json(const Character& c);
json to_json(const JSequence& j);
json to_json(const DimVec& v);
json to_json(const Wall& w);
json to_json(const ExtQuiverData& q);
json to_json(const KNStratum& s);
json to_json(const Resolution& r);
json to_json(const std::vector<SODSummand>& summands);
json to_json(const TwistDescriptor& t);
json to_json(const std::vector<ConifoldSummand>& summands);
json to_json(const KoszulCertificate& c);
json to_json(const Series2& s, const std::string& var0, const std::string& var1);
json to_json(const CrosscheckReport& r);

/// Parse a comma-separated row-length list; descending input is the CLI
/// convention, the empty string is the empty diagram.
YoungDiagram parse_diagram(const std::string& text);

}  // namespace conifold
