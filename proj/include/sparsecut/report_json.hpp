#pragma once

#include <json.hpp>

#include "sparsecut/census.hpp"
#include "sparsecut/connectivity.hpp"
#include "sparsecut/families.hpp"
#include "sparsecut/witness.hpp"

namespace sparsecut {

using Json = nlohmann::ordered_json;

// Vertex ids are 0-based in every JSON document.
Json to_json(VertexSet s);
Json to_json(const ConnectivityResult& r);
Json to_json(const CutReport& r);
Json to_json(const WitnessCertificate& c);
Json to_json(const SharpnessReport& r);
Json to_json(const CensusReport& r);

Json minimum_cuts_json(int kappa, const std::vector<CutReport>& cuts);

}  // namespace sparsecut
