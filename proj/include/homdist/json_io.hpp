#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "homdist/cohomology.hpp"
#include "homdist/complexes.hpp"
#include "homdist/distance.hpp"
#include "homdist/poset.hpp"
#include "homdist/simplicial.hpp"

namespace homdist {

// Named objects loaded from files; map/smap files may refer to spaces and
// complexes by name instead of inlining them.
struct Workspace {
    std::map<std::string, PosetPtr> posets;
    std::map<std::string, ComplexPtr> complexes;
};

using json = nlohmann::json;

json load_json_file(const std::string& path);  // Parse error with file context

json poset_to_json(const FinitePoset& X);
PosetPtr poset_from_json(const json& j);

json map_to_json(const OrderMap& f);
OrderMap map_from_json(const json& j, const Workspace& ws = {});

json complex_to_json(const SimplicialComplexData& K);
ComplexPtr complex_from_json(const json& j);

json smap_to_json(const SimplicialMapData& f);
SimplicialMapData smap_from_json(const json& j, const Workspace& ws = {});

json certificate_to_json(const CoverCertificate& cert, int value);
json sd_certificate_to_json(const SubcomplexCoverCertificate& cert, const SimplicialComplexData& K);

// report bodies; the CLI adds wall_ms
json distance_value_to_json(const DistanceValue& v, const std::string& quantity);
json sd_value_to_json(const SdValue& v, const std::string& quantity);

// Independent certificate check directly on the JSON form, so tampered or
// malformed files are rejected with a structured reason instead of an
// exception.
bool verify_certificate_json(const std::vector<OrderMap>& maps, const json& cert,
                             std::string* reason = nullptr);

}  // namespace homdist
