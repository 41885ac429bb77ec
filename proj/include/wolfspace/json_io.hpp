#pragma once

#include <json.hpp>

#include "wolfspace/chevalley.hpp"
#include "wolfspace/root_system.hpp"
#include "wolfspace/wolf.hpp"

namespace wolfspace {

// ordered_json keeps key order fixed, so identical inputs serialize to
// byte-identical documents
using Json = nlohmann::ordered_json;

Json root_system_json(const RootSystem& rs);
Json structure_constants_json(const LieAlgebra& alg);
Json report_json(const VerificationReport& rep);

}  // namespace wolfspace
