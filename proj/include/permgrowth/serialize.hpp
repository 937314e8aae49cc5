#pragma once

#include <json.hpp>

#include "permgrowth/constructor.hpp"
#include "permgrowth/peak_growth.hpp"

namespace permgrowth {

// JSON views of run/search results.  Schema versioned via a top-level
// "schema": 1; counts travel as exact decimal strings, never floats.
nlohmann::json run_to_json(const ConstructorRun& run);
nlohmann::json search_to_json(const PeakTargetSearch& search);

std::string ratio_str(const Ratio& r);  // "p/q"

}  // namespace permgrowth
