// Rendering of triangulation summaries and decomposition reports.
//
// Scalars are rendered relative to q = zeta_N ("q^2", "-q", "q^(1/3)").
// JSON output has a fixed key order and block order, so identical inputs
// give byte-identical output.

#pragma once

#include <string>

#include "json.hpp"

#include "cfrep/decomposer.hpp"
#include "cfrep/triangulation.hpp"

namespace cfrep {

nlohmann::ordered_json info_json(const Triangulation& t);
std::string info_text(const Triangulation& t);

nlohmann::ordered_json report_json(const DecompositionReport& report);
std::string report_text(const DecompositionReport& report);

}  // namespace cfrep
