#pragma once

#include <string>

#include "genfx/gluing.hpp"

namespace genfx {

/// Sectioned text report: graph info, common nodes, distinguished nodes
/// (-1 when absent), pullback dimensions, decision criterion and verdict.
std::string verbose_report(const GluingSpec& spec, const Decision& d);

/// The same fields as one JSON object; absent endpoints are null.
std::string json_report(const GluingSpec& spec, const Decision& d);

}  // namespace genfx
