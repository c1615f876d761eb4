#pragma once

#include <string>

#include <json.hpp>

#include "linfiso/bounds.hpp"
#include "linfiso/crosscheck.hpp"
#include "linfiso/decider.hpp"
#include "linfiso/projection.hpp"

namespace linfiso::report {

// Every JSON value produced here is a string (or an array/object of
// strings); rationals are never converted to floating point.
struct Rendered {
  std::string text;
  nlohmann::json json;
};

Rendered render_decision(const SubspaceSpec& spec, const DecisionReport& report);
Rendered render_bounds(const BoundReport& report);
Rendered render_projection(const ProjectionResult& result, bool certificate_valid,
                           bool emit_projection);
Rendered render_crosscheck(const CrossCheckSummary& summary);

}  // namespace linfiso::report
