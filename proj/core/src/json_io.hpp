#pragma once

// Internal JSON (de)serialization shared by problem parsing and report
// rendering. Not installed; public headers stay free of the JSON library.

#include "zeta/problem.hpp"

#include <json.hpp>

namespace zeta::detail {

using ordered_json = nlohmann::ordered_json;

ordered_json input_to_json(const ProblemInput& input);
ProblemInput input_from_json(const ordered_json& doc);

ordered_json matrix_to_json(const IntMatrix& m);

}  // namespace zeta::detail
