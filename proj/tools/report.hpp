#pragma once

#include <string>

#include "curskel/cssp.hpp"
#include "curskel/cur.hpp"
#include "curskel/index_set.hpp"
#include "curskel/matrix.hpp"
#include "curskel/verify.hpp"
#include "json.hpp"

namespace curskel::cli {

using json = nlohmann::ordered_json;

/// Bumped on breaking changes to the report layout.
inline constexpr const char* kSchemaVersion = "1.0";

/// Envelope shared by every command: schema_version, command, an echo of the
/// effective inputs, and the command-specific results object.
json make_report(const std::string& command, json inputs, json results);

json to_json(const Matrix& a);                    // nested row arrays
json to_json(const IndexSet& s);                  // 1-based indices
json to_json(const CharacterizationReport& rep);
json to_json(const SelectionResult& result, bool include_subsets);
json to_json(const SweepReport& report);
json to_json(const OpenQuestionReport& report);

}  // namespace curskel::cli
