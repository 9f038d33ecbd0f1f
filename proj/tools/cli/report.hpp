#pragma once

// Deterministic command output. A document is rendered either as plain text
// or as JSON lines (one object per row, then one status object). Big integers
// always travel as decimal strings.

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace lucas::cli {

using Json = nlohmann::ordered_json;

enum class OutputFormat { Text, Json };

struct ReportDocument {
    std::string command;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::vector<Json> rows;
    std::vector<std::string> summary;
    std::string status = "pass";

    void render(std::ostream& out, OutputFormat format) const;
};

/// "key=value key=value ..." for a flat JSON object.
std::string flatten(const Json& row);

} // namespace lucas::cli
