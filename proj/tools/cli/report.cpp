#include "cli/report.hpp"

namespace lucas::cli {

std::string flatten(const Json& row) {
    std::string line;
    for (const auto& [key, value] : row.items()) {
        if (!line.empty()) {
            line += ' ';
        }
        line += key;
        line += '=';
        if (value.is_string()) {
            line += value.get<std::string>();
        } else if (value.is_object()) {
            line += flatten(value);
        } else {
            line += value.dump();
        }
    }
    return line;
}

void ReportDocument::render(std::ostream& out, OutputFormat format) const {
    if (format == OutputFormat::Json) {
        for (const Json& row : rows) {
            out << row.dump() << '\n';
        }
        Json tail;
        tail["command"] = command;
        Json params = Json::object();
        for (const auto& [key, value] : parameters) {
            params[key] = value;
        }
        tail["params"] = params;
        tail["summary"] = summary;
        tail["status"] = status;
        out << tail.dump() << '\n';
        return;
    }

    out << command;
    for (const auto& [key, value] : parameters) {
        out << ' ' << key << '=' << value;
    }
    out << '\n';
    for (const Json& row : rows) {
        out << "  " << flatten(row) << '\n';
    }
    for (const std::string& line : summary) {
        out << line << '\n';
    }
}

} // namespace lucas::cli
