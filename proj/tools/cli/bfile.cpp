#include "cli/bfile.hpp"

#include <charconv>
#include <optional>
#include <sstream>
#include <string_view>

namespace lucas::cli {

namespace {

std::string_view trim(std::string_view s) {
    const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
    while (!s.empty() && is_space(s.front())) {
        s.remove_prefix(1);
    }
    while (!s.empty() && is_space(s.back())) {
        s.remove_suffix(1);
    }
    return s;
}

bool is_integer_token(std::string_view token) {
    if (!token.empty() && (token.front() == '-' || token.front() == '+')) {
        token.remove_prefix(1);
    }
    if (token.empty()) {
        return false;
    }
    for (char c : token) {
        if (c < '0' || c > '9') {
            return false;
        }
    }
    return true;
}

} // namespace

std::vector<BFileEntry> parse_bfile(std::istream& in) {
    std::vector<BFileEntry> entries;
    std::string raw;
    std::size_t line_no = 0;
    std::optional<std::int64_t> previous;

    while (std::getline(in, raw)) {
        ++line_no;
        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') {
            continue;
        }

        std::istringstream fields{std::string(line)};
        std::string index_token;
        std::string value_token;
        std::string extra;
        fields >> index_token >> value_token;
        if (value_token.empty()) {
            throw BFileParseError(line_no, "expected \"index value\", got '" + std::string(line) + "'");
        }
        if (fields >> extra) {
            throw BFileParseError(line_no, "unexpected trailing field '" + extra + "'");
        }
        if (!is_integer_token(index_token)) {
            throw BFileParseError(line_no, "index '" + index_token + "' is not an integer");
        }
        if (!is_integer_token(value_token)) {
            throw BFileParseError(line_no, "value '" + value_token + "' is not an integer");
        }

        BFileEntry entry;
        const char* first = index_token.data() + (index_token.front() == '+' ? 1 : 0);
        const auto [ptr, ec] =
            std::from_chars(first, index_token.data() + index_token.size(), entry.index);
        if (ec != std::errc{}) {
            throw BFileParseError(line_no, "index '" + index_token + "' out of range");
        }
        if (previous && entry.index <= *previous) {
            throw BFileParseError(line_no, "index " + index_token +
                                               " does not increase (previous " +
                                               std::to_string(*previous) + ")");
        }
        const std::string digits =
            value_token.front() == '+' ? value_token.substr(1) : value_token;
        entry.value.set_str(digits, 10);
        previous = entry.index;
        entries.push_back(std::move(entry));
    }
    return entries;
}

} // namespace lucas::cli
