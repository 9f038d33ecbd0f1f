#pragma once

// OEIS b-file reader: ASCII lines "n a(n)", '#' comments, blank lines ignored.

#include <cstddef>
#include <cstdint>
#include <istream>
#include <string>
#include <vector>

#include "lucas/errors.hpp"
#include "lucas/exact_int.hpp"

namespace lucas::cli {

struct BFileEntry {
    std::int64_t index = 0;
    ExactInt value;
};

class BFileParseError : public LucasError {
public:
    BFileParseError(std::size_t line, const std::string& what)
        : LucasError("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Indices must be strictly increasing.
std::vector<BFileEntry> parse_bfile(std::istream& in);

} // namespace lucas::cli
