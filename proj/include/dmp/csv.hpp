#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace dmp {

/// Minimal reader for the comma-separated exports used here: no embedded
/// commas or newlines inside fields. Tolerates a UTF-8 BOM, CRLF line endings,
/// surrounding whitespace, double-quoted fields and blank lines.
class CsvReader {
public:
    CsvReader(std::istream& in, std::string source);

    /// Fields of the first non-blank line. Throws SchemaError on an empty file.
    const std::vector<std::string>& header() const noexcept { return header_; }
    /// Reads the next non-blank record; false at end of input.
    bool next(std::vector<std::string>& fields);
    /// 1-based line number of the record last returned.
    std::size_t line() const noexcept { return line_; }
    const std::string& source() const noexcept { return source_; }

private:
    bool read_line(std::string& out);

    std::istream& in_;
    std::string source_;
    std::vector<std::string> header_;
    std::size_t line_ = 0;
};

std::vector<std::string> split_fields(std::string_view line);
std::string join_fields(const std::vector<std::string>& fields);
/// Strict decimal parse of the whole field; ParseError names source and line.
double parse_number(std::string_view field, const std::string& source, std::size_t line);

}  // namespace dmp
