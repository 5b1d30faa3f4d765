#include "dmp/csv.hpp"

#include <charconv>
#include <cmath>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "dmp/errors.hpp"

namespace dmp {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

}  // namespace

CsvReader::CsvReader(std::istream& in, std::string source) : in_(in), source_(std::move(source)) {
    std::string line;
    if (!read_line(line)) throw SchemaError(fmt::format("{}: file is empty, expected a header row", source_));
    if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) line.erase(0, 3);
    header_ = split_fields(line);
}

bool CsvReader::read_line(std::string& out) {
    while (std::getline(in_, out)) {
        ++line_;
        if (!trim(out).empty()) return true;
    }
    return false;
}

bool CsvReader::next(std::vector<std::string>& fields) {
    std::string line;
    if (!read_line(line)) return false;
    fields = split_fields(line);
    return true;
}

std::vector<std::string> split_fields(std::string_view line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        std::string_view field = trim(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start));
        if (field.size() >= 2 && field.front() == '"' && field.back() == '"') field = field.substr(1, field.size() - 2);
        fields.emplace_back(field);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return fields;
}

std::string join_fields(const std::vector<std::string>& fields) {
    return fmt::format("{}", fmt::join(fields, ","));
}

double parse_number(std::string_view field, const std::string& source, std::size_t line) {
    double value = 0.0;
    const char* begin = field.data();
    const char* end = begin + field.size();
    if (!field.empty() && *begin == '+') ++begin;
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (field.empty() || ec != std::errc{} || ptr != end || !std::isfinite(value))
        throw ParseError(source, line, fmt::format("cannot parse '{}' as a number", field));
    return value;
}

}  // namespace dmp
