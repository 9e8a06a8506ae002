#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace orange {

// Shortest decimal string that round-trips to the same double.
std::string fmt_double(double v);

// Strict double parse of the whole field. Returns false on any trailing junk.
bool try_parse_double(std::string_view field, double& out);

// Splits one CSV line on commas. No quoting support; the formats here never
// embed separators.
std::vector<std::string_view> split_fields(std::string_view line, char sep = ',');

// Strips a trailing '\r' so CRLF input parses like LF input.
std::string_view strip_cr(std::string_view line);

std::string slurp_file(const std::filesystem::path& path);
void spew_file(const std::filesystem::path& path, std::string_view content);

}  // namespace orange
