#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace apv {

// Whole file as bytes. Throws InputError when it cannot be opened.
std::string read_text_file(const std::string& path);

// Writes bytes exactly (binary mode), creating parent directories.
// Throws std::runtime_error on failure.
void write_text_file(const std::string& path, std::string_view content);

std::string_view trim(std::string_view s);

// Comma-separated fields, trimmed; no quoting support.
std::vector<std::string_view> split_fields(std::string_view line);

// Lines without trailing '\r'; a final empty line is dropped.
std::vector<std::string_view> split_lines(std::string_view text);

// Strict double parse of a whole field; throws std::invalid_argument.
double parse_double(std::string_view field);

}  // namespace apv
