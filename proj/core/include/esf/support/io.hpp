#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "esf/support/bytes.hpp"

namespace esf {

Bytes read_file(const std::filesystem::path& path);
std::string read_text_file(const std::filesystem::path& path);

/// Writes via a temp file in the same directory followed by rename, so
/// readers never observe a partially written file.
void write_file_atomic(const std::filesystem::path& path, ByteView data);
void write_file_atomic(const std::filesystem::path& path, std::string_view data);

std::vector<std::string> split_lines(std::string_view text);

}  // namespace esf
