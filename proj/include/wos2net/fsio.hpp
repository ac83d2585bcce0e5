#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace wos2net {

std::string read_file(const std::filesystem::path& path);

// Writes to a temp file in the same directory, then renames into place.
void atomic_write_file(const std::filesystem::path& path,
                       std::string_view bytes);

std::string sha256_hex(std::string_view bytes);
std::string sha256_file_hex(const std::filesystem::path& path);

}  // namespace wos2net
