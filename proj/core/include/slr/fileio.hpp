#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace slr {

/// Whole-file read; throws Error(IoError).
std::string read_file(const std::filesystem::path& path);

/// Writes via a temporary sibling and renames, so readers never see partial files.
void write_file(const std::filesystem::path& path, std::string_view bytes);

}  // namespace slr
