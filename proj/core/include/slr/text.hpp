#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

// UTF-8 helpers shared by ingestion and preprocessing. Letter classification
// and case folding cover Latin (incl. Latin-1 and Extended-A/B, Latin
// Extended Additional), Greek and Cyrillic; other scripts are treated as
// non-letters. Tables are fixed so results do not depend on the C locale.
namespace slr::text {

/// Decodes UTF-8; invalid bytes become U+FFFD.
std::u32string decode_utf8(std::string_view s);
std::string encode_utf8(std::u32string_view s);
void append_utf8(std::string& out, char32_t cp);

bool is_letter(char32_t cp);
char32_t fold_case(char32_t cp);

/// Case-folded copy of a UTF-8 string.
std::string fold_case(std::string_view s);

/// Trims ASCII/Unicode whitespace at both ends and collapses internal runs to one space.
std::string collapse_whitespace(std::string_view s);

std::string_view trim(std::string_view s);

/// Lowercase hex SHA-256 of a byte string.
std::string sha256_hex(std::string_view bytes);

}  // namespace slr::text
