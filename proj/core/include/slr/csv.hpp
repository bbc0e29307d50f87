#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace slr::csv {

using Row = std::vector<std::string>;

/// RFC-4180 reader. Accepts LF or CRLF line endings and a leading UTF-8 BOM;
/// quoted fields may contain separators, newlines and doubled quotes.
/// Throws Error(MalformedCsv) on an unterminated quote or stray characters
/// after a closing quote. Blank lines are skipped.
std::vector<Row> parse(std::string_view data, char separator = ',');

/// Quotes a field when it contains a separator, quote, CR or LF.
std::string escape(std::string_view field, char separator = ',');

std::string format_row(const Row& row, char separator = ',');

}  // namespace slr::csv
