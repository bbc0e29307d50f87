#include "slr/csv.hpp"

#include "slr/error.hpp"

namespace slr::csv {

std::vector<Row> parse(std::string_view data, char separator) {
  if (data.size() >= 3 && data.substr(0, 3) == "\xEF\xBB\xBF") data.remove_prefix(3);

  std::vector<Row> rows;
  Row row;
  std::string field;
  std::size_t line = 1;
  std::size_t i = 0;
  const std::size_t n = data.size();
  bool row_has_content = false;

  auto end_field = [&] {
    row.push_back(std::move(field));
    field.clear();
  };
  auto end_row = [&] {
    end_field();
    if (row_has_content || row.size() > 1) rows.push_back(std::move(row));
    row.clear();
    row_has_content = false;
  };

  while (i < n) {
    char c = data[i];
    if (c == '"' && field.empty()) {
      // quoted field
      row_has_content = true;
      const std::size_t start_line = line;
      ++i;
      bool closed = false;
      while (i < n) {
        c = data[i];
        if (c == '"') {
          if (i + 1 < n && data[i + 1] == '"') {
            field.push_back('"');
            i += 2;
            continue;
          }
          closed = true;
          ++i;
          break;
        }
        if (c == '\n') ++line;
        field.push_back(c);
        ++i;
      }
      if (!closed) {
        throw Error(ErrorKind::MalformedCsv,
                    "unterminated quoted field starting on line " + std::to_string(start_line));
      }
      if (i < n && data[i] != separator && data[i] != '\n' && data[i] != '\r') {
        throw Error(ErrorKind::MalformedCsv,
                    "unexpected character after closing quote on line " + std::to_string(line));
      }
      continue;
    }
    if (c == separator) {
      row_has_content = true;
      end_field();
      ++i;
    } else if (c == '\r' && i + 1 < n && data[i + 1] == '\n') {
      end_row();
      ++line;
      i += 2;
    } else if (c == '\n') {
      end_row();
      ++line;
      ++i;
    } else {
      if (c == '"') {
        throw Error(ErrorKind::MalformedCsv, "bare quote inside unquoted field on line " +
                                                 std::to_string(line));
      }
      row_has_content = true;
      field.push_back(c);
      ++i;
    }
  }
  if (row_has_content || !field.empty() || !row.empty()) end_row();
  return rows;
}

std::string escape(std::string_view field, char separator) {
  const bool needs_quotes = field.find_first_of(std::string{separator, '"', '\r', '\n'}) !=
                            std::string_view::npos;
  if (!needs_quotes) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string format_row(const Row& row, char separator) {
  std::string out;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out.push_back(separator);
    out += escape(row[i], separator);
  }
  return out;
}

}  // namespace slr::csv
