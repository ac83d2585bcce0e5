#include "wos2net/csv.hpp"

#include "wos2net/errors.hpp"

namespace wos2net {

std::string csv_field(std::string_view field) {
  bool needs_quotes = field.find_first_of(",\"\n\r") != std::string_view::npos;
  if (!needs_quotes) return std::string(field);
  std::string out;
  out.reserve(field.size() + 2);
  out.push_back('"');
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out.put(',');
    out << csv_field(fields[i]);
  }
  out.put('\n');
}

std::vector<std::vector<std::string>> read_csv(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool in_quotes = false;
  bool field_was_quoted = false;
  bool row_has_content = false;
  std::size_t line = 1;

  auto end_field = [&] {
    row.push_back(std::move(field));
    field.clear();
    field_was_quoted = false;
  };
  auto end_row = [&] {
    end_field();
    rows.push_back(std::move(row));
    row.clear();
    row_has_content = false;
  };

  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < n && text[i + 1] == '"') {
          field.push_back('"');
          i += 2;
        } else {
          in_quotes = false;
          ++i;
        }
      } else {
        if (c == '\n') ++line;
        field.push_back(c);
        ++i;
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!field.empty() || field_was_quoted)
          throw FormatError("csv line " + std::to_string(line) +
                            ": quote inside unquoted field");
        in_quotes = true;
        field_was_quoted = true;
        row_has_content = true;
        ++i;
        break;
      case ',':
        end_field();
        row_has_content = true;
        ++i;
        break;
      case '\r':
        if (i + 1 < n && text[i + 1] == '\n') ++i;
        [[fallthrough]];
      case '\n':
        end_row();
        ++line;
        ++i;
        break;
      default:
        if (field_was_quoted)
          throw FormatError("csv line " + std::to_string(line) +
                            ": content after closing quote");
        field.push_back(c);
        row_has_content = true;
        ++i;
        break;
    }
  }
  if (in_quotes)
    throw FormatError("csv: unterminated quoted field at end of input");
  if (row_has_content || !field.empty() || !row.empty()) end_row();
  return rows;
}

}  // namespace wos2net
