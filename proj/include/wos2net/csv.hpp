#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace wos2net {

// RFC-4180 quoting: fields containing comma, quote, or newline are wrapped
// in double quotes with embedded quotes doubled. Rows end with LF.
std::string csv_field(std::string_view field);
void write_csv_row(std::ostream& out, const std::vector<std::string>& fields);

// Full RFC-4180 reader: quoted fields may span lines; CRLF and LF both end
// rows. Throws FormatError on an unterminated quote or on stray bytes after
// a closing quote.
std::vector<std::vector<std::string>> read_csv(std::string_view text);

}  // namespace wos2net
