#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace wos2net {

// Trims ASCII space and tab only; interior runs are preserved so labels
// round-trip through Pajek quoting.
std::string_view trim(std::string_view s);

// Splits on '\n', stripping one trailing '\r' per line. The final entry is
// dropped when the input ends with a newline.
std::vector<std::string_view> split_lines(std::string_view text);

bool is_blank(std::string_view s);

// --- UTF-8 ---

bool utf8_valid(std::string_view bytes);

// Decodes one code point starting at `pos`; advances `pos` past it.
// Invalid sequences decode as U+FFFD and advance one byte.
char32_t utf8_decode(std::string_view bytes, std::size_t& pos);

void utf8_encode(char32_t cp, std::string& out);

std::u32string utf8_to_codepoints(std::string_view bytes);
std::string codepoints_to_utf8(const std::u32string& cps);

// Latin-1 bytes -> UTF-8 (every byte maps directly to U+0000..U+00FF).
std::string latin1_to_utf8(std::string_view bytes);

// UTF-8 -> Windows-1252; unmappable code points become '?'.
std::string utf8_to_cp1252(std::string_view text);

// Shortest round-trip decimal form (std::to_chars); integral values carry
// no decimal point.
std::string format_number(double value);

}  // namespace wos2net
