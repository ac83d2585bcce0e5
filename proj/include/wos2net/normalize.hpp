#pragma once

#include <string>
#include <string_view>

namespace wos2net {

// Case folding applied before attribute identity is decided. Folding is
// idempotent: fold(fold(s), m) == fold(s, m).
enum class FoldMode { Upper, Lower, Capitalized, None };

std::string fold_case(std::string_view s, FoldMode mode);

const char* to_string(FoldMode mode);
FoldMode parse_fold_mode(std::string_view name);  // throws ValidationError

// Substring before the first comma, trimmed; the whole trimmed string when
// no comma is present. Throws ValidationError on empty/whitespace-only
// input (callers filter such rows with a warning).
std::string extract_institution(std::string_view address);

// Substring after the last comma, trimmed. A trailing "USA" token wins over
// any preceding state-zip text in the same segment. UK home nations
// (England, Scotland, Wales, North Ireland) come back verbatim, never
// merged into "UK". Throws ValidationError when the address has no comma.
std::string extract_country(std::string_view address);

}  // namespace wos2net
