#include "wos2net/normalize.hpp"

#include <string>

#include "wos2net/errors.hpp"
#include "wos2net/text.hpp"

namespace wos2net {

namespace {

// Case mapping covers ASCII and the Latin-1 letter block (plus the
// U+0178/U+00FF pair it needs to stay closed). Code points outside that
// repertoire pass through unchanged, which keeps the mapping deterministic
// without locale or ICU involvement.
char32_t lower_cp(char32_t cp) {
  if (cp >= U'A' && cp <= U'Z') return cp + 0x20;
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
  if (cp == 0x178) return 0xFF;  // Y with diaeresis
  return cp;
}

// Uppercase may expand: U+00DF (sharp s) maps to "SS".
void upper_cp(char32_t cp, std::u32string& out) {
  if (cp >= U'a' && cp <= U'z') {
    out.push_back(cp - 0x20);
  } else if (cp == 0xDF) {
    out.push_back(U'S');
    out.push_back(U'S');
  } else if (cp >= 0xE0 && cp <= 0xFE && cp != 0xF7) {
    out.push_back(cp - 0x20);
  } else if (cp == 0xFF) {
    out.push_back(0x178);
  } else {
    out.push_back(cp);
  }
}

// Title form of a single code point: first code point of its uppercase
// mapping, remainder lowered (so U+00DF titles to "Ss").
void title_cp(char32_t cp, std::u32string& out) {
  std::u32string up;
  upper_cp(cp, up);
  out.push_back(up[0]);
  for (std::size_t i = 1; i < up.size(); ++i) out.push_back(lower_cp(up[i]));
}

bool is_space_cp(char32_t cp) {
  return cp == U' ' || cp == U'\t' || cp == U'\n' || cp == U'\r';
}

bool has_case(char32_t cp) {
  std::u32string up;
  upper_cp(cp, up);
  return lower_cp(cp) != cp || up.size() != 1 || up[0] != cp;
}

}  // namespace

std::string fold_case(std::string_view s, FoldMode mode) {
  if (mode == FoldMode::None) return std::string(s);
  std::u32string cps = utf8_to_codepoints(s);
  std::u32string out;
  out.reserve(cps.size());
  switch (mode) {
    case FoldMode::Upper:
      for (char32_t cp : cps) upper_cp(cp, out);
      break;
    case FoldMode::Lower:
      for (char32_t cp : cps) out.push_back(lower_cp(cp));
      break;
    case FoldMode::Capitalized: {
      // Title-case the first cased code point of each whitespace-separated
      // token, lower the rest.
      bool pending_title = true;
      for (char32_t cp : cps) {
        if (is_space_cp(cp)) {
          pending_title = true;
          out.push_back(cp);
        } else if (pending_title && has_case(cp)) {
          title_cp(cp, out);
          pending_title = false;
        } else {
          out.push_back(lower_cp(cp));
        }
      }
      break;
    }
    case FoldMode::None:
      break;
  }
  return codepoints_to_utf8(out);
}

const char* to_string(FoldMode mode) {
  switch (mode) {
    case FoldMode::Upper: return "upper";
    case FoldMode::Lower: return "lower";
    case FoldMode::Capitalized: return "capitalized";
    case FoldMode::None: return "none";
  }
  return "none";
}

FoldMode parse_fold_mode(std::string_view name) {
  if (name == "upper") return FoldMode::Upper;
  if (name == "lower") return FoldMode::Lower;
  if (name == "capitalized") return FoldMode::Capitalized;
  if (name == "none") return FoldMode::None;
  throw ValidationError("unknown fold mode: '" + std::string(name) +
                        "' (expected upper|lower|capitalized|none)");
}

std::string extract_institution(std::string_view address) {
  std::string_view trimmed = trim(address);
  if (trimmed.empty())
    throw ValidationError("cannot extract institution from empty address");
  std::size_t comma = trimmed.find(',');
  if (comma == std::string_view::npos) return std::string(trimmed);
  return std::string(trim(trimmed.substr(0, comma)));
}

std::string extract_country(std::string_view address) {
  std::string_view trimmed = trim(address);
  std::size_t comma = trimmed.rfind(',');
  if (comma == std::string_view::npos)
    throw ValidationError("address has no comma, cannot extract country: '" +
                          std::string(address) + "'");
  std::string_view segment = trim(trimmed.substr(comma + 1));
  // WoS puts US state and zip in the final segment ("MA 02139 USA"); the
  // country is the trailing token.
  if (segment == "USA" || segment.ends_with(" USA")) return "USA";
  return std::string(segment);
}

}  // namespace wos2net
