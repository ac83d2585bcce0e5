#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wos2net {

struct Warning {
  std::string file;
  std::size_t line = 0;  // 1-based; 0 when not tied to a line
  std::string message;
};

// One publication: an ordered tag -> values map. Tags are two uppercase
// alphanumeric characters; values are continuation lines split per the WoS
// layout (one value per line, trimmed).
struct WosRecord {
  int record_index = 0;  // 1-based ordinal within the corpus
  int doc_id = 0;        // corpus-unique, dense, assigned at parse time
  std::vector<std::pair<std::string, std::vector<std::string>>> fields;

  const std::vector<std::string>* find(std::string_view tag) const;
  // Values for a tag; empty when absent.
  std::vector<std::string> values(std::string_view tag) const;
  // Values joined with single spaces — the consumer-side rule for free-text
  // tags (TI, AB, SO).
  std::string joined(std::string_view tag) const;
  bool has(std::string_view tag) const { return find(tag) != nullptr; }
};

struct Corpus {
  std::vector<WosRecord> records;
  std::vector<std::string> source_files;
  std::vector<Warning> warnings;
};

enum class InputEncoding { Auto, Utf8, Latin1 };

struct ParseOptions {
  InputEncoding encoding = InputEncoding::Auto;
};

// Parses a WoS "plain text" export: optional FN/VR header lines, records as
// runs of `XX value` tag lines with 3-space continuation lines, each record
// closed by ER, the file optionally closed by EF. Concatenated exports in
// one stream are accepted. Malformed lines become warnings, never silent
// drops. Throws FormatError when a non-empty stream yields zero records.
Corpus parse_export(std::string_view bytes, const ParseOptions& options = {},
                    std::string_view source_name = "<stream>");

// Reads and parses one file. Throws IoError when unreadable.
Corpus parse_export_file(const std::filesystem::path& path,
                         const ParseOptions& options = {});

// Parses several files and concatenates the corpora; doc_id stays dense in
// encounter order across files.
Corpus parse_export_files(const std::vector<std::filesystem::path>& paths,
                          const ParseOptions& options = {});

// One C1 address row: the address with its leading bracketed author list
// (possibly empty) split off.
struct AddressEntry {
  std::string address;
  std::vector<std::string> author_scope;

  bool operator==(const AddressEntry&) const = default;
};

// One entry per C1 value, order preserved, duplicates retained (multiplicity
// feeds the 2-mode network). Records without C1 yield an empty list.
std::vector<AddressEntry> split_addresses(const WosRecord& record);

// Canonical tagged serialization: first value on the tag line, further
// values as 3-space continuations, ER per record, EF at the end.
// parse(to_tagged_text(parse(x))) equals parse(x) field-for-field.
std::string to_tagged_text(const WosRecord& record);
std::string to_tagged_text(const Corpus& corpus);

}  // namespace wos2net
