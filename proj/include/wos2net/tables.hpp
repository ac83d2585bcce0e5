#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wos2net/ingest.hpp"
#include "wos2net/normalize.hpp"

namespace wos2net {

struct DocumentRow {
  int doc_id = 0;
  std::string source_title;
  std::string pub_year;
  std::string title;

  bool operator==(const DocumentRow&) const = default;
};

struct AuthorRow {
  int doc_id = 0;
  std::string author_name;
  int position = 0;  // 1-based within the document

  bool operator==(const AuthorRow&) const = default;
};

struct AddressRow {
  int doc_id = 0;
  std::string full_address;
  std::string institution;
  std::string country;  // empty when the address offers none

  bool operator==(const AddressRow&) const = default;
};

struct CitationRow {
  int doc_id = 0;
  std::string cited_ref;  // verbatim CR string

  bool operator==(const CitationRow&) const = default;
};

// The relational layout: documents plus per-document child tables keyed by
// doc_id. Immutable after build; concurrent readers are safe.
struct TableSet {
  std::vector<DocumentRow> documents;
  std::vector<AuthorRow> authors;
  std::vector<AddressRow> addresses;
  std::vector<CitationRow> citations;
  std::vector<Warning> warnings;

  bool operator==(const TableSet& other) const {
    return documents == other.documents && authors == other.authors &&
           addresses == other.addresses && citations == other.citations;
  }
};

// One documents row per record, one authors row per AU value, one addresses
// row per C1 address (institution and country columns filled via the
// normalize rules), one citations row per CR value. Deterministic.
TableSet build_tables(const Corpus& corpus);

// Every child-table doc_id must exist in documents.
void validate_referential_integrity(const TableSet& tables);

enum class TableKind { Documents, Authors, Addresses, Citations };

const char* table_file_name(TableKind kind);  // "documents.csv", ...

// Writes header plus one line per row, RFC-4180 quoted, LF endings.
// Returns the number of data rows written.
std::size_t export_csv(const TableSet& tables, TableKind kind,
                       std::ostream& out);
std::size_t export_csv(const TableSet& tables, TableKind kind,
                       const std::filesystem::path& destination);

// Reads the four CSV files back from a directory written by export_csv.
TableSet import_tables(const std::filesystem::path& directory);

// Two-column pair files (txt2Pajek's input contract): one pair per line,
// comma- or tab-separated, no quoting.
struct PairOptions {
  char separator = ',';
  FoldMode fold = FoldMode::None;
  bool strict = true;  // lenient skips bad lines with a warning
};

struct PairList {
  std::vector<std::pair<std::string, std::string>> pairs;
  std::vector<Warning> warnings;
};

PairList import_pairs(std::string_view text, const PairOptions& options = {},
                      std::string_view source_name = "<stream>");
PairList import_pairs_file(const std::filesystem::path& path,
                           const PairOptions& options = {});

}  // namespace wos2net
