#include "wos2net/tables.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "wos2net/csv.hpp"
#include "wos2net/errors.hpp"
#include "wos2net/text.hpp"

namespace wos2net {

TableSet build_tables(const Corpus& corpus) {
  TableSet tables;
  tables.documents.reserve(corpus.records.size());
  for (const auto& record : corpus.records) {
    DocumentRow doc;
    doc.doc_id = record.doc_id;
    doc.source_title = record.joined("SO");
    doc.title = record.joined("TI");
    const auto py = record.values("PY");
    if (!py.empty()) doc.pub_year = py.front();
    tables.documents.push_back(std::move(doc));

    int position = 0;
    for (const auto& author : record.values("AU"))
      tables.authors.push_back({record.doc_id, author, ++position});

    for (const auto& entry : split_addresses(record)) {
      if (trim(entry.address).empty()) {
        tables.warnings.push_back(
            {"", 0,
             "doc " + std::to_string(record.doc_id) +
                 ": empty address skipped"});
        continue;
      }
      AddressRow row;
      row.doc_id = record.doc_id;
      row.full_address = entry.address;
      row.institution = extract_institution(entry.address);
      if (entry.address.find(',') != std::string::npos) {
        row.country = extract_country(entry.address);
      } else {
        tables.warnings.push_back(
            {"", 0,
             "doc " + std::to_string(record.doc_id) +
                 ": no country in address '" + entry.address + "'"});
      }
      tables.addresses.push_back(std::move(row));
    }

    for (const auto& ref : record.values("CR"))
      tables.citations.push_back({record.doc_id, ref});
  }
  return tables;
}

void validate_referential_integrity(const TableSet& tables) {
  std::unordered_set<int> ids;
  ids.reserve(tables.documents.size());
  for (const auto& doc : tables.documents) ids.insert(doc.doc_id);
  auto check = [&](int doc_id, const char* table) {
    if (!ids.contains(doc_id))
      throw ValidationError(std::string(table) + " row references doc_id " +
                            std::to_string(doc_id) +
                            " missing from documents");
  };
  for (const auto& r : tables.authors) check(r.doc_id, "authors");
  for (const auto& r : tables.addresses) check(r.doc_id, "addresses");
  for (const auto& r : tables.citations) check(r.doc_id, "citations");
}

const char* table_file_name(TableKind kind) {
  switch (kind) {
    case TableKind::Documents: return "documents.csv";
    case TableKind::Authors: return "authors.csv";
    case TableKind::Addresses: return "addresses.csv";
    case TableKind::Citations: return "citations.csv";
  }
  return "";
}

std::size_t export_csv(const TableSet& tables, TableKind kind,
                       std::ostream& out) {
  std::size_t rows = 0;
  switch (kind) {
    case TableKind::Documents:
      write_csv_row(out, {"doc_id", "source_title", "pub_year", "title"});
      for (const auto& r : tables.documents) {
        write_csv_row(out, {std::to_string(r.doc_id), r.source_title,
                            r.pub_year, r.title});
        ++rows;
      }
      break;
    case TableKind::Authors:
      write_csv_row(out, {"doc_id", "author_name", "position"});
      for (const auto& r : tables.authors) {
        write_csv_row(out, {std::to_string(r.doc_id), r.author_name,
                            std::to_string(r.position)});
        ++rows;
      }
      break;
    case TableKind::Addresses:
      write_csv_row(out, {"doc_id", "full_address", "institution", "country"});
      for (const auto& r : tables.addresses) {
        write_csv_row(out, {std::to_string(r.doc_id), r.full_address,
                            r.institution, r.country});
        ++rows;
      }
      break;
    case TableKind::Citations:
      write_csv_row(out, {"doc_id", "cited_ref"});
      for (const auto& r : tables.citations) {
        write_csv_row(out, {std::to_string(r.doc_id), r.cited_ref});
        ++rows;
      }
      break;
  }
  if (!out)
    throw IoError("error writing CSV stream");
  return rows;
}

std::size_t export_csv(const TableSet& tables, TableKind kind,
                       const std::filesystem::path& destination) {
  std::ofstream out(destination, std::ios::binary);
  if (!out)
    throw IoError("cannot open for writing: " + destination.string());
  return export_csv(tables, kind, out);
}

namespace {

int parse_int(std::string_view s, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw FormatError("invalid " + std::string(what) + ": '" + std::string(s) +
                      "'");
  return value;
}

std::vector<std::vector<std::string>> read_table_file(
    const std::filesystem::path& path,
    const std::vector<std::string>& header) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw IoError("cannot open table file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  auto rows = read_csv(buf.view());
  if (rows.empty())
    throw FormatError(path.string() + ": missing header row");
  if (rows.front() != header) {
    std::string expected;
    for (const auto& h : header) {
      if (!expected.empty()) expected += ',';
      expected += h;
    }
    throw FormatError(path.string() + ": unexpected header (expected '" +
                      expected + "')");
  }
  rows.erase(rows.begin());
  // drop trailing blank lines some editors append
  while (!rows.empty() && rows.back().size() == 1 && rows.back()[0].empty())
    rows.pop_back();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != header.size())
      throw FormatError(path.string() + ": row " + std::to_string(i + 2) +
                        " has " + std::to_string(rows[i].size()) +
                        " fields, expected " + std::to_string(header.size()));
  }
  return rows;
}

}  // namespace

TableSet import_tables(const std::filesystem::path& directory) {
  TableSet tables;
  for (auto row : read_table_file(directory / "documents.csv",
                                  {"doc_id", "source_title", "pub_year",
                                   "title"})) {
    tables.documents.push_back({parse_int(row[0], "doc_id"),
                                std::move(row[1]), std::move(row[2]),
                                std::move(row[3])});
  }
  for (auto row : read_table_file(directory / "authors.csv",
                                  {"doc_id", "author_name", "position"})) {
    tables.authors.push_back({parse_int(row[0], "doc_id"), std::move(row[1]),
                              parse_int(row[2], "position")});
  }
  for (auto row : read_table_file(directory / "addresses.csv",
                                  {"doc_id", "full_address", "institution",
                                   "country"})) {
    tables.addresses.push_back({parse_int(row[0], "doc_id"),
                                std::move(row[1]), std::move(row[2]),
                                std::move(row[3])});
  }
  for (auto row :
       read_table_file(directory / "citations.csv", {"doc_id", "cited_ref"})) {
    tables.citations.push_back(
        {parse_int(row[0], "doc_id"), std::move(row[1])});
  }
  return tables;
}

PairList import_pairs(std::string_view text, const PairOptions& options,
                      std::string_view source_name) {
  PairList result;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string_view line = lines[i];
    if (is_blank(line)) continue;
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
      std::size_t sep = line.find(options.separator, start);
      if (sep == std::string_view::npos) {
        fields.push_back(line.substr(start));
        break;
      }
      fields.push_back(line.substr(start, sep - start));
      start = sep + 1;
    }
    if (fields.size() != 2) {
      std::string message = std::string(source_name) + " line " +
                            std::to_string(i + 1) + ": expected 2 fields, got " +
                            std::to_string(fields.size());
      if (options.strict) throw FormatError(message);
      result.warnings.push_back(
          {std::string(source_name), i + 1, "skipped: " + message});
      continue;
    }
    result.pairs.emplace_back(fold_case(fields[0], options.fold),
                              fold_case(fields[1], options.fold));
  }
  return result;
}

PairList import_pairs_file(const std::filesystem::path& path,
                           const PairOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw IoError("cannot open pair file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return import_pairs(buf.view(), options, path.string());
}

}  // namespace wos2net
