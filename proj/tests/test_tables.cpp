#include "wos2net/tables.hpp"

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "support/generators.hpp"
#include "wos2net/csv.hpp"
#include "wos2net/errors.hpp"

using namespace wos2net;

namespace {

const std::filesystem::path kDataDir = WOS2NET_TEST_DATA_DIR;

std::filesystem::path make_temp_dir(const std::string& tag) {
  auto dir = std::filesystem::temp_directory_path() /
             ("wos2net_test_" + tag + "_" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

std::string export_all_csv(const TableSet& tables) {
  std::ostringstream out;
  for (TableKind kind : {TableKind::Documents, TableKind::Authors,
                         TableKind::Addresses, TableKind::Citations})
    export_csv(tables, kind, out);
  return out.str();
}

}  // namespace

TEST_SUITE_BEGIN("tables");

TEST_CASE("build_tables counts one row per source value") {
  Corpus corpus = parse_export(
      "PT J\nAU Kim, A\n   Lee, B\nTI sample title\nSO JOURNAL X\n"
      "C1 [Kim, A] KAIST, Daejeon, South Korea\nPY 2001\nER\nEF\n");
  TableSet tables = build_tables(corpus);
  CHECK(tables.documents.size() == 1);
  CHECK(tables.authors.size() == 2);
  CHECK(tables.addresses.size() == 1);
  CHECK(tables.citations.empty());

  CHECK(tables.documents[0].doc_id == 1);
  CHECK(tables.documents[0].source_title == "JOURNAL X");
  CHECK(tables.documents[0].pub_year == "2001");
  CHECK(tables.authors[0].position == 1);
  CHECK(tables.authors[1].position == 2);
  CHECK(tables.authors[1].author_name == "Lee, B");
  CHECK(tables.addresses[0].full_address == "KAIST, Daejeon, South Korea");
  CHECK(tables.addresses[0].institution == "KAIST");
  CHECK(tables.addresses[0].country == "South Korea");
}

TEST_CASE("addresses without a comma get no country, with a warning") {
  Corpus corpus = parse_export("PT J\nC1 CERN\nER\nEF\n");
  TableSet tables = build_tables(corpus);
  REQUIRE(tables.addresses.size() == 1);
  CHECK(tables.addresses[0].institution == "CERN");
  CHECK(tables.addresses[0].country.empty());
  REQUIRE(tables.warnings.size() == 1);
  CHECK(tables.warnings[0].message.find("country") != std::string::npos);
}

TEST_CASE("empty addresses are filtered with a warning") {
  Corpus corpus = parse_export("PT J\nC1 [Kim, A]\nER\nEF\n");
  TableSet tables = build_tables(corpus);
  CHECK(tables.addresses.empty());
  REQUIRE(tables.warnings.size() == 1);
  CHECK(tables.warnings[0].message.find("empty address") != std::string::npos);
}

TEST_CASE("table row counts equal the generator ledger") {
  auto generated = testgen::generate_corpus(555, 2000);
  Corpus corpus = parse_export(generated.text);
  TableSet tables = build_tables(corpus);
  validate_referential_integrity(tables);

  const auto& ledger = generated.ledger;
  auto ledger_count = [&](const char* tag) {
    auto it = ledger.tag_value_counts.find(tag);
    return it == ledger.tag_value_counts.end() ? std::size_t{0} : it->second;
  };
  CHECK(tables.documents.size() ==
        static_cast<std::size_t>(ledger.record_count));
  CHECK(tables.authors.size() == ledger_count("AU"));
  CHECK(tables.addresses.size() == ledger.c1_lines);
  CHECK(tables.citations.size() == ledger_count("CR"));
}

TEST_CASE("referential integrity violations are detected") {
  TableSet tables;
  tables.documents.push_back({1, "S", "2000", "T"});
  tables.authors.push_back({2, "Ghost, A", 1});
  CHECK_THROWS_AS(validate_referential_integrity(tables), ValidationError);
}

TEST_CASE("export_csv quotes only what RFC 4180 requires") {
  TableSet tables;
  tables.documents.push_back({1, "JOURNAL", "2000", "plain title"});
  tables.addresses.push_back(
      {1, "UNIST, Sch Technol Management, Ulsan, South Korea", "UNIST",
       "South Korea"});
  std::ostringstream out;
  export_csv(tables, TableKind::Addresses, out);
  CHECK(out.str() ==
        "doc_id,full_address,institution,country\n"
        "1,\"UNIST, Sch Technol Management, Ulsan, South Korea\",UNIST,"
        "South Korea\n");
}

TEST_CASE("empty table exports header only and returns 0") {
  TableSet tables;
  std::ostringstream out;
  CHECK(export_csv(tables, TableKind::Citations, out) == 0);
  CHECK(out.str() == "doc_id,cited_ref\n");
}

TEST_CASE("csv reader handles quotes, newlines, and CRLF") {
  auto rows = read_csv("a,\"b,c\",\"say \"\"hi\"\"\"\r\n\"multi\nline\",2,3\n");
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == std::vector<std::string>{"a", "b,c", "say \"hi\""});
  CHECK(rows[1] == std::vector<std::string>{"multi\nline", "2", "3"});
  CHECK_THROWS_AS(read_csv("\"unterminated\n"), FormatError);
  CHECK_THROWS_AS(read_csv("\"x\"tail\n"), FormatError);
}

TEST_CASE("export then import reproduces random tables exactly") {
  testgen::Rng rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    TableSet tables;
    const int docs = static_cast<int>(rng.range(0, 12));
    for (int d = 1; d <= docs; ++d) {
      tables.documents.push_back({d, testgen::random_label(rng, true),
                                  std::to_string(rng.range(1990, 2020)),
                                  testgen::random_label(rng, true)});
      const int authors = static_cast<int>(rng.range(0, 3));
      for (int a = 1; a <= authors; ++a)
        tables.authors.push_back({d, testgen::random_label(rng, true), a});
      const int addresses = static_cast<int>(rng.range(0, 3));
      for (int i = 0; i < addresses; ++i)
        tables.addresses.push_back({d, testgen::random_label(rng, true),
                                    testgen::random_label(rng, true),
                                    testgen::random_label(rng)});
      const int refs = static_cast<int>(rng.range(0, 2));
      for (int i = 0; i < refs; ++i)
        tables.citations.push_back({d, testgen::random_label(rng, true)});
    }

    auto dir = make_temp_dir("roundtrip");
    for (TableKind kind : {TableKind::Documents, TableKind::Authors,
                           TableKind::Addresses, TableKind::Citations})
      export_csv(tables, kind, dir / table_file_name(kind));
    TableSet imported = import_tables(dir);
    CHECK(imported == tables);
    std::filesystem::remove_all(dir);
  }
}

TEST_CASE("build_tables is deterministic, byte for byte") {
  auto generated = testgen::generate_corpus(31, 300);
  Corpus corpus_a = parse_export(generated.text);
  Corpus corpus_b = parse_export(generated.text);
  CHECK(export_all_csv(build_tables(corpus_a)) ==
        export_all_csv(build_tables(corpus_b)));
}

TEST_CASE("import_pairs reads two-column text") {
  PairList list = import_pairs("1,UNIST\n1,KAIST\n");
  REQUIRE(list.pairs.size() == 2);
  CHECK(list.pairs[0] == std::pair<std::string, std::string>{"1", "UNIST"});
  CHECK(list.pairs[1] == std::pair<std::string, std::string>{"1", "KAIST"});
}

TEST_CASE("import_pairs applies case folding before pairing") {
  PairOptions options;
  options.fold = FoldMode::Upper;
  PairList list = import_pairs("1,unist\n", options);
  REQUIRE(list.pairs.size() == 1);
  CHECK(list.pairs[0].second == "UNIST");
}

TEST_CASE("import_pairs separator and strictness") {
  PairOptions tab;
  tab.separator = '\t';
  CHECK(import_pairs("1\tA\n2\tB\n", tab).pairs.size() == 2);

  CHECK_THROWS_AS(import_pairs("1,A,B\n"), FormatError);
  CHECK_THROWS_AS(import_pairs("lonely\n"), FormatError);

  PairOptions lenient;
  lenient.strict = false;
  PairList list = import_pairs("1,A\nbad line\n2,B\n", lenient);
  CHECK(list.pairs.size() == 2);
  REQUIRE(list.warnings.size() == 1);
  CHECK(list.warnings[0].line == 2);
}

TEST_CASE("pair files round-trip as a multiset") {
  testgen::Rng rng(321);
  std::vector<std::pair<std::string, std::string>> pairs;
  std::string text;
  for (int i = 0; i < 2000; ++i) {
    std::string row = std::to_string(rng.below(400));
    std::string col = "ATTR " + std::to_string(rng.below(300));
    pairs.emplace_back(row, col);
    text += row + "," + col + "\n";
  }
  PairList imported = import_pairs(text);
  CHECK(imported.pairs == pairs);  // order-preserving, duplicates kept
}

TEST_SUITE_END();
