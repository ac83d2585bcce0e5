// wos2net: Web-of-Science exports -> relational CSV tables -> 2-mode and
// weighted 1-mode networks in Pajek format.
//
// Exit codes: 0 success, 1 runtime error, 2 usage error, 3 resource cap.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wos2net/csv.hpp"
#include "wos2net/errors.hpp"
#include "wos2net/fsio.hpp"
#include "wos2net/graph.hpp"
#include "wos2net/ingest.hpp"
#include "wos2net/normalize.hpp"
#include "wos2net/pajek.hpp"
#include "wos2net/tables.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace wos2net;

namespace {

constexpr const char* kVersion = "0.1.0";

struct OutputRecord {
  std::string file;
  std::string sha256;
  std::uint64_t bytes = 0;
};

class OutputWriter {
 public:
  explicit OutputWriter(fs::path out_dir) : out_dir_(std::move(out_dir)) {
    fs::create_directories(out_dir_);
  }

  void write(const std::string& name, std::string_view bytes) {
    atomic_write_file(out_dir_ / name, bytes);
    records_.push_back({name, sha256_hex(bytes), bytes.size()});
    std::cout << "wrote " << (out_dir_ / name).string() << " (" << bytes.size()
              << " bytes)\n";
  }

  const std::vector<OutputRecord>& records() const { return records_; }
  const fs::path& dir() const { return out_dir_; }

 private:
  fs::path out_dir_;
  std::vector<OutputRecord> records_;
};

json input_entry(const std::string& shown_path, std::string_view bytes) {
  return json{{"path", shown_path},
              {"sha256", sha256_hex(bytes)},
              {"bytes", bytes.size()}};
}

// The manifest makes determinism auditable: same inputs and config must
// reproduce the same output hashes. Paths inside stay relative so runs into
// different directories compare equal.
void write_manifest(OutputWriter& writer, const std::string& command,
                    const json& config, const json& inputs) {
  json outputs = json::array();
  for (const auto& record : writer.records())
    outputs.push_back({{"file", record.file},
                       {"sha256", record.sha256},
                       {"bytes", record.bytes}});
  json manifest{{"command", command},
                {"config", config},
                {"inputs", inputs},
                {"outputs", outputs},
                {"tool", {{"name", "wos2net"}, {"version", kVersion}}}};
  const std::string bytes = manifest.dump(2) + "\n";
  atomic_write_file(writer.dir() / (command + ".manifest.json"), bytes);
  std::cout << "wrote " << (writer.dir() / (command + ".manifest.json")).string()
            << " (" << bytes.size() << " bytes)\n";
}

void print_warnings(const std::vector<Warning>& warnings) {
  for (const auto& warning : warnings) {
    std::cerr << "warning: " << warning.file;
    if (warning.line) std::cerr << ":" << warning.line;
    std::cerr << ": " << warning.message << "\n";
  }
}

std::string warnings_csv(const std::vector<Warning>& warnings) {
  std::ostringstream out;
  write_csv_row(out, {"file", "line", "message"});
  for (const auto& warning : warnings)
    write_csv_row(out, {warning.file,
                        warning.line ? std::to_string(warning.line) : "",
                        warning.message});
  return out.str();
}

std::string summary_text(const Corpus& corpus) {
  std::map<std::string, std::size_t> docs_with_tag;
  for (const auto& record : corpus.records)
    for (const auto& [tag, values] : record.fields) docs_with_tag[tag] += 1;
  std::ostringstream out;
  const std::size_t n = corpus.records.size();
  out << "records " << n << "\n";
  for (const auto& [tag, count] : docs_with_tag) {
    char pct[32];
    std::snprintf(pct, sizeof pct, "%.1f",
                  n ? 100.0 * static_cast<double>(count) /
                          static_cast<double>(n)
                    : 0.0);
    out << tag << " " << count << " " << pct << "%\n";
  }
  return out.str();
}

std::string table_bytes(const TableSet& tables, TableKind kind) {
  std::ostringstream out;
  export_csv(tables, kind, out);
  return out.str();
}

// Shared settings; defaults follow the classic WoS workflow (uppercase
// folding, strict own-pipeline parsing, lenient foreign pair files).
struct CommonOptions {
  std::string out_dir = ".";
  std::string fold = "upper";
  std::string encoding = "utf8";
  bool strict_flag = false;
  bool lenient_flag = false;
  bool strict_default = true;

  bool effective_strict() const {
    if (strict_flag) return true;
    if (lenient_flag) return false;
    return strict_default;
  }
  FoldMode fold_mode() const { return parse_fold_mode(fold); }
  PajekWriteOptions pajek_options() const {
    PajekWriteOptions options;
    options.encoding = encoding == "cp1252" ? OutputEncoding::Cp1252
                                            : OutputEncoding::Utf8;
    return options;
  }
};

void add_common_flags(CLI::App* cmd, CommonOptions& options,
                      bool default_strict = true) {
  options.strict_default = default_strict;
  cmd->add_option("--out-dir", options.out_dir, "Output directory")
      ->envname("WOS2NET_OUT_DIR");
  cmd->add_option("--fold", options.fold,
                  "Case folding applied to attribute labels")
      ->check(CLI::IsMember({"upper", "lower", "capitalized", "none"}))
      ->envname("WOS2NET_FOLD");
  cmd->add_option("--encoding", options.encoding,
                  "Output encoding for Pajek files")
      ->check(CLI::IsMember({"utf8", "cp1252"}))
      ->envname("WOS2NET_ENCODING");
  auto* strict = cmd->add_flag("--strict", options.strict_flag,
                               "Abort on parse warnings");
  cmd->add_flag("--lenient", options.lenient_flag,
                "Report parse warnings and continue")
      ->excludes(strict);
}

Corpus load_corpus_strictly(const std::vector<std::string>& files,
                            bool strict) {
  std::vector<fs::path> paths(files.begin(), files.end());
  Corpus corpus = parse_export_files(paths);
  print_warnings(corpus.warnings);
  if (strict && !corpus.warnings.empty())
    throw FormatError("strict mode: " +
                      std::to_string(corpus.warnings.size()) +
                      " parse warning(s); rerun with --lenient to proceed");
  return corpus;
}

json corpus_inputs_json(const std::vector<std::string>& files) {
  json inputs = json::array();
  for (const auto& file : files)
    inputs.push_back(input_entry(file, read_file(file)));
  return inputs;
}

// --- ingest ---

struct IngestOptions {
  std::vector<std::string> files;
  CommonOptions common;
};

int run_ingest(const IngestOptions& options) {
  Corpus corpus =
      load_corpus_strictly(options.files, options.common.effective_strict());
  TableSet tables = build_tables(corpus);
  print_warnings(tables.warnings);

  OutputWriter writer(options.common.out_dir);
  for (TableKind kind : {TableKind::Documents, TableKind::Authors,
                         TableKind::Addresses, TableKind::Citations})
    writer.write(table_file_name(kind), table_bytes(tables, kind));
  writer.write("summary.txt", summary_text(corpus));

  std::vector<Warning> all_warnings = corpus.warnings;
  all_warnings.insert(all_warnings.end(), tables.warnings.begin(),
                      tables.warnings.end());
  writer.write("warnings.csv", warnings_csv(all_warnings));

  write_manifest(writer, "ingest",
                 json{{"strict", options.common.effective_strict()}},
                 corpus_inputs_json(options.files));
  std::cout << "ingested " << corpus.records.size() << " records from "
            << options.files.size() << " file(s)\n";
  return 0;
}

// --- network ---

struct NetworkOptions {
  std::vector<std::string> files;
  std::string tables_dir;
  std::string kind = "institution";
  std::string project = "none";
  std::string stem;
  std::uint64_t max_pairs = 100'000'000;
  bool edges_csv = false;
  CommonOptions common;
};

std::vector<std::pair<std::string, std::string>> attribute_pairs(
    const TableSet& tables, const std::string& kind, FoldMode fold) {
  std::vector<std::pair<std::string, std::string>> pairs;
  auto add = [&](int doc_id, const std::string& label) {
    if (label.empty()) return;  // rows the source offers no attribute for
    pairs.emplace_back(std::to_string(doc_id), fold_case(label, fold));
  };
  if (kind == "institution") {
    for (const auto& row : tables.addresses) add(row.doc_id, row.institution);
  } else if (kind == "country") {
    for (const auto& row : tables.addresses) add(row.doc_id, row.country);
  } else if (kind == "author") {
    for (const auto& row : tables.authors) add(row.doc_id, row.author_name);
  } else if (kind == "cited-ref") {
    for (const auto& row : tables.citations) add(row.doc_id, row.cited_ref);
  } else if (kind == "full-address") {
    for (const auto& row : tables.addresses) add(row.doc_id, row.full_address);
  } else {
    throw ValidationError("unknown attribute kind: " + kind);
  }
  return pairs;
}

int run_network(const NetworkOptions& options) {
  json inputs;
  TableSet tables;
  if (!options.tables_dir.empty()) {
    tables = import_tables(options.tables_dir);
    validate_referential_integrity(tables);
    inputs = json::array();
    for (TableKind kind : {TableKind::Documents, TableKind::Authors,
                           TableKind::Addresses, TableKind::Citations}) {
      const fs::path path = fs::path(options.tables_dir) /
                            table_file_name(kind);
      inputs.push_back(input_entry(path.string(), read_file(path)));
    }
  } else {
    Corpus corpus = load_corpus_strictly(options.files,
                                         options.common.effective_strict());
    tables = build_tables(corpus);
    print_warnings(tables.warnings);
    inputs = corpus_inputs_json(options.files);
  }

  const FoldMode fold = options.common.fold_mode();
  const auto pairs = attribute_pairs(tables, options.kind, fold);
  const BipartiteNetwork bn = build_bipartite(pairs);
  std::cout << options.kind << ": " << bn.row_count() << " documents x "
            << bn.col_count() << " attributes, " << bn.total_multiplicity
            << " pairs\n";

  const std::string stem =
      options.stem.empty() ? options.kind : options.stem;
  OutputWriter writer(options.common.out_dir);
  const PajekWriteOptions pajek = options.common.pajek_options();
  writer.write(stem + ".2mode.net", net_to_string(to_pajek(bn), pajek));

  if (options.project != "none") {
    ProjectionOptions projection;
    projection.max_pairs = options.max_pairs;
    const OneModeNetwork net = options.project == "columns"
                                   ? project_columns(bn, projection)
                                   : project_rows(bn, projection);
    writer.write(stem + ".1mode.net", net_to_string(to_pajek(net), pajek));

    const auto partition = weak_components(net);
    std::ostringstream clu;
    write_clu(partition, clu, net.node_count());
    writer.write(stem + ".components.clu", clu.str());

    std::ostringstream vec;
    write_vec(weighted_degree(net), vec, net.node_count());
    writer.write(stem + ".wdegree.vec", vec.str());

    std::ostringstream census;
    for (const auto& [size, count] : component_census(partition))
      census << size << " " << count << "\n";
    writer.write(stem + ".census.txt", census.str());

    if (options.edges_csv) {
      std::ostringstream edges;
      export_edges_csv(net, edges);
      writer.write(stem + ".edges.csv", edges.str());
    }
    std::cout << options.project << " projection: " << net.node_count()
              << " nodes, " << net.edge_count() << " edges\n";
  }

  write_manifest(writer, "network",
                 json{{"kind", options.kind},
                      {"fold", options.common.fold},
                      {"project", options.project},
                      {"stem", stem},
                      {"strict", options.common.effective_strict()},
                      {"encoding", options.common.encoding},
                      {"max_pairs", options.max_pairs},
                      {"edges_csv", options.edges_csv},
                      {"from_tables", !options.tables_dir.empty()}},
                 inputs);
  return 0;
}

// --- convert (txt2Pajek parity) ---

struct ConvertOptions {
  std::string pairs_file;
  std::string sep = "comma";
  std::string out_file;
  CommonOptions common;
};

int run_convert(const ConvertOptions& options) {
  PairOptions pair_options;
  pair_options.separator = options.sep == "tab" ? '\t' : ',';
  pair_options.fold = options.common.fold_mode();
  pair_options.strict = options.common.effective_strict();

  std::string bytes;
  std::string shown_path = options.pairs_file;
  if (options.pairs_file == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    bytes = std::move(buf).str();
  } else {
    bytes = read_file(options.pairs_file);
  }
  PairList pairs = import_pairs(bytes, pair_options, shown_path);
  print_warnings(pairs.warnings);

  // same name, .net extension, unless --out says otherwise
  std::string out_name;
  if (!options.out_file.empty()) {
    out_name = options.out_file;
  } else if (options.pairs_file == "-") {
    throw ValidationError("reading from stdin requires --out");
  } else {
    out_name = fs::path(options.pairs_file)
                   .filename()
                   .replace_extension(".net")
                   .string();
  }

  const BipartiteNetwork bn = build_bipartite(pairs.pairs);
  OutputWriter writer(options.common.out_dir);
  writer.write(out_name,
               net_to_string(to_pajek(bn), options.common.pajek_options()));
  write_manifest(writer, "convert",
                 json{{"sep", options.sep},
                      {"fold", options.common.fold},
                      {"strict", options.common.effective_strict()},
                      {"encoding", options.common.encoding}},
                 json::array({input_entry(shown_path, bytes)}));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Builds relational tables and Pajek networks from "
               "Web-of-Science tagged exports"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  IngestOptions ingest_options;
  auto* ingest_cmd = app.add_subcommand(
      "ingest", "Parse WoS exports into CSV tables plus a coverage summary");
  ingest_cmd->add_option("files", ingest_options.files, "WoS export files")
      ->required()
      ->check(CLI::ExistingFile);
  add_common_flags(ingest_cmd, ingest_options.common);

  NetworkOptions network_options;
  auto* network_cmd = app.add_subcommand(
      "network",
      "Build a 2-mode document x attribute network (and optional 1-mode "
      "projection) from exports or ingested tables");
  network_cmd->add_option("files", network_options.files, "WoS export files")
      ->check(CLI::ExistingFile);
  network_cmd
      ->add_option("--tables", network_options.tables_dir,
                   "Directory holding CSV tables from a previous ingest")
      ->check(CLI::ExistingDirectory);
  network_cmd
      ->add_option("--kind", network_options.kind, "Attribute kind")
      ->check(CLI::IsMember({"institution", "country", "author", "cited-ref",
                             "full-address"}))
      ->required();
  network_cmd
      ->add_option("--project", network_options.project,
                   "1-mode projection side")
      ->check(CLI::IsMember({"columns", "rows", "none"}));
  network_cmd->add_option("--stem", network_options.stem,
                          "Output file stem (defaults to the kind)");
  network_cmd
      ->add_option("--max-pairs", network_options.max_pairs,
                   "Projection accumulation cap")
      ->envname("WOS2NET_MAX_PAIRS");
  network_cmd->add_flag("--edges-csv", network_options.edges_csv,
                        "Also write the 1-mode edge list as CSV");
  add_common_flags(network_cmd, network_options.common);

  ConvertOptions convert_options;
  auto* convert_cmd = app.add_subcommand(
      "convert", "Turn a two-column pair file into a 2-mode Pajek network");
  convert_cmd
      ->add_option("pairs", convert_options.pairs_file,
                   "Pair file (or - for stdin)")
      ->required();
  convert_cmd->add_option("--sep", convert_options.sep, "Field separator")
      ->check(CLI::IsMember({"comma", "tab"}))
      ->envname("WOS2NET_SEP");
  convert_cmd->add_option("--out", convert_options.out_file,
                          "Output file name (defaults to <input>.net)");
  add_common_flags(convert_cmd, convert_options.common,
                   /*default_strict=*/false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& error) {
    const int code = app.exit(error);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(ingest_cmd)) return run_ingest(ingest_options);
    if (app.got_subcommand(network_cmd)) {
      if (network_options.files.empty() &&
          network_options.tables_dir.empty()) {
        std::cerr << "network: provide WoS export files or --tables DIR\n";
        return 2;
      }
      if (!network_options.files.empty() &&
          !network_options.tables_dir.empty()) {
        std::cerr << "network: files and --tables are mutually exclusive\n";
        return 2;
      }
      return run_network(network_options);
    }
    if (app.got_subcommand(convert_cmd)) return run_convert(convert_options);
  } catch (const ResourceCapError& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 3;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 1;
  }
  return 0;
}
