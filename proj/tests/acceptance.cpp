// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one pass/fail line per criterion. Exits nonzero on any failure.

#include <sys/resource.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "wos2net/fsio.hpp"
#include "wos2net/graph.hpp"
#include "wos2net/ingest.hpp"
#include "wos2net/normalize.hpp"
#include "wos2net/pajek.hpp"
#include "wos2net/tables.hpp"

namespace fs = std::filesystem;
using namespace wos2net;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
  std::string name;
  double time_limit_seconds;
  std::function<void()> body;  // throws std::runtime_error on failure
};

void require(bool condition, const std::string& detail) {
  if (!condition) throw std::runtime_error(detail);
}

double peak_rss_gib() {
  struct rusage usage{};
  getrusage(RUSAGE_SELF, &usage);
  return static_cast<double>(usage.ru_maxrss) / (1024.0 * 1024.0);
}

// --- criterion 1: projection-oracle equivalence ---

std::vector<std::pair<std::string, std::string>> bounded_multiplicity_pairs(
    testgen::Rng& rng) {
  // <= 50 rows x 50 cols, cell multiplicities <= 3
  const std::size_t rows = 1 + rng.below(50);
  const std::size_t cols = 1 + rng.below(50);
  std::vector<std::pair<std::string, std::string>> pairs;
  const std::size_t cells = rng.below(rows * cols / 2 + 2);
  std::set<std::pair<std::size_t, std::size_t>> used;
  for (std::size_t i = 0; i < cells; ++i) {
    const std::size_t r = rng.below(rows);
    const std::size_t c = rng.below(cols);
    if (!used.insert({r, c}).second) continue;
    const std::size_t multiplicity = 1 + rng.below(3);
    for (std::size_t k = 0; k < multiplicity; ++k)
      pairs.emplace_back("d" + std::to_string(r), "a" + std::to_string(c));
  }
  return pairs;
}

void check_projection_oracle() {
  testgen::Rng rng(0xA11CE);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto pairs = bounded_multiplicity_pairs(rng);
    const auto dense = testgen::dense_from_pairs(pairs);
    const BipartiteNetwork bn = build_bipartite(pairs);

    const auto check = [&](const OneModeNetwork& net,
                           const std::vector<std::vector<long long>>& w,
                           const char* which) {
      std::map<std::pair<std::uint32_t, std::uint32_t>, long long> actual;
      for (const auto& edge : net.edges) {
        require(edge.u < edge.v, "edge not stored with u < v");
        actual[{edge.u, edge.v}] = edge.weight;
      }
      std::size_t expected_edges = 0;
      for (std::size_t a = 0; a < w.size(); ++a) {
        for (std::size_t b = a + 1; b < w.size(); ++b) {
          if (w[a][b] == 0) continue;
          ++expected_edges;
          auto it = actual.find({static_cast<std::uint32_t>(a),
                                 static_cast<std::uint32_t>(b)});
          require(it != actual.end() && it->second == w[a][b],
                  std::string(which) + " weight mismatch at trial " +
                      std::to_string(trial));
        }
      }
      require(expected_edges == actual.size(),
              std::string(which) + " edge count mismatch at trial " +
                  std::to_string(trial));
    };
    check(project_columns(bn), testgen::ata_off_diagonal(dense), "columns");
    check(project_rows(bn), testgen::aat_off_diagonal(dense), "rows");
  }
}

// --- criterion 2: component-oracle equivalence ---

OneModeNetwork random_graph(testgen::Rng& rng, std::size_t max_nodes) {
  OneModeNetwork net;
  const std::size_t n = rng.below(max_nodes + 1);
  for (std::size_t i = 0; i < n; ++i)
    net.labels.push_back("n" + std::to_string(i));
  if (n >= 2) {
    std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
    const std::size_t target = rng.below(n + n / 2 + 1);
    for (std::size_t e = 0; e < target; ++e) {
      auto u = static_cast<std::uint32_t>(rng.below(n));
      auto v = static_cast<std::uint32_t>(rng.below(n));
      if (u == v) continue;
      if (u > v) std::swap(u, v);
      if (!seen.insert({u, v}).second) continue;
      net.edges.push_back({u, v, static_cast<std::int64_t>(rng.range(1, 9))});
    }
    std::sort(net.edges.begin(), net.edges.end(),
              [](const auto& a, const auto& b) {
                return std::pair(a.u, a.v) < std::pair(b.u, b.v);
              });
  }
  return net;
}

void check_component_oracle() {
  testgen::Rng rng(0xC0FFEE);
  for (int trial = 0; trial < 500; ++trial) {
    const OneModeNetwork net = random_graph(rng, 200);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& edge : net.edges) edges.emplace_back(edge.u, edge.v);
    const auto oracle = testgen::dfs_components(net.node_count(), edges);
    const auto partition = weak_components(net);
    require(partition.size() == net.node_count(), "partition length");
    require(std::vector<int>(partition.begin(), partition.end()) ==
                oracle.labels,
            "partition differs from DFS oracle at trial " +
                std::to_string(trial));
    require(component_census(partition) == oracle.census,
            "census differs from DFS oracle at trial " +
                std::to_string(trial));
  }
}

// --- criterion 3: handshake invariant ---

void check_handshake() {
  testgen::Rng rng(0xBEEF);
  for (int trial = 0; trial < 300; ++trial) {
    OneModeNetwork net;
    if (trial % 2 == 0) {
      net = random_graph(rng, 150);
    } else {
      net = project_columns(
          build_bipartite(bounded_multiplicity_pairs(rng)));
    }
    long long degree_sum = 0;
    for (double d : weighted_degree(net))
      degree_sum += static_cast<long long>(d);
    long long weight_sum = 0;
    for (const auto& edge : net.edges) weight_sum += edge.weight;
    require(degree_sum == 2 * weight_sum,
            "handshake violated at trial " + std::to_string(trial));
  }
}

// --- criterion 4: pajek round trip ---

void check_pajek_round_trip() {
  testgen::Rng rng(0x9A7EC);
  for (int trial = 0; trial < 500; ++trial) {
    const PajekDocument doc =
        testgen::random_pajek_document<PajekDocument, NetKind>(
            rng, NetKind::OneMode, NetKind::TwoMode);
    const std::string first = net_to_string(doc);
    const PajekReadResult read_back = read_net(first);
    require(net_to_string(read_back.doc) == first,
            "write-read-write differs at trial " + std::to_string(trial));
    if (doc.kind == NetKind::TwoMode) {
      for (const auto& edge : read_back.doc.edges)
        require(edge.u <= doc.two_mode_row_count &&
                    edge.v > doc.two_mode_row_count,
                "two-mode bipartition violated at trial " +
                    std::to_string(trial));
    }
  }
}

// --- criterion 5: normalization conformance ---

void check_normalization() {
  require(extract_institution(
              "UNIST, Sch Technol Management, Ulsan, South Korea") == "UNIST",
          "worked example institution");
  require(extract_country(
              "UNIST, Sch Technol Management, Ulsan, South Korea") ==
              "South Korea",
          "worked example country");
  for (const char* nation :
       {"England", "Scotland", "Wales", "North Ireland"}) {
    const std::string country =
        extract_country("Some Univ, Some City, " + std::string(nation));
    require(country == nation, std::string("home nation collapsed: ") +
                                   nation + " -> " + country);
    require(country != "UK", "home nation merged into UK");
  }
  const auto& fixtures = testgen::audited_addresses();
  require(fixtures.size() >= 20, "fixture list too small");
  std::size_t passed = 0;
  for (const auto& fixture : fixtures) {
    if (extract_institution(fixture.address) == fixture.institution &&
        extract_country(fixture.address) == fixture.country)
      ++passed;
  }
  require(passed == fixtures.size(),
          "address fixture: " + std::to_string(passed) + "/" +
              std::to_string(fixtures.size()));
}

// --- criterion 6: variable-ceiling removal ---

void check_variable_ceiling() {
  constexpr std::size_t kAttributes = 100'000;
  constexpr std::size_t kPairs = 1'000'000;
  testgen::Rng rng(0x5CA1E);

  std::vector<std::pair<std::string, std::string>> pairs;
  pairs.reserve(kPairs);
  char label[16];
  for (std::size_t i = 0; i < kPairs; ++i) {
    // every attribute appears at least once; the rest are uniform draws
    const std::size_t attr = i < kAttributes ? i : rng.below(kAttributes);
    std::snprintf(label, sizeof label, "INST_%06zu", attr);
    pairs.emplace_back(std::to_string(1 + i / 5), label);
  }

  const BipartiteNetwork bn = build_bipartite(pairs);
  require(bn.col_count() == kAttributes,
          "expected 100000 distinct attributes, got " +
              std::to_string(bn.col_count()));
  require(bn.total_multiplicity == kPairs, "pair multiplicity lost");

  const OneModeNetwork net = project_columns(bn);
  require(net.node_count() == kAttributes, "projection node count");

  const fs::path dir = fs::temp_directory_path() / "wos2net_acceptance_scale";
  fs::create_directories(dir);
  const std::size_t two_mode_bytes = write_net(to_pajek(bn),
                                               dir / "scale.2mode.net");
  const std::size_t one_mode_bytes = write_net(to_pajek(net),
                                               dir / "scale.1mode.net");
  require(two_mode_bytes > 0 && one_mode_bytes > 0, "empty network files");

  const double rss = peak_rss_gib();
  require(rss < 4.0, "peak RSS " + std::to_string(rss) + " GiB >= 4 GiB");
  fs::remove_all(dir);
}

// --- criterion 7: structural-shape check ---

void check_structural_shape() {
  constexpr int kGiantSize = 40;
  constexpr int kTriads = 7;
  constexpr int kDyads = 12;
  constexpr int kIsolates = 23;

  std::string text = "FN Synthetic collaboration corpus\nVR 1.0\n";
  char name[32];
  auto record = [&](const std::vector<std::string>& institutions) {
    text += "PT J\nAU Author, A\nC1 ";
    bool first = true;
    for (const auto& inst : institutions) {
      if (!first) text += "   ";
      text += inst + ", Some City, South Korea\n";
      first = false;
    }
    text += "ER\n\n";
  };

  // giant: a chain over kGiantSize institutions keeps one component
  for (int i = 0; i + 1 < kGiantSize; ++i) {
    std::snprintf(name, sizeof name, "GIANT%03d UNIV", i);
    std::string a = name;
    std::snprintf(name, sizeof name, "GIANT%03d UNIV", i + 1);
    record({a, name});
  }
  for (int k = 0; k < kTriads; ++k) {
    std::snprintf(name, sizeof name, "TRIAD%03d", k);
    const std::string base = name;
    record({base + " ALPHA", base + " BETA", base + " GAMMA"});
  }
  for (int k = 0; k < kDyads; ++k) {
    std::snprintf(name, sizeof name, "DYAD%03d", k);
    const std::string base = name;
    record({base + " LEFT", base + " RIGHT"});
  }
  for (int k = 0; k < kIsolates; ++k) {
    std::snprintf(name, sizeof name, "LONE%03d INST", k);
    record({name});
  }
  text += "EF\n";

  const Corpus corpus = parse_export(text);
  const TableSet tables = build_tables(corpus);
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& row : tables.addresses)
    pairs.emplace_back(std::to_string(row.doc_id),
                       fold_case(row.institution, FoldMode::Upper));
  const OneModeNetwork net = project_columns(build_bipartite(pairs));
  const auto partition = weak_components(net);
  const auto census = component_census(partition);

  const std::vector<std::pair<std::size_t, std::size_t>> expected = {
      {kGiantSize, 1}, {3, kTriads}, {2, kDyads}, {1, kIsolates}};
  if (census != expected) {
    std::ostringstream got;
    for (const auto& [size, count] : census)
      got << " (" << size << "," << count << ")";
    throw std::runtime_error("census mismatch:" + got.str());
  }
  // id 0 is the giant; extraction preserves it
  const OneModeNetwork giant = extract_component(net, partition, 0);
  require(giant.node_count() == kGiantSize, "largest component extraction");
}

// --- criterion 8: CLI determinism ---

#ifdef WOS2NET_CLI_PATH
int run_cli(const std::string& args) {
  const std::string command =
      std::string(WOS2NET_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  return WEXITSTATUS(std::system(command.c_str()));
}

void check_cli_determinism() {
  const fs::path root = fs::temp_directory_path() / "wos2net_acceptance_det";
  fs::remove_all(root);
  fs::create_directories(root);

  const auto generated = testgen::generate_corpus(2025, 400);
  const fs::path corpus_path = root / "corpus.txt";
  atomic_write_file(corpus_path, generated.text);

  testgen::Rng rng(404);
  std::string pair_text;
  for (int i = 0; i < 500; ++i)
    pair_text += "d" + std::to_string(rng.below(80)) + ",ATTR " +
                 std::to_string(rng.below(60)) + "\n";
  const fs::path pairs_path = root / "pairs.txt";
  atomic_write_file(pairs_path, pair_text);

  // identical commands over identical inputs, into separate output dirs
  auto chain = [&](const std::string& tag) {
    const fs::path tables = root / (tag + "_tables");
    const fs::path nets = root / (tag + "_nets");
    require(run_cli("ingest " + corpus_path.string() + " --out-dir " +
                    tables.string()) == 0,
            "ingest failed");
    require(run_cli("network " + corpus_path.string() +
                    " --kind institution --project columns --edges-csv "
                    "--out-dir " + nets.string()) == 0,
            "network failed");
    require(run_cli("convert " + pairs_path.string() +
                    " --strict --out converted.net --out-dir " +
                    nets.string()) == 0,
            "convert failed");
  };
  chain("a");
  chain("b");

  // manifest hash equality implies output-byte equality; check both anyway
  for (const char* name :
       {"_tables/documents.csv", "_tables/authors.csv",
        "_tables/addresses.csv", "_tables/citations.csv",
        "_tables/summary.txt", "_tables/ingest.manifest.json",
        "_nets/institution.2mode.net", "_nets/institution.1mode.net",
        "_nets/institution.components.clu", "_nets/institution.wdegree.vec",
        "_nets/institution.census.txt", "_nets/institution.edges.csv",
        "_nets/network.manifest.json", "_nets/converted.net",
        "_nets/convert.manifest.json"}) {
    const std::string a = sha256_file_hex(root / ("a" + std::string(name)));
    const std::string b = sha256_file_hex(root / ("b" + std::string(name)));
    require(a == b, std::string("hash mismatch for ") + name);
  }
  fs::remove_all(root);
}
#endif

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"projection-oracle-equivalence (1000 networks, AtA/AAt exact)", 30.0,
       check_projection_oracle},
      {"component-oracle-equivalence (500 graphs, DFS exact)", 10.0,
       check_component_oracle},
      {"handshake-invariant (sum degree = 2 sum weight)", 5.0,
       check_handshake},
      {"pajek-round-trip (500 documents, byte-identical)", 10.0,
       check_pajek_round_trip},
      {"normalization-conformance (worked example + 20-address fixture)", 5.0,
       check_normalization},
      {"variable-ceiling-removal (100k attributes, 1e6 pairs, <4GiB)", 120.0,
       check_variable_ceiling},
      {"structural-shape (planted giant/triads/dyads/isolates)", 10.0,
       check_structural_shape},
#ifdef WOS2NET_CLI_PATH
      {"cli-determinism (two runs, manifest hash equality)", 60.0,
       check_cli_determinism},
#endif
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    const auto start = Clock::now();
    std::string detail;
    bool ok = true;
    try {
      criterion.body();
    } catch (const std::exception& error) {
      ok = false;
      detail = error.what();
    }
    const double elapsed =
        std::chrono::duration<double>(Clock::now() - start).count();
    if (ok && elapsed > criterion.time_limit_seconds) {
      ok = false;
      detail = "exceeded time limit of " +
               std::to_string(criterion.time_limit_seconds) + "s";
    }
    char line[256];
    std::snprintf(line, sizeof line, "[%s] %s (%.2fs)",
                  ok ? "PASS" : "FAIL", criterion.name.c_str(), elapsed);
    std::cout << line;
    if (!ok) std::cout << " -- " << detail;
    std::cout << "\n";
    failures += ok ? 0 : 1;
  }
  if (failures) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all acceptance criteria passed\n";
  return 0;
}
