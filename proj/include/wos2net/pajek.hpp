#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "wos2net/graph.hpp"
#include "wos2net/ingest.hpp"  // Warning

namespace wos2net {

enum class NetKind { OneMode, TwoMode };

// Vertex indices are 1-based as in the file format; labels[i] belongs to
// vertex i+1. Two-mode documents keep rows at 1..NR and columns at NR+1..N,
// and every edge runs from a row vertex to a column vertex.
struct PajekDocument {
  NetKind kind = NetKind::OneMode;
  std::vector<std::string> labels;
  std::uint32_t two_mode_row_count = 0;  // NR; meaningful for TwoMode only
  struct Edge {
    std::uint32_t u = 0;
    std::uint32_t v = 0;
    double weight = 1.0;

    bool operator==(const Edge&) const = default;
  };
  // Parallel entries are legal and preserved: a document listing the same
  // attribute twice yields two lines, which is what Pajek's "multiple
  // lines" projection sums.
  std::vector<Edge> edges;

  std::uint32_t vertex_count() const {
    return static_cast<std::uint32_t>(labels.size());
  }
  bool operator==(const PajekDocument&) const = default;
};

enum class OutputEncoding { Utf8, Cp1252 };

struct PajekWriteOptions {
  OutputEncoding encoding = OutputEncoding::Utf8;
};

// Emits `*Vertices N [NR]`, `I "LABEL"` lines with embedded quotes doubled,
// `*Edges`, and `U V W` lines with the weight always explicit. LF endings,
// no trailing blank line. Validates the document before writing any bytes.
// Returns the byte count written.
std::size_t write_net(const PajekDocument& doc, std::ostream& out,
                      const PajekWriteOptions& options = {});
std::size_t write_net(const PajekDocument& doc,
                      const std::filesystem::path& destination,
                      const PajekWriteOptions& options = {});
std::string net_to_string(const PajekDocument& doc,
                          const PajekWriteOptions& options = {});

struct PajekReadResult {
  PajekDocument doc;
  std::vector<Warning> warnings;
};

struct PajekReadOptions {
  // Declared vertex counts above this are rejected instead of allocated, so
  // corrupt headers fail with a structured error rather than an OOM abort.
  std::uint64_t max_vertices = 10'000'000;
};

// Inverse of write_net on files this library writes; tolerant of external
// files: CRLF, '%' comments, unquoted labels, extra vertex fields (ignored
// with a warning), and *Arcs sections (symmetrized into edges with a
// warning, summing w(u,v)+w(v,u)). *edgeslist and *matrix are rejected.
PajekReadResult read_net(std::string_view text,
                         std::string_view source_name = "<stream>",
                         const PajekReadOptions& options = {});
PajekReadResult read_net_file(const std::filesystem::path& path,
                              const PajekReadOptions& options = {});

// .clu / .vec companions: `*Vertices N` then one value per line, aligned
// with the companion .net vertex order. The overloads taking
// companion_vertex_count raise ValidationError on a length mismatch.
std::size_t write_clu(const std::vector<std::int32_t>& partition,
                      std::ostream& out);
std::size_t write_clu(const std::vector<std::int32_t>& partition,
                      std::ostream& out, std::size_t companion_vertex_count);
std::size_t write_vec(const std::vector<double>& vector, std::ostream& out);
std::size_t write_vec(const std::vector<double>& vector, std::ostream& out,
                      std::size_t companion_vertex_count);
std::vector<std::int32_t> read_clu(std::string_view text);
std::vector<double> read_vec(std::string_view text);

// Bridges from the graph module. Two-mode documents get one edge line per
// entry occurrence (weight 1), matching txt2Pajek output.
PajekDocument to_pajek(const BipartiteNetwork& bn);
PajekDocument to_pajek(const OneModeNetwork& net);

}  // namespace wos2net
