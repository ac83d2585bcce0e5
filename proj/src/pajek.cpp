#include "wos2net/pajek.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "wos2net/errors.hpp"
#include "wos2net/text.hpp"

namespace wos2net {

namespace {

void validate(const PajekDocument& doc) {
  const std::uint32_t n = doc.vertex_count();
  if (doc.kind == NetKind::TwoMode && doc.two_mode_row_count > n)
    throw ValidationError("two-mode row count " +
                          std::to_string(doc.two_mode_row_count) +
                          " exceeds vertex count " + std::to_string(n));
  for (std::size_t i = 0; i < doc.labels.size(); ++i) {
    const std::string& label = doc.labels[i];
    if (label.empty())
      throw ValidationError("vertex " + std::to_string(i + 1) +
                            " has an empty label");
    if (label.find('\n') != std::string::npos ||
        label.find('\r') != std::string::npos)
      throw ValidationError("vertex " + std::to_string(i + 1) +
                            " label contains a line break");
  }
  for (const auto& edge : doc.edges) {
    if (edge.u < 1 || edge.u > n || edge.v < 1 || edge.v > n)
      throw ValidationError("edge (" + std::to_string(edge.u) + "," +
                            std::to_string(edge.v) +
                            ") out of vertex range 1.." + std::to_string(n));
    if (doc.kind == NetKind::TwoMode &&
        !(edge.u <= doc.two_mode_row_count &&
          edge.v > doc.two_mode_row_count))
      throw ValidationError("edge (" + std::to_string(edge.u) + "," +
                            std::to_string(edge.v) +
                            ") violates the row/column bipartition (NR=" +
                            std::to_string(doc.two_mode_row_count) + ")");
    if (!std::isfinite(edge.weight))
      throw ValidationError("edge (" + std::to_string(edge.u) + "," +
                            std::to_string(edge.v) +
                            ") has a non-finite weight");
  }
}

void append_quoted(std::string& out, std::string_view label) {
  out.push_back('"');
  for (char c : label) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
}

}  // namespace

std::string net_to_string(const PajekDocument& doc,
                          const PajekWriteOptions& options) {
  validate(doc);
  std::string out;
  out.reserve(32 + doc.labels.size() * 16 + doc.edges.size() * 12);
  out += "*Vertices ";
  out += std::to_string(doc.vertex_count());
  if (doc.kind == NetKind::TwoMode) {
    out += ' ';
    out += std::to_string(doc.two_mode_row_count);
  }
  out += '\n';
  for (std::size_t i = 0; i < doc.labels.size(); ++i) {
    out += std::to_string(i + 1);
    out += ' ';
    append_quoted(out, doc.labels[i]);
    out += '\n';
  }
  out += "*Edges\n";
  for (const auto& edge : doc.edges) {
    out += std::to_string(edge.u);
    out += ' ';
    out += std::to_string(edge.v);
    out += ' ';
    out += format_number(edge.weight);
    out += '\n';
  }
  if (options.encoding == OutputEncoding::Cp1252) return utf8_to_cp1252(out);
  return out;
}

std::size_t write_net(const PajekDocument& doc, std::ostream& out,
                      const PajekWriteOptions& options) {
  const std::string bytes = net_to_string(doc, options);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out)
    throw IoError("error writing Pajek stream");
  return bytes.size();
}

std::size_t write_net(const PajekDocument& doc,
                      const std::filesystem::path& destination,
                      const PajekWriteOptions& options) {
  std::ofstream out(destination, std::ios::binary);
  if (!out)
    throw IoError("cannot open for writing: " + destination.string());
  return write_net(doc, out, options);
}

namespace {

struct LineScanner {
  std::vector<std::string_view> lines;
  std::size_t next = 0;

  // Returns the next content line; skips blanks and '%' comments.
  bool advance(std::string_view& line, std::size_t& line_no) {
    while (next < lines.size()) {
      std::string_view current = lines[next];
      ++next;
      std::string_view t = trim(current);
      if (t.empty() || t.front() == '%') continue;
      line = current;
      line_no = next;
      return true;
    }
    return false;
  }
};

std::uint64_t parse_uint(std::string_view token, std::size_t line_no,
                         const char* what) {
  std::uint64_t value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw FormatError("line " + std::to_string(line_no) + ": invalid " +
                      std::string(what) + " '" + std::string(token) + "'");
  return value;
}

double parse_weight(std::string_view token, std::size_t line_no) {
  double value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() ||
      !std::isfinite(value))
    throw FormatError("line " + std::to_string(line_no) +
                      ": invalid edge weight '" + std::string(token) + "'");
  return value;
}

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i >= line.size()) break;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

bool iequals(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    char ca = a[i], cb = b[i];
    if (ca >= 'A' && ca <= 'Z') ca += 0x20;
    if (cb >= 'A' && cb <= 'Z') cb += 0x20;
    if (ca != cb) return false;
  }
  return true;
}

}  // namespace

PajekReadResult read_net(std::string_view text, std::string_view source_name,
                         const PajekReadOptions& options) {
  PajekReadResult result;
  PajekDocument& doc = result.doc;
  auto warn = [&](std::size_t line_no, std::string message) {
    result.warnings.push_back(
        {std::string(source_name), line_no, std::move(message)});
  };

  LineScanner scanner{split_lines(text)};
  std::string_view line;
  std::size_t line_no = 0;

  if (!scanner.advance(line, line_no))
    throw FormatError(std::string(source_name) +
                      ": missing *Vertices section");
  {
    auto tokens = tokenize(line);
    if (tokens.empty() || !iequals(tokens[0], "*Vertices"))
      throw FormatError(std::string(source_name) + " line " +
                        std::to_string(line_no) +
                        ": expected *Vertices, found '" + std::string(line) +
                        "'");
    if (tokens.size() < 2 || tokens.size() > 3)
      throw FormatError(std::string(source_name) + " line " +
                        std::to_string(line_no) +
                        ": *Vertices takes N or N NR");
    const std::uint64_t n = parse_uint(tokens[1], line_no, "vertex count");
    if (n > 0xFFFFFFFFull || n > options.max_vertices)
      throw FormatError("line " + std::to_string(line_no) +
                        ": vertex count " + std::to_string(n) +
                        " exceeds the reader limit of " +
                        std::to_string(options.max_vertices));
    doc.labels.assign(n, std::string());
    if (tokens.size() == 3) {
      doc.kind = NetKind::TwoMode;
      const std::uint64_t nr = parse_uint(tokens[2], line_no, "row count");
      if (nr > n)
        throw FormatError("line " + std::to_string(line_no) + ": row count " +
                          std::to_string(nr) + " exceeds vertex count " +
                          std::to_string(n));
      doc.two_mode_row_count = static_cast<std::uint32_t>(nr);
    }
  }

  const std::uint32_t n = doc.vertex_count();
  std::vector<bool> labeled(n, false);

  enum class Section { Vertices, Edges, Arcs };
  Section section = Section::Vertices;
  bool saw_arcs = false;
  // arc weights accumulate per unordered pair before symmetrization
  std::map<std::pair<std::uint32_t, std::uint32_t>, double> arc_weights;

  while (scanner.advance(line, line_no)) {
    std::string_view t = trim(line);
    if (t.front() == '*') {
      auto tokens = tokenize(t);
      if (iequals(tokens[0], "*Edges")) {
        section = Section::Edges;
        continue;
      }
      if (iequals(tokens[0], "*Arcs")) {
        section = Section::Arcs;
        if (!saw_arcs)
          warn(line_no, "*Arcs section symmetrized into undirected edges");
        saw_arcs = true;
        continue;
      }
      if (iequals(tokens[0], "*edgeslist") || iequals(tokens[0], "*arcslist"))
        throw FormatError(std::string(source_name) + " line " +
                          std::to_string(line_no) + ": " +
                          std::string(tokens[0]) +
                          " sections are not supported; export plain *Edges");
      throw FormatError(std::string(source_name) + " line " +
                        std::to_string(line_no) + ": unsupported section '" +
                        std::string(tokens[0]) + "'");
    }

    if (section == Section::Vertices) {
      // `index "label with ""quotes"""` or `index bareword`, optionally
      // followed by coordinates we do not keep
      std::size_t pos = 0;
      while (pos < t.size() && t[pos] != ' ' && t[pos] != '\t') ++pos;
      const std::uint64_t index =
          parse_uint(t.substr(0, pos), line_no, "vertex index");
      if (index < 1 || index > n)
        throw FormatError(std::string(source_name) + " line " +
                          std::to_string(line_no) + ": vertex index " +
                          std::to_string(index) +
                          " outside declared range 1.." + std::to_string(n));
      while (pos < t.size() && (t[pos] == ' ' || t[pos] == '\t')) ++pos;
      std::string label;
      if (pos >= t.size()) {
        label = std::to_string(index);  // Pajek default when no label given
      } else if (t[pos] == '"') {
        ++pos;
        bool closed = false;
        while (pos < t.size()) {
          if (t[pos] == '"') {
            if (pos + 1 < t.size() && t[pos + 1] == '"') {
              label.push_back('"');
              pos += 2;
            } else {
              ++pos;
              closed = true;
              break;
            }
          } else {
            label.push_back(t[pos]);
            ++pos;
          }
        }
        if (!closed)
          throw FormatError(std::string(source_name) + " line " +
                            std::to_string(line_no) +
                            ": unterminated quoted label");
      } else {
        std::size_t start = pos;
        while (pos < t.size() && t[pos] != ' ' && t[pos] != '\t') ++pos;
        label.assign(t.substr(start, pos - start));
      }
      if (!trim(t.substr(pos)).empty())
        warn(line_no, "extra vertex fields ignored: '" +
                          std::string(trim(t.substr(pos))) + "'");
      if (labeled[index - 1])
        warn(line_no, "vertex " + std::to_string(index) +
                          " redefined; keeping the last label");
      doc.labels[index - 1] = label;
      labeled[index - 1] = true;
      continue;
    }

    // edge / arc line: U V [W]
    auto tokens = tokenize(t);
    if (tokens.size() < 2 || tokens.size() > 3)
      throw FormatError(std::string(source_name) + " line " +
                        std::to_string(line_no) +
                        ": expected 'U V [W]', found '" + std::string(t) +
                        "'");
    const std::uint64_t u64 = parse_uint(tokens[0], line_no, "vertex index");
    const std::uint64_t v64 = parse_uint(tokens[1], line_no, "vertex index");
    if (u64 < 1 || u64 > n || v64 < 1 || v64 > n)
      throw FormatError(std::string(source_name) + " line " +
                        std::to_string(line_no) + ": edge endpoint outside "
                        "declared vertex range 1.." + std::to_string(n));
    std::uint32_t u = static_cast<std::uint32_t>(u64);
    std::uint32_t v = static_cast<std::uint32_t>(v64);
    const double weight =
        tokens.size() == 3 ? parse_weight(tokens[2], line_no) : 1.0;

    if (doc.kind == NetKind::TwoMode) {
      const std::uint32_t nr = doc.two_mode_row_count;
      if (u > nr && v <= nr) std::swap(u, v);  // normalize row -> column
      if (!(u <= nr && v > nr))
        throw FormatError(std::string(source_name) + " line " +
                          std::to_string(line_no) + ": edge (" +
                          std::to_string(u) + "," + std::to_string(v) +
                          ") violates the two-mode bipartition (NR=" +
                          std::to_string(nr) + ")");
    }

    if (section == Section::Arcs) {
      auto key = std::minmax(u, v);
      arc_weights[{key.first, key.second}] += weight;
    } else {
      doc.edges.push_back({u, v, weight});
    }
  }

  // symmetrized arcs follow any explicit edges, in (u,v) order
  for (const auto& [key, weight] : arc_weights)
    doc.edges.push_back({key.first, key.second, weight});

  // vertices without a vertex line keep their index as the label
  for (std::uint32_t i = 0; i < n; ++i)
    if (!labeled[i]) doc.labels[i] = std::to_string(i + 1);

  return result;
}

PajekReadResult read_net_file(const std::filesystem::path& path,
                              const PajekReadOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw IoError("cannot open Pajek file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_net(buf.view(), path.string(), options);
}

namespace {

template <typename T, typename Format>
std::size_t write_values(const std::vector<T>& values, std::ostream& out,
                         Format format) {
  std::string buf = "*Vertices " + std::to_string(values.size()) + "\n";
  for (const T& value : values) {
    buf += format(value);
    buf += '\n';
  }
  out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  if (!out)
    throw IoError("error writing Pajek companion stream");
  return buf.size();
}

}  // namespace

std::size_t write_clu(const std::vector<std::int32_t>& partition,
                      std::ostream& out) {
  return write_values(partition, out,
                      [](std::int32_t v) { return std::to_string(v); });
}

std::size_t write_clu(const std::vector<std::int32_t>& partition,
                      std::ostream& out, std::size_t companion_vertex_count) {
  if (partition.size() != companion_vertex_count)
    throw ValidationError("partition length " +
                          std::to_string(partition.size()) +
                          " does not match companion network vertex count " +
                          std::to_string(companion_vertex_count));
  return write_clu(partition, out);
}

std::size_t write_vec(const std::vector<double>& vector, std::ostream& out) {
  return write_values(vector, out, [](double v) { return format_number(v); });
}

std::size_t write_vec(const std::vector<double>& vector, std::ostream& out,
                      std::size_t companion_vertex_count) {
  if (vector.size() != companion_vertex_count)
    throw ValidationError("vector length " + std::to_string(vector.size()) +
                          " does not match companion network vertex count " +
                          std::to_string(companion_vertex_count));
  return write_vec(vector, out);
}

namespace {

template <typename Parse>
auto read_values(std::string_view text, Parse parse) {
  LineScanner scanner{split_lines(text)};
  std::string_view line;
  std::size_t line_no = 0;
  if (!scanner.advance(line, line_no))
    throw FormatError("missing *Vertices header");
  auto tokens = tokenize(line);
  if (tokens.empty() || !iequals(tokens[0], "*Vertices"))
    throw FormatError("missing *Vertices header");
  if (tokens.size() != 2)
    throw FormatError("line " + std::to_string(line_no) +
                      ": *Vertices takes exactly one count");
  const std::uint64_t n = parse_uint(tokens[1], line_no, "vertex count");
  std::vector<decltype(parse(std::string_view{}, std::size_t{}))> values;
  values.reserve(std::min<std::uint64_t>(n, 1'000'000));
  while (scanner.advance(line, line_no)) {
    if (values.size() == n)
      throw FormatError("line " + std::to_string(line_no) +
                        ": more values than declared");
    values.push_back(parse(trim(line), line_no));
  }
  if (values.size() != n)
    throw FormatError("expected " + std::to_string(n) + " values, found " +
                      std::to_string(values.size()));
  return values;
}

}  // namespace

std::vector<std::int32_t> read_clu(std::string_view text) {
  return read_values(text, [](std::string_view token, std::size_t line_no) {
    std::int32_t value = 0;
    auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
      throw FormatError("line " + std::to_string(line_no) +
                        ": invalid partition value '" + std::string(token) +
                        "'");
    return value;
  });
}

std::vector<double> read_vec(std::string_view text) {
  return read_values(text, [](std::string_view token, std::size_t line_no) {
    return parse_weight(token, line_no);
  });
}

PajekDocument to_pajek(const BipartiteNetwork& bn) {
  PajekDocument doc;
  doc.kind = NetKind::TwoMode;
  doc.two_mode_row_count = static_cast<std::uint32_t>(bn.row_count());
  doc.labels.reserve(bn.row_count() + bn.col_count());
  doc.labels.insert(doc.labels.end(), bn.row_labels.begin(),
                    bn.row_labels.end());
  doc.labels.insert(doc.labels.end(), bn.col_labels.begin(),
                    bn.col_labels.end());
  doc.edges.reserve(bn.total_multiplicity);
  const std::uint32_t nr = doc.two_mode_row_count;
  for (std::uint32_t r = 0; r < bn.rows.size(); ++r) {
    for (const auto& [col, mult] : bn.rows[r]) {
      for (std::uint32_t k = 0; k < mult; ++k)
        doc.edges.push_back({r + 1, nr + col + 1, 1.0});
    }
  }
  return doc;
}

PajekDocument to_pajek(const OneModeNetwork& net) {
  PajekDocument doc;
  doc.kind = NetKind::OneMode;
  doc.labels = net.labels;
  doc.edges.reserve(net.edges.size());
  for (const auto& edge : net.edges)
    doc.edges.push_back(
        {edge.u + 1, edge.v + 1, static_cast<double>(edge.weight)});
  return doc;
}

}  // namespace wos2net
