#include "wos2net/ingest.hpp"

#include <fstream>
#include <sstream>

#include "wos2net/errors.hpp"
#include "wos2net/text.hpp"

namespace wos2net {

const std::vector<std::string>* WosRecord::find(std::string_view tag) const {
  for (const auto& [t, vals] : fields)
    if (t == tag) return &vals;
  return nullptr;
}

std::vector<std::string> WosRecord::values(std::string_view tag) const {
  const auto* vals = find(tag);
  return vals ? *vals : std::vector<std::string>{};
}

std::string WosRecord::joined(std::string_view tag) const {
  const auto* vals = find(tag);
  if (!vals) return {};
  std::string out;
  for (const auto& v : *vals) {
    if (!out.empty()) out += ' ';
    out += v;
  }
  return out;
}

namespace {

constexpr std::string_view kUtf8Bom = "\xEF\xBB\xBF";

bool is_tag_char(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}

// A tag line is `XX`, or `XX value` with a space in column 3.
bool is_tag_line(std::string_view line) {
  if (line.size() < 2) return false;
  if (!is_tag_char(line[0]) || !is_tag_char(line[1])) return false;
  return line.size() == 2 || line[2] == ' ';
}

std::string decode_stream(std::string_view bytes, InputEncoding encoding,
                          std::string_view source_name) {
  if (bytes.starts_with("\xFF\xFE") || bytes.starts_with("\xFE\xFF"))
    throw FormatError(std::string(source_name) +
                      ": UTF-16 exports are not supported; re-export as "
                      "plain text (UTF-8 or Latin-1)");
  if (bytes.starts_with(kUtf8Bom)) {
    bytes.remove_prefix(kUtf8Bom.size());
    encoding = InputEncoding::Utf8;
  }
  switch (encoding) {
    case InputEncoding::Utf8:
      return std::string(bytes);
    case InputEncoding::Latin1:
      return latin1_to_utf8(bytes);
    case InputEncoding::Auto:
      return utf8_valid(bytes) ? std::string(bytes) : latin1_to_utf8(bytes);
  }
  return std::string(bytes);
}

}  // namespace

Corpus parse_export(std::string_view bytes, const ParseOptions& options,
                    std::string_view source_name) {
  Corpus corpus;
  corpus.source_files.emplace_back(source_name);
  const std::string text = decode_stream(bytes, options.encoding, source_name);

  WosRecord current;
  bool record_open = false;
  // index into current.fields of the tag continuation lines extend
  std::size_t current_field = 0;
  bool have_current_field = false;
  bool last_content_was_ef = false;
  std::size_t first_nonblank_line = 0;
  std::size_t first_offending_line = 0;
  std::string_view first_offending_text;

  auto warn = [&](std::size_t line_no, std::string message) {
    corpus.warnings.push_back(
        {std::string(source_name), line_no, std::move(message)});
  };
  auto close_field = [&] { have_current_field = false; };
  auto append_value = [&](std::string_view tag, std::string_view value) {
    for (std::size_t i = 0; i < current.fields.size(); ++i) {
      if (current.fields[i].first == tag) {
        // repeated tag within a record merges into the existing entry
        current_field = i;
        have_current_field = true;
        if (!value.empty()) current.fields[i].second.emplace_back(value);
        return;
      }
    }
    current.fields.emplace_back(std::string(tag), std::vector<std::string>{});
    if (!value.empty()) current.fields.back().second.emplace_back(value);
    current_field = current.fields.size() - 1;
    have_current_field = true;
  };

  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    std::string_view line = lines[i];
    // tolerate BOMs introduced by concatenating BOM-carrying exports
    if (line.starts_with(kUtf8Bom)) line.remove_prefix(kUtf8Bom.size());

    if (is_blank(line)) {
      close_field();
      continue;
    }
    if (first_nonblank_line == 0) first_nonblank_line = line_no;

    if (line.starts_with("   ")) {  // continuation: a new value for the tag
      std::string_view value = trim(line.substr(3));
      if (!record_open || !have_current_field) {
        warn(line_no, "continuation line without a preceding tag");
        if (first_offending_line == 0) {
          first_offending_line = line_no;
          first_offending_text = line;
        }
      } else {
        current.fields[current_field].second.emplace_back(value);
      }
      last_content_was_ef = false;
      continue;
    }

    if (!is_tag_line(line)) {
      warn(line_no, "malformed line: '" + std::string(line) + "'");
      if (first_offending_line == 0) {
        first_offending_line = line_no;
        first_offending_text = line;
      }
      last_content_was_ef = false;
      continue;
    }

    const std::string_view tag = line.substr(0, 2);
    const std::string_view value =
        line.size() > 3 ? trim(line.substr(3)) : std::string_view{};
    last_content_was_ef = false;

    if (tag == "ER") {
      if (!record_open) {
        warn(line_no, "ER without any preceding tagged lines");
        continue;
      }
      current.record_index = static_cast<int>(corpus.records.size()) + 1;
      current.doc_id = current.record_index;
      corpus.records.push_back(std::move(current));
      current = WosRecord{};
      record_open = false;
      close_field();
      continue;
    }
    if (tag == "EF") {
      if (record_open) {
        warn(line_no, "EF inside an unterminated record");
      }
      last_content_was_ef = true;
      close_field();
      continue;
    }
    if ((tag == "FN" || tag == "VR") && !record_open) {
      // export header; repeated headers appear when files are concatenated
      close_field();
      continue;
    }

    record_open = true;
    append_value(tag, value);
  }

  if (record_open) {
    warn(lines.size(), "input ended inside a record (missing ER); record "
                       "discarded");
  }
  if (first_nonblank_line != 0 && !last_content_was_ef) {
    warn(lines.size(), "missing EF terminator");
  }

  if (corpus.records.empty() && first_nonblank_line != 0) {
    const std::size_t line_no =
        first_offending_line ? first_offending_line : first_nonblank_line;
    std::ostringstream msg;
    msg << source_name << ": no records parsed; first offending line "
        << line_no;
    if (first_offending_line)
      msg << ": '" << first_offending_text << "'";
    throw FormatError(msg.str());
  }
  return corpus;
}

Corpus parse_export_file(const std::filesystem::path& path,
                         const ParseOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw IoError("cannot open input file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad())
    throw IoError("error reading input file: " + path.string());
  return parse_export(buf.view(), options, path.string());
}

Corpus parse_export_files(const std::vector<std::filesystem::path>& paths,
                          const ParseOptions& options) {
  Corpus merged;
  for (const auto& path : paths) {
    Corpus part = parse_export_file(path, options);
    for (auto& rec : part.records) {
      rec.record_index = static_cast<int>(merged.records.size()) + 1;
      rec.doc_id = rec.record_index;
      merged.records.push_back(std::move(rec));
    }
    merged.source_files.insert(merged.source_files.end(),
                               part.source_files.begin(),
                               part.source_files.end());
    merged.warnings.insert(merged.warnings.end(), part.warnings.begin(),
                           part.warnings.end());
  }
  return merged;
}

std::vector<AddressEntry> split_addresses(const WosRecord& record) {
  std::vector<AddressEntry> entries;
  const auto* values = record.find("C1");
  if (!values) return entries;
  for (const auto& value : *values) {
    AddressEntry entry;
    std::string_view rest = trim(value);
    if (rest.starts_with('[')) {
      std::size_t close = rest.find(']');
      if (close != std::string_view::npos) {
        std::string_view scope = rest.substr(1, close - 1);
        std::size_t start = 0;
        while (start <= scope.size()) {
          std::size_t semi = scope.find(';', start);
          std::string_view name = semi == std::string_view::npos
                                      ? scope.substr(start)
                                      : scope.substr(start, semi - start);
          name = trim(name);
          if (!name.empty()) entry.author_scope.emplace_back(name);
          if (semi == std::string_view::npos) break;
          start = semi + 1;
        }
        rest = trim(rest.substr(close + 1));
      }
    }
    entry.address = std::string(rest);
    entries.push_back(std::move(entry));
  }
  return entries;
}

std::string to_tagged_text(const WosRecord& record) {
  std::string out;
  for (const auto& [tag, values] : record.fields) {
    out += tag;
    if (!values.empty()) {
      out += ' ';
      out += values.front();
    }
    out += '\n';
    for (std::size_t i = 1; i < values.size(); ++i) {
      out += "   ";
      out += values[i];
      out += '\n';
    }
  }
  out += "ER\n";
  return out;
}

std::string to_tagged_text(const Corpus& corpus) {
  std::string out;
  for (const auto& record : corpus.records) {
    out += to_tagged_text(record);
    out += '\n';
  }
  out += "EF\n";
  return out;
}

}  // namespace wos2net
