#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "wos2net/errors.hpp"
#include "wos2net/graph.hpp"
#include "wos2net/ingest.hpp"
#include "wos2net/normalize.hpp"
#include "wos2net/pajek.hpp"
#include "wos2net/tables.hpp"

namespace py = pybind11;
using namespace wos2net;

namespace {

PajekWriteOptions write_options(const std::string& encoding) {
  PajekWriteOptions options;
  if (encoding == "cp1252") {
    options.encoding = OutputEncoding::Cp1252;
  } else if (encoding != "utf8") {
    throw ValidationError("unknown encoding: " + encoding);
  }
  return options;
}

std::vector<py::tuple> warning_tuples(const std::vector<Warning>& warnings) {
  std::vector<py::tuple> out;
  out.reserve(warnings.size());
  for (const auto& w : warnings)
    out.push_back(py::make_tuple(w.file, w.line, w.message));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Web-of-Science exports to relational tables and Pajek networks";

  py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError",
                                          PyExc_ValueError);
  py::register_exception<ResourceCapError>(m, "ResourceCapError",
                                           PyExc_RuntimeError);
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);

  py::class_<WosRecord>(m, "WosRecord")
      .def_readonly("record_index", &WosRecord::record_index)
      .def_readonly("doc_id", &WosRecord::doc_id)
      .def_property_readonly("tags",
                             [](const WosRecord& r) {
                               std::vector<std::string> tags;
                               for (const auto& [tag, values] : r.fields)
                                 tags.push_back(tag);
                               return tags;
                             })
      .def("values", &WosRecord::values, py::arg("tag"))
      .def("joined", &WosRecord::joined, py::arg("tag"))
      .def("has", &WosRecord::has, py::arg("tag"))
      .def("__repr__", [](const WosRecord& r) {
        return "<WosRecord doc_id=" + std::to_string(r.doc_id) + " fields=" +
               std::to_string(r.fields.size()) + ">";
      });

  py::class_<Corpus>(m, "Corpus")
      .def_readonly("records", &Corpus::records)
      .def_readonly("source_files", &Corpus::source_files)
      .def_property_readonly(
          "warnings",
          [](const Corpus& c) { return warning_tuples(c.warnings); })
      .def("__len__", [](const Corpus& c) { return c.records.size(); });

  m.def(
      "parse_export",
      [](const std::string& text, const std::string& source_name) {
        return parse_export(text, {}, source_name);
      },
      py::arg("text"), py::arg("source_name") = "<string>",
      "Parse WoS tagged export text into a Corpus");
  m.def(
      "parse_export_file",
      [](const std::string& path) { return parse_export_file(path); },
      py::arg("path"));

  py::class_<AddressEntry>(m, "AddressEntry")
      .def_readonly("address", &AddressEntry::address)
      .def_readonly("author_scope", &AddressEntry::author_scope);
  m.def("split_addresses", &split_addresses, py::arg("record"));

  // normalize
  m.def("extract_institution", &extract_institution, py::arg("address"));
  m.def("extract_country", &extract_country, py::arg("address"));
  m.def(
      "fold_case",
      [](const std::string& s, const std::string& mode) {
        return fold_case(s, parse_fold_mode(mode));
      },
      py::arg("s"), py::arg("mode"),
      "mode: upper | lower | capitalized | none");

  // tables
  py::class_<DocumentRow>(m, "DocumentRow")
      .def_readonly("doc_id", &DocumentRow::doc_id)
      .def_readonly("source_title", &DocumentRow::source_title)
      .def_readonly("pub_year", &DocumentRow::pub_year)
      .def_readonly("title", &DocumentRow::title);
  py::class_<AuthorRow>(m, "AuthorRow")
      .def_readonly("doc_id", &AuthorRow::doc_id)
      .def_readonly("author_name", &AuthorRow::author_name)
      .def_readonly("position", &AuthorRow::position);
  py::class_<AddressRow>(m, "AddressRow")
      .def_readonly("doc_id", &AddressRow::doc_id)
      .def_readonly("full_address", &AddressRow::full_address)
      .def_readonly("institution", &AddressRow::institution)
      .def_readonly("country", &AddressRow::country);
  py::class_<CitationRow>(m, "CitationRow")
      .def_readonly("doc_id", &CitationRow::doc_id)
      .def_readonly("cited_ref", &CitationRow::cited_ref);
  py::class_<TableSet>(m, "TableSet")
      .def_readonly("documents", &TableSet::documents)
      .def_readonly("authors", &TableSet::authors)
      .def_readonly("addresses", &TableSet::addresses)
      .def_readonly("citations", &TableSet::citations)
      .def_property_readonly(
          "warnings",
          [](const TableSet& t) { return warning_tuples(t.warnings); });
  m.def("build_tables", &build_tables, py::arg("corpus"));
  m.def(
      "export_csv",
      [](const TableSet& tables, const std::string& kind) {
        TableKind table_kind;
        if (kind == "documents") table_kind = TableKind::Documents;
        else if (kind == "authors") table_kind = TableKind::Authors;
        else if (kind == "addresses") table_kind = TableKind::Addresses;
        else if (kind == "citations") table_kind = TableKind::Citations;
        else throw ValidationError("unknown table kind: " + kind);
        std::ostringstream out;
        export_csv(tables, table_kind, out);
        return out.str();
      },
      py::arg("tables"), py::arg("kind"),
      "Render one table as CSV text; kind: documents | authors | addresses "
      "| citations");
  m.def(
      "import_pairs",
      [](const std::string& text, const std::string& sep,
         const std::string& fold, bool strict) {
        PairOptions options;
        options.separator = sep == "tab" ? '\t' : ',';
        options.fold = parse_fold_mode(fold);
        options.strict = strict;
        return import_pairs(text, options).pairs;
      },
      py::arg("text"), py::arg("sep") = "comma", py::arg("fold") = "none",
      py::arg("strict") = true);

  // graph
  py::class_<BipartiteNetwork>(m, "BipartiteNetwork")
      .def_readonly("row_labels", &BipartiteNetwork::row_labels)
      .def_readonly("col_labels", &BipartiteNetwork::col_labels)
      .def_property_readonly("row_count", &BipartiteNetwork::row_count)
      .def_property_readonly("col_count", &BipartiteNetwork::col_count)
      .def_readonly("total_multiplicity",
                    &BipartiteNetwork::total_multiplicity)
      .def("multiplicity", &BipartiteNetwork::multiplicity, py::arg("row"),
           py::arg("col"))
      .def("__repr__", [](const BipartiteNetwork& bn) {
        return "<BipartiteNetwork " + std::to_string(bn.row_count()) + "x" +
               std::to_string(bn.col_count()) + ">";
      });
  py::class_<OneModeNetwork>(m, "OneModeNetwork")
      .def_readonly("labels", &OneModeNetwork::labels)
      .def_property_readonly("node_count", &OneModeNetwork::node_count)
      .def_property_readonly("edge_count", &OneModeNetwork::edge_count)
      .def_property_readonly("edges",
                             [](const OneModeNetwork& net) {
                               std::vector<py::tuple> edges;
                               edges.reserve(net.edges.size());
                               for (const auto& e : net.edges)
                                 edges.push_back(
                                     py::make_tuple(e.u, e.v, e.weight));
                               return edges;
                             })
      .def("__repr__", [](const OneModeNetwork& net) {
        return "<OneModeNetwork nodes=" + std::to_string(net.node_count()) +
               " edges=" + std::to_string(net.edge_count()) + ">";
      });

  m.def("build_bipartite", &build_bipartite, py::arg("pairs"));
  m.def(
      "project_columns",
      [](const BipartiteNetwork& bn, std::uint64_t max_pairs) {
        ProjectionOptions options;
        options.max_pairs = max_pairs;
        return project_columns(bn, options);
      },
      py::arg("bn"), py::arg("max_pairs") = 100'000'000ULL);
  m.def(
      "project_rows",
      [](const BipartiteNetwork& bn, std::uint64_t max_pairs) {
        ProjectionOptions options;
        options.max_pairs = max_pairs;
        return project_rows(bn, options);
      },
      py::arg("bn"), py::arg("max_pairs") = 100'000'000ULL);
  m.def(
      "occurrence_vector",
      [](const BipartiteNetwork& bn, const std::string& axis) {
        if (axis != "rows" && axis != "columns")
          throw ValidationError("axis must be rows or columns");
        return occurrence_vector(
            bn, axis == "rows" ? MatrixAxis::Rows : MatrixAxis::Columns);
      },
      py::arg("bn"), py::arg("axis") = "columns");
  m.def("weighted_degree", &weighted_degree, py::arg("net"));
  m.def("weak_components", &weak_components, py::arg("net"));
  m.def("extract_component", &extract_component, py::arg("net"),
        py::arg("partition"), py::arg("component_id"));
  m.def("component_census", &component_census, py::arg("partition"));

  // pajek
  m.def(
      "two_mode_net",
      [](const BipartiteNetwork& bn, const std::string& encoding) {
        return net_to_string(to_pajek(bn), write_options(encoding));
      },
      py::arg("bn"), py::arg("encoding") = "utf8",
      "Render a bipartite network as a two-mode Pajek .net file");
  m.def(
      "one_mode_net",
      [](const OneModeNetwork& net, const std::string& encoding) {
        return net_to_string(to_pajek(net), write_options(encoding));
      },
      py::arg("net"), py::arg("encoding") = "utf8");
  m.def(
      "read_net",
      [](const std::string& text) {
        const PajekReadResult result = read_net(text);
        std::vector<py::tuple> edges;
        edges.reserve(result.doc.edges.size());
        for (const auto& e : result.doc.edges)
          edges.push_back(py::make_tuple(e.u, e.v, e.weight));
        py::dict doc;
        doc["kind"] =
            result.doc.kind == NetKind::TwoMode ? "two-mode" : "one-mode";
        doc["labels"] = result.doc.labels;
        doc["row_count"] = result.doc.two_mode_row_count;
        doc["edges"] = edges;
        doc["warnings"] = warning_tuples(result.warnings);
        return doc;
      },
      py::arg("text"));
  m.def(
      "clu_string",
      [](const std::vector<std::int32_t>& partition) {
        std::ostringstream out;
        write_clu(partition, out);
        return out.str();
      },
      py::arg("partition"));
  m.def(
      "vec_string",
      [](const std::vector<double>& vector) {
        std::ostringstream out;
        write_vec(vector, out);
        return out.str();
      },
      py::arg("vector"));

  m.attr("__version__") = "0.1.0";
}
