"""Web-of-Science exports to relational tables and Pajek networks."""

from wos2net._core import (  # noqa: F401
    AddressEntry,
    AddressRow,
    AuthorRow,
    BipartiteNetwork,
    CitationRow,
    Corpus,
    DocumentRow,
    FormatError,
    IoError,
    OneModeNetwork,
    ResourceCapError,
    TableSet,
    ValidationError,
    WosRecord,
    __version__,
    build_bipartite,
    build_tables,
    clu_string,
    component_census,
    export_csv,
    extract_component,
    extract_country,
    extract_institution,
    fold_case,
    import_pairs,
    occurrence_vector,
    one_mode_net,
    parse_export,
    parse_export_file,
    project_columns,
    project_rows,
    read_net,
    split_addresses,
    two_mode_net,
    vec_string,
    weak_components,
    weighted_degree,
)
