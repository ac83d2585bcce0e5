#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace wos2net {

// Document rows x attribute columns with integer multiplicities, stored
// sparsely per row. Attribute count is bounded only by memory.
struct BipartiteNetwork {
  std::vector<std::string> row_labels;  // first-encounter order, distinct
  std::vector<std::string> col_labels;
  // per row: (col index, multiplicity), sorted by col index
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> rows;
  std::uint64_t total_multiplicity = 0;  // equals the number of input pairs

  std::size_t row_count() const { return row_labels.size(); }
  std::size_t col_count() const { return col_labels.size(); }
  std::uint32_t multiplicity(std::uint32_t row, std::uint32_t col) const;
  BipartiteNetwork transpose() const;
};

// Labels deduplicated in first-encounter order; duplicates accumulate
// multiplicity. An empty pair list yields an empty network.
BipartiteNetwork build_bipartite(
    const std::vector<std::pair<std::string, std::string>>& pairs);

// Weighted undirected simple graph: edges stored once with u < v, weights
// are positive integers, no self-loops.
struct OneModeNetwork {
  struct Edge {
    std::uint32_t u = 0;
    std::uint32_t v = 0;
    std::int64_t weight = 0;

    bool operator==(const Edge&) const = default;
  };

  std::vector<std::string> labels;
  std::vector<Edge> edges;  // sorted by (u, v)

  std::size_t node_count() const { return labels.size(); }
  std::size_t edge_count() const { return edges.size(); }
};

struct ProjectionOptions {
  // Refuse projections whose estimated accumulation count exceeds this.
  std::uint64_t max_pairs = 100'000'000;
};

// Columns projection: weight(a,b) = sum over documents of m[d][a]*m[d][b]
// for a != b — the off-diagonal of AtA, what Pajek produces with multiple
// lines ON followed by sum-values. Self-co-occurrence is excluded; node
// occurrence counts live in occurrence_vector. Accumulation is sparse per
// document (cost sum of k_d^2, never |A|^2).
OneModeNetwork project_columns(const BipartiteNetwork& bn,
                               const ProjectionOptions& options = {});

// Row-side coupling (AAt), roles of rows and columns swapped.
OneModeNetwork project_rows(const BipartiteNetwork& bn,
                            const ProjectionOptions& options = {});

enum class MatrixAxis { Rows, Columns };

// Row (or column) sums of the multiplicity matrix.
std::vector<double> occurrence_vector(const BipartiteNetwork& bn,
                                      MatrixAxis axis);

// Per node, the sum of incident edge weights; isolates get 0.
std::vector<double> weighted_degree(const OneModeNetwork& net);

// Connected components; ids dense 0..k-1 in decreasing size order, ties
// broken by smallest member index.
std::vector<std::int32_t> weak_components(const OneModeNetwork& net);

// Induced subgraph on nodes carrying the given component id; labels and
// weights preserved.
OneModeNetwork extract_component(const OneModeNetwork& net,
                                 const std::vector<std::int32_t>& partition,
                                 std::int32_t component_id);

// Histogram of component sizes, descending by size.
std::vector<std::pair<std::size_t, std::size_t>> component_census(
    const std::vector<std::int32_t>& partition);

// Edge list as `u_label,v_label,weight` with RFC-4180 quoting.
void export_edges_csv(const OneModeNetwork& net, std::ostream& out);

}  // namespace wos2net
