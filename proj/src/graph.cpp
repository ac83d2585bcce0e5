#include "wos2net/graph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <ostream>
#include <unordered_map>

#include "wos2net/csv.hpp"
#include "wos2net/errors.hpp"

namespace wos2net {

std::uint32_t BipartiteNetwork::multiplicity(std::uint32_t row,
                                             std::uint32_t col) const {
  if (row >= rows.size()) return 0;
  const auto& entries = rows[row];
  auto it = std::lower_bound(
      entries.begin(), entries.end(), col,
      [](const auto& entry, std::uint32_t c) { return entry.first < c; });
  if (it != entries.end() && it->first == col) return it->second;
  return 0;
}

BipartiteNetwork BipartiteNetwork::transpose() const {
  BipartiteNetwork t;
  t.row_labels = col_labels;
  t.col_labels = row_labels;
  t.total_multiplicity = total_multiplicity;
  t.rows.resize(col_labels.size());
  std::vector<std::size_t> degree(col_labels.size(), 0);
  for (const auto& row : rows)
    for (const auto& [col, mult] : row) ++degree[col];
  for (std::size_t c = 0; c < t.rows.size(); ++c) t.rows[c].reserve(degree[c]);
  for (std::uint32_t r = 0; r < rows.size(); ++r)
    for (const auto& [col, mult] : rows[r]) t.rows[col].emplace_back(r, mult);
  // source rows were visited in ascending order, so each t.rows[c] is sorted
  return t;
}

BipartiteNetwork build_bipartite(
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  BipartiteNetwork bn;
  std::unordered_map<std::string, std::uint32_t> row_index, col_index;
  row_index.reserve(pairs.size());
  col_index.reserve(pairs.size());
  std::vector<std::pair<std::uint32_t, std::uint32_t>> entries;
  entries.reserve(pairs.size());

  for (const auto& [row_label, col_label] : pairs) {
    auto [rit, rnew] =
        row_index.emplace(row_label, static_cast<std::uint32_t>(
                                         bn.row_labels.size()));
    if (rnew) bn.row_labels.push_back(row_label);
    auto [cit, cnew] =
        col_index.emplace(col_label, static_cast<std::uint32_t>(
                                         bn.col_labels.size()));
    if (cnew) bn.col_labels.push_back(col_label);
    entries.emplace_back(rit->second, cit->second);
  }
  bn.total_multiplicity = entries.size();

  std::sort(entries.begin(), entries.end());
  bn.rows.resize(bn.row_labels.size());
  for (std::size_t i = 0; i < entries.size();) {
    std::size_t j = i;
    while (j < entries.size() && entries[j] == entries[i]) ++j;
    bn.rows[entries[i].first].emplace_back(
        entries[i].second, static_cast<std::uint32_t>(j - i));
    i = j;
  }
  return bn;
}

namespace {

OneModeNetwork project(const BipartiteNetwork& bn,
                       const ProjectionOptions& options) {
  // cost estimate and cap check before touching the accumulator
  std::uint64_t estimate = 0;
  std::size_t dominant = 0;
  std::size_t dominant_k = 0;
  for (std::size_t r = 0; r < bn.rows.size(); ++r) {
    const std::uint64_t k = bn.rows[r].size();
    estimate += k * (k - 1) / 2;
    if (k > dominant_k) {
      dominant_k = k;
      dominant = r;
    }
  }
  if (estimate > options.max_pairs) {
    throw ResourceCapError(
        "projection needs ~" + std::to_string(estimate) +
        " pair accumulations, above the cap of " +
        std::to_string(options.max_pairs) + "; dominant document is '" +
        bn.row_labels[dominant] + "' with " + std::to_string(dominant_k) +
        " attributes (raise --max-pairs to proceed)");
  }

  std::unordered_map<std::uint64_t, std::int64_t> weights;
  weights.reserve(std::min<std::uint64_t>(estimate, 1u << 22));
  for (const auto& row : bn.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      const auto [a, ma] = row[i];
      for (std::size_t j = i + 1; j < row.size(); ++j) {
        const auto [b, mb] = row[j];
        // a < b because row entries are sorted by column
        weights[(static_cast<std::uint64_t>(a) << 32) | b] +=
            static_cast<std::int64_t>(ma) * mb;
      }
    }
  }

  OneModeNetwork net;
  net.labels = bn.col_labels;
  net.edges.reserve(weights.size());
  for (const auto& [key, weight] : weights)
    net.edges.push_back({static_cast<std::uint32_t>(key >> 32),
                         static_cast<std::uint32_t>(key & 0xFFFFFFFFu),
                         weight});
  std::sort(net.edges.begin(), net.edges.end(),
            [](const auto& lhs, const auto& rhs) {
              return std::pair(lhs.u, lhs.v) < std::pair(rhs.u, rhs.v);
            });
  return net;
}

}  // namespace

OneModeNetwork project_columns(const BipartiteNetwork& bn,
                               const ProjectionOptions& options) {
  return project(bn, options);
}

OneModeNetwork project_rows(const BipartiteNetwork& bn,
                            const ProjectionOptions& options) {
  return project(bn.transpose(), options);
}

std::vector<double> occurrence_vector(const BipartiteNetwork& bn,
                                      MatrixAxis axis) {
  if (axis == MatrixAxis::Rows) {
    std::vector<double> sums(bn.row_count(), 0.0);
    for (std::size_t r = 0; r < bn.rows.size(); ++r)
      for (const auto& [col, mult] : bn.rows[r]) sums[r] += mult;
    return sums;
  }
  std::vector<double> sums(bn.col_count(), 0.0);
  for (const auto& row : bn.rows)
    for (const auto& [col, mult] : row) sums[col] += mult;
  return sums;
}

std::vector<double> weighted_degree(const OneModeNetwork& net) {
  std::vector<double> degree(net.node_count(), 0.0);
  for (const auto& edge : net.edges) {
    degree[edge.u] += static_cast<double>(edge.weight);
    degree[edge.v] += static_cast<double>(edge.weight);
  }
  return degree;
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  }

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::size_t> size_;
};

}  // namespace

std::vector<std::int32_t> weak_components(const OneModeNetwork& net) {
  const std::size_t n = net.node_count();
  UnionFind uf(n);
  for (const auto& edge : net.edges) uf.unite(edge.u, edge.v);

  // group members per root; members come out in increasing node order
  std::unordered_map<std::uint32_t, std::uint32_t> root_to_comp;
  std::vector<std::size_t> comp_size;
  std::vector<std::uint32_t> comp_first;
  std::vector<std::uint32_t> node_comp(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    std::uint32_t root = uf.find(i);
    auto [it, inserted] =
        root_to_comp.emplace(root, static_cast<std::uint32_t>(comp_size.size()));
    if (inserted) {
      comp_size.push_back(0);
      comp_first.push_back(i);
    }
    node_comp[i] = it->second;
    ++comp_size[it->second];
  }

  // id 0 is the largest component; ties go to the smallest member index
  std::vector<std::uint32_t> order(comp_size.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::uint32_t a, std::uint32_t b) {
              if (comp_size[a] != comp_size[b])
                return comp_size[a] > comp_size[b];
              return comp_first[a] < comp_first[b];
            });
  std::vector<std::int32_t> comp_id(comp_size.size());
  for (std::uint32_t rank = 0; rank < order.size(); ++rank)
    comp_id[order[rank]] = static_cast<std::int32_t>(rank);

  std::vector<std::int32_t> partition(n);
  for (std::uint32_t i = 0; i < n; ++i) partition[i] = comp_id[node_comp[i]];
  return partition;
}

OneModeNetwork extract_component(const OneModeNetwork& net,
                                 const std::vector<std::int32_t>& partition,
                                 std::int32_t component_id) {
  if (partition.size() != net.node_count())
    throw ValidationError("partition length " +
                          std::to_string(partition.size()) +
                          " does not match node count " +
                          std::to_string(net.node_count()));
  OneModeNetwork sub;
  std::vector<std::uint32_t> remap(net.node_count(),
                                   std::numeric_limits<std::uint32_t>::max());
  for (std::size_t i = 0; i < net.node_count(); ++i) {
    if (partition[i] == component_id) {
      remap[i] = static_cast<std::uint32_t>(sub.labels.size());
      sub.labels.push_back(net.labels[i]);
    }
  }
  constexpr auto kAbsent = std::numeric_limits<std::uint32_t>::max();
  for (const auto& edge : net.edges) {
    if (remap[edge.u] != kAbsent && remap[edge.v] != kAbsent)
      sub.edges.push_back({remap[edge.u], remap[edge.v], edge.weight});
  }
  return sub;
}

std::vector<std::pair<std::size_t, std::size_t>> component_census(
    const std::vector<std::int32_t>& partition) {
  std::unordered_map<std::int32_t, std::size_t> sizes;
  for (std::int32_t id : partition) ++sizes[id];
  std::unordered_map<std::size_t, std::size_t> by_size;
  for (const auto& [id, size] : sizes) ++by_size[size];
  std::vector<std::pair<std::size_t, std::size_t>> census(by_size.begin(),
                                                          by_size.end());
  std::sort(census.begin(), census.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  return census;
}

void export_edges_csv(const OneModeNetwork& net, std::ostream& out) {
  write_csv_row(out, {"u_label", "v_label", "weight"});
  for (const auto& edge : net.edges)
    write_csv_row(out, {net.labels[edge.u], net.labels[edge.v],
                        std::to_string(edge.weight)});
}

}  // namespace wos2net
