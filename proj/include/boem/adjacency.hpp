#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace boem {

// County adjacency structure backing the ICAR prior. The implied W is the
// 0/1 adjacency matrix and D the diagonal degree matrix; neither is ever
// materialised -- all quadratic forms run over the edge list.
// Immutable after construction, safe to share across chains.
struct AdjacencyGraph {
  std::size_t n_areas = 0;
  std::vector<std::string> area_ids;
  std::vector<std::vector<int>> neighbor_lists;  // sorted, symmetric, no self loops
  std::vector<std::pair<int, int>> edges;        // canonicalised a < b

  std::size_t edge_count() const { return edges.size(); }
  int degree(int i) const { return static_cast<int>(neighbor_lists[i].size()); }
  bool is_isolated(int i) const { return neighbor_lists[i].empty(); }
};

struct ComponentInfo {
  std::vector<int> labels;  // per-area component label, 0-based
  int n_components = 0;
  std::vector<int> sizes;  // per-label area count

  // Rank of D - W: sum of (size - 1) over non-singleton components.
  int icar_rank() const {
    int r = 0;
    for (int s : sizes) {
      if (s >= 2) r += s - 1;
    }
    return r;
  }
  int n_nonsingleton() const {
    int c = 0;
    for (int s : sizes) {
      if (s >= 2) ++c;
    }
    return c;
  }
};

// Builds the graph from undirected edge records over the given area order.
// Duplicate records (either orientation) collapse to one edge. Throws on
// self loops and on ids missing from `area_ids`.
AdjacencyGraph load_adjacency(
    const std::vector<std::pair<std::string, std::string>>& edge_records,
    const std::vector<std::string>& area_ids);

// u' (D - W) u = sum over edges of (u_i - u_j)^2.
double icar_quadform(const AdjacencyGraph& graph, std::span<const double> u);

// -(tau/2) * icar_quadform(graph, u); improper, no normalising constant.
double icar_logdensity_unnorm(const AdjacencyGraph& graph,
                              std::span<const double> u, double tau);

ComponentInfo connected_components(const AdjacencyGraph& graph);

}  // namespace boem
