#include "boem/adjacency.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace boem {

AdjacencyGraph load_adjacency(
    const std::vector<std::pair<std::string, std::string>>& edge_records,
    const std::vector<std::string>& area_ids) {
  AdjacencyGraph g;
  g.n_areas = area_ids.size();
  g.area_ids = area_ids;
  g.neighbor_lists.assign(g.n_areas, {});

  std::unordered_map<std::string, int> index;
  index.reserve(area_ids.size());
  for (std::size_t i = 0; i < area_ids.size(); ++i) {
    auto [it, inserted] = index.emplace(area_ids[i], static_cast<int>(i));
    if (!inserted) {
      throw std::invalid_argument("duplicate area id: " + area_ids[i]);
    }
  }

  std::set<std::pair<int, int>> seen;
  for (const auto& [a, b] : edge_records) {
    auto ia = index.find(a);
    if (ia == index.end()) {
      throw std::invalid_argument("adjacency references unknown id: " + a +
                                  " (edge " + a + "," + b + ")");
    }
    auto ib = index.find(b);
    if (ib == index.end()) {
      throw std::invalid_argument("adjacency references unknown id: " + b +
                                  " (edge " + a + "," + b + ")");
    }
    if (ia->second == ib->second) {
      throw std::invalid_argument("self loop rejected: " + a + "," + b);
    }
    int lo = std::min(ia->second, ib->second);
    int hi = std::max(ia->second, ib->second);
    if (seen.insert({lo, hi}).second) {
      g.edges.emplace_back(lo, hi);
      g.neighbor_lists[lo].push_back(hi);
      g.neighbor_lists[hi].push_back(lo);
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  for (auto& nl : g.neighbor_lists) std::sort(nl.begin(), nl.end());
  return g;
}

double icar_quadform(const AdjacencyGraph& graph, std::span<const double> u) {
  if (u.size() != graph.n_areas) {
    throw std::invalid_argument("icar_quadform: vector length " +
                                std::to_string(u.size()) + " != n_areas " +
                                std::to_string(graph.n_areas));
  }
  double q = 0.0;
  for (const auto& [i, j] : graph.edges) {
    const double d = u[i] - u[j];
    q += d * d;
  }
  return q;
}

double icar_logdensity_unnorm(const AdjacencyGraph& graph,
                              std::span<const double> u, double tau) {
  if (!(tau > 0.0)) {
    throw std::invalid_argument("icar_logdensity_unnorm: tau must be > 0");
  }
  return -0.5 * tau * icar_quadform(graph, u);
}

ComponentInfo connected_components(const AdjacencyGraph& graph) {
  ComponentInfo info;
  info.labels.assign(graph.n_areas, -1);
  std::vector<int> stack;
  for (std::size_t start = 0; start < graph.n_areas; ++start) {
    if (info.labels[start] >= 0) continue;
    const int label = info.n_components++;
    int size = 0;
    stack.push_back(static_cast<int>(start));
    info.labels[start] = label;
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      ++size;
      for (int j : graph.neighbor_lists[i]) {
        if (info.labels[j] < 0) {
          info.labels[j] = label;
          stack.push_back(j);
        }
      }
    }
    info.sizes.push_back(size);
  }
  return info;
}

}  // namespace boem
