#pragma once

#include <optional>
#include <string>
#include <vector>

namespace idg {

/// Vertex-colored digraph with labeled edges.
struct ColoredGraph {
  std::vector<std::string> color;
  struct Edge {
    int label;
    int from;
    int to;
    auto operator<=>(const Edge&) const = default;
  };
  std::vector<Edge> edges;

  int add_vertex(std::string c) {
    color.push_back(std::move(c));
    return static_cast<int>(color.size()) - 1;
  }
  void add_edge(int label, int from, int to) { edges.push_back({label, from, to}); }
  std::size_t size() const { return color.size(); }
};

/// Finds a bijection m with a[v] ~ b[m[v]] preserving colors and labeled
/// edges. Uses colour refinement with individualization; every candidate is
/// verified before it is returned.
std::optional<std::vector<int>> find_isomorphism(const ColoredGraph& a, const ColoredGraph& b);

}  // namespace idg
