#include "idg/cograph.hpp"

#include <algorithm>

namespace idg {
namespace {

// An induced subgraph on 4 vertices is P4 iff it has 3 edges and degrees {1,1,2,2}.
std::optional<P4> as_p4(const AdjacencyMatrix& g, const P4& q) {
  std::array<int, 4> deg{};
  int edges = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (g(q[i], q[j])) {
        ++deg[i];
        ++deg[j];
        ++edges;
      }
  if (edges != 3) return std::nullopt;
  for (int d : deg)
    if (d == 0 || d == 3) return std::nullopt;
  // Walk the path from the smaller endpoint.
  P4 path{};
  int start = -1;
  for (int i = 0; i < 4; ++i)
    if (deg[i] == 1 && (start < 0 || q[i] < q[start])) start = i;
  std::array<bool, 4> used{};
  int cur = start;
  for (int k = 0; k < 4; ++k) {
    path[k] = q[cur];
    used[cur] = true;
    for (int j = 0; j < 4; ++j)
      if (!used[j] && g(q[cur], q[j])) {
        cur = j;
        break;
      }
  }
  return path;
}

std::optional<P4> search_from(const AdjacencyMatrix& g, std::size_t a) {
  const std::size_t n = g.size();
  for (std::size_t b = a + 1; b < n; ++b)
    for (std::size_t c = b + 1; c < n; ++c)
      for (std::size_t d = c + 1; d < n; ++d)
        if (auto p = as_p4(g, {a, b, c, d})) return p;
  return std::nullopt;
}

}  // namespace

std::optional<P4> find_induced_p4_serial(const AdjacencyMatrix& g) {
  for (std::size_t a = 0; a < g.size(); ++a)
    if (auto p = search_from(g, a)) return p;
  return std::nullopt;
}

std::optional<P4> find_induced_p4(const AdjacencyMatrix& g) {
  const long n = static_cast<long>(g.size());
  if (n < 4) return std::nullopt;
  std::vector<std::optional<P4>> per_start(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic)
  for (long a = 0; a < n - 3; ++a) per_start[static_cast<std::size_t>(a)] = search_from(g, static_cast<std::size_t>(a));
  for (const auto& p : per_start)
    if (p) return p;
  return std::nullopt;
}

}  // namespace idg
