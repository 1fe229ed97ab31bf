#include "idg/iso.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace idg {
namespace {

struct Adj {
  // (label, direction, neighbour) per vertex
  std::vector<std::vector<std::tuple<int, int, int>>> nbrs;
  std::set<ColoredGraph::Edge> edge_set;
};

Adj adjacency(const ColoredGraph& g) {
  Adj a;
  a.nbrs.resize(g.size());
  for (const auto& e : g.edges) {
    a.nbrs[e.from].emplace_back(e.label, 0, e.to);
    a.nbrs[e.to].emplace_back(e.label, 1, e.from);
    a.edge_set.insert(e);
  }
  return a;
}

using Colors = std::vector<int>;

int count_classes(const Colors& c) { return static_cast<int>(std::set<int>(c.begin(), c.end()).size()); }

// Refines both colourings jointly until the partition is stable.
void refine(const Adj& aa, const Adj& ab, Colors& ca, Colors& cb) {
  int classes = count_classes(ca) + count_classes(cb);
  for (;;) {
    std::map<std::vector<int>, int> ids;
    auto sig = [&](const Adj& adj, const Colors& c, int v) {
      std::vector<int> s{c[v]};
      std::vector<std::tuple<int, int, int>> ns;
      for (auto [l, d, w] : adj.nbrs[v]) ns.emplace_back(l, d, c[w]);
      std::sort(ns.begin(), ns.end());
      for (auto [l, d, cw] : ns) {
        s.push_back(l);
        s.push_back(d);
        s.push_back(cw);
      }
      return s;
    };
    std::vector<std::vector<int>> sa(ca.size()), sb(cb.size());
    for (std::size_t v = 0; v < ca.size(); ++v) ids.emplace(sa[v] = sig(aa, ca, static_cast<int>(v)), 0);
    for (std::size_t v = 0; v < cb.size(); ++v) ids.emplace(sb[v] = sig(ab, cb, static_cast<int>(v)), 0);
    int next = 0;
    for (auto& [_, id] : ids) id = next++;
    for (std::size_t v = 0; v < ca.size(); ++v) ca[v] = ids.at(sa[v]);
    for (std::size_t v = 0; v < cb.size(); ++v) cb[v] = ids.at(sb[v]);
    const int now = count_classes(ca) + count_classes(cb);
    if (now == classes) return;
    classes = now;
  }
}

bool same_histogram(const Colors& ca, const Colors& cb) {
  std::map<int, int> h;
  for (int c : ca) ++h[c];
  for (int c : cb) --h[c];
  for (auto [_, n] : h)
    if (n != 0) return false;
  return true;
}

bool verify(const ColoredGraph& a, const ColoredGraph& b, const Adj& ab, const std::vector<int>& m) {
  for (std::size_t v = 0; v < a.size(); ++v)
    if (a.color[v] != b.color[m[v]]) return false;
  if (a.edges.size() != b.edges.size()) return false;
  std::set<ColoredGraph::Edge> mapped;
  for (const auto& e : a.edges) mapped.insert({e.label, m[e.from], m[e.to]});
  return mapped == ab.edge_set;
}

struct Search {
  const ColoredGraph& a;
  const ColoredGraph& b;
  Adj aa, ab;

  std::optional<std::vector<int>> run(Colors ca, Colors cb) {
    refine(aa, ab, ca, cb);
    if (!same_histogram(ca, cb)) return std::nullopt;
    // Smallest non-singleton class, first vertex of a in it.
    std::map<int, int> size;
    for (int c : ca) ++size[c];
    int pick = -1, best = 0;
    for (auto [c, n] : size)
      if (n > 1 && (pick < 0 || n < best)) {
        pick = c;
        best = n;
      }
    if (pick < 0) {
      std::map<int, int> where;
      for (std::size_t v = 0; v < cb.size(); ++v) where[cb[v]] = static_cast<int>(v);
      std::vector<int> m(ca.size());
      for (std::size_t v = 0; v < ca.size(); ++v) m[v] = where.at(ca[v]);
      if (verify(a, b, ab, m)) return m;
      return std::nullopt;
    }
    const int v = static_cast<int>(std::find(ca.begin(), ca.end(), pick) - ca.begin());
    const int fresh = *std::max_element(ca.begin(), ca.end()) + 1;
    for (std::size_t u = 0; u < cb.size(); ++u) {
      if (cb[u] != pick) continue;
      Colors na = ca, nb = cb;
      na[v] = fresh;
      nb[u] = fresh;
      if (auto m = run(std::move(na), std::move(nb))) return m;
    }
    return std::nullopt;
  }
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const ColoredGraph& a, const ColoredGraph& b) {
  if (a.size() != b.size() || a.edges.size() != b.edges.size()) return std::nullopt;
  std::map<std::string, int> base;
  for (const auto& c : a.color) base.emplace(c, 0);
  for (const auto& c : b.color) base.emplace(c, 0);
  int next = 0;
  for (auto& [_, id] : base) id = next++;
  Colors ca, cb;
  for (const auto& c : a.color) ca.push_back(base.at(c));
  for (const auto& c : b.color) cb.push_back(base.at(c));
  Search s{a, b, adjacency(a), adjacency(b)};
  return s.run(std::move(ca), std::move(cb));
}

}  // namespace idg
