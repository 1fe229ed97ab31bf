#include "idg/wellformed.hpp"

#include <algorithm>
#include <map>

#include "idg/cograph.hpp"
#include "idg/correspondence.hpp"
#include "idg/validate.hpp"

namespace idg {
namespace {

std::pair<Id, Id> ordered(const Id& a, const Id& b) { return a < b ? std::pair{a, b} : std::pair{b, a}; }

// Field of a port and the type graph it lives in.
struct FieldRef {
  const TypeGraph* g;
  Id field;
};

FieldRef field_of(const TypeGraph& type, const TermGraph& t, const Correspondence& c, const Id& port) {
  auto tg = lookup(c, t, port);
  if (!tg) throw UsageError("port " + port + " has no corresponding field");
  return {tg->internal ? &t.internal : &type, tg->id};
}

// Indexed form used by the search.
struct Indexed {
  std::size_t n = 0;
  AdjacencyMatrix f;
  std::vector<std::vector<std::size_t>> f_adj, w_adj;
  AdjacencyMatrix w;
};

Indexed index(const FWGraph& g) {
  Indexed ix;
  ix.n = g.ports.size();
  ix.f = AdjacencyMatrix(ix.n);
  ix.w = AdjacencyMatrix(ix.n);
  ix.f_adj.resize(ix.n);
  ix.w_adj.resize(ix.n);
  auto pos = [&](const Id& p) {
    return static_cast<std::size_t>(std::lower_bound(g.ports.begin(), g.ports.end(), p) - g.ports.begin());
  };
  for (const auto& [a, b] : g.f) {
    auto i = pos(a), j = pos(b);
    ix.f.set(i, j);
    ix.f_adj[i].push_back(j);
    ix.f_adj[j].push_back(i);
  }
  for (const auto& [a, b] : g.w) {
    auto i = pos(a), j = pos(b);
    ix.w.set(i, j);
    ix.w_adj[i].push_back(j);
    ix.w_adj[j].push_back(i);
  }
  for (auto& v : ix.f_adj) std::sort(v.begin(), v.end());
  for (auto& v : ix.w_adj) std::sort(v.begin(), v.end());
  return ix;
}

// DFS for chordless cycles whose smallest vertex is s and whose first edge
// is an F edge. Path edge j (p[j-1] -> p[j]) is F for odd j, W for even j.
struct Search {
  const Indexed& ix;
  std::size_t s;
  std::size_t cap;
  std::size_t steps = 0;
  bool limit_hit = false;
  std::vector<std::size_t> path;
  std::vector<char> on_path;
  std::vector<std::vector<std::size_t>> found;

  Search(const Indexed& g, std::size_t start, std::size_t step_cap)
      : ix(g), s(start), cap(step_cap), on_path(g.n, 0) {}

  void run() {
    path = {s};
    on_path[s] = 1;
    extend();
  }

  void extend() {
    if (limit_hit) return;
    const std::size_t i = path.size();  // index of the vertex being added
    const bool use_f = i % 2 == 1;
    const auto& nbrs = use_f ? ix.f_adj[path.back()] : ix.w_adj[path.back()];
    for (std::size_t v : nbrs) {
      if (v <= s || on_path[v]) continue;
      if (++steps > cap) {
        limit_hit = true;
        return;
      }
      bool chord = false;
      for (std::size_t j = 1; j + 2 <= i && !chord; ++j)
        if (ix.f(v, path[j])) chord = true;
      if (chord) continue;
      const bool closes = i % 2 == 1 && ix.w(v, s);
      path.push_back(v);
      on_path[v] = 1;
      if (closes) found.push_back(path);
      // Once v is F-adjacent to the start, any longer cycle has a chord.
      if (!(i >= 2 && ix.f(v, s))) extend();
      on_path[v] = 0;
      path.pop_back();
      if (limit_hit) return;
    }
  }
};

CycleSearch collect(const FWGraph& g, std::vector<Search>& runs) {
  CycleSearch out;
  for (auto& r : runs) {
    out.limit_hit = out.limit_hit || r.limit_hit;
    for (const auto& cyc : r.found) {
      std::vector<Id> ids;
      for (auto v : cyc) ids.push_back(g.ports[v]);
      out.cycles.push_back(std::move(ids));
    }
  }
  std::sort(out.cycles.begin(), out.cycles.end());
  out.cycles.erase(std::unique(out.cycles.begin(), out.cycles.end()), out.cycles.end());
  return out;
}

}  // namespace

FWGraph build_fw(const TypeGraph& type, const TermGraph& t, const Correspondence& c) {
  FWGraph g;
  for (const auto& [p, _] : t.ports) g.ports.push_back(p);

  for (const auto& [a, b] : t.res_wiring)
    if (a != b) g.w.insert(ordered(a, b));
  for (const auto& [a, b] : t.ctor_wiring)
    if (a != b) g.w.insert(ordered(a, b));

  const DescentForest forest = descent_forest(t);
  std::map<Id, std::vector<Id>> chains;
  for (const auto& p : g.ports) {
    auto ch = forest.chain(p);
    std::reverse(ch.begin(), ch.end());  // root first
    chains.emplace(p, std::move(ch));
  }
  auto let_owner = [&](const Id& p) -> std::optional<Id> {
    auto o = parent_of(t.attachment, p);
    if (o && t.lets.count(*o)) return o;
    return std::nullopt;
  };

  for (std::size_t i = 0; i < g.ports.size(); ++i) {
    const Id& p1 = g.ports[i];
    const auto d1 = let_owner(p1);
    for (std::size_t j = i + 1; j < g.ports.size(); ++j) {
      const Id& p2 = g.ports[j];
      const auto d2 = let_owner(p2);
      if (d1 || d2) {
        if (d1 && d2 && *d1 == *d2) g.f.insert({p1, p2});
        continue;
      }
      const auto& c1 = chains.at(p1);
      const auto& c2 = chains.at(p2);
      if (c1.front() != c2.front()) continue;
      std::size_t k = 0;
      while (k + 1 < c1.size() && k + 1 < c2.size() && c1[k + 1] == c2[k + 1]) ++k;
      const Id& anc = c1[k];
      const bool node = t.nodes.count(anc) > 0;
      if (!node && !t.boxes.count(anc)) continue;  // common ancestor is a port or let-binding
      const Id& q1 = c1[k + 1];
      const Id& q2 = c2[k + 1];
      auto f1 = field_of(type, t, c, q1);
      auto f2 = field_of(type, t, c, q2);
      const bool related = f1.g == f2.g && f1.g->connected(f1.field, f2.field);
      if (related == node) g.f.insert({p1, p2});
    }
  }
  return g;
}

CycleSearch find_chordless_cycles_serial(const FWGraph& g, std::size_t step_cap) {
  const Indexed ix = index(g);
  std::vector<Search> runs;
  runs.reserve(ix.n);
  for (std::size_t s = 0; s < ix.n; ++s) {
    runs.emplace_back(ix, s, step_cap);
    runs.back().run();
  }
  return collect(g, runs);
}

CycleSearch find_chordless_cycles(const FWGraph& g, std::size_t step_cap) {
  const Indexed ix = index(g);
  std::vector<Search> runs;
  runs.reserve(ix.n);
  for (std::size_t s = 0; s < ix.n; ++s) runs.emplace_back(ix, s, step_cap);
  const long n = static_cast<long>(ix.n);
#pragma omp parallel for schedule(dynamic)
  for (long s = 0; s < n; ++s) runs[static_cast<std::size_t>(s)].run();
  return collect(g, runs);
}

Diagnostics check_well_formed(const TypeGraph& type, const TermGraph& t, const Correspondence& c,
                              std::size_t step_cap) {
  Diagnostics out;
  const FWGraph g = build_fw(type, t, c);
  const CycleSearch found = find_chordless_cycles(g, step_cap);
  for (const auto& cyc : found.cycles) {
    Diagnostic d{rule::kIllFormedCycle, {}, {}};
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      d.components.push_back({Namespace::port, cyc[k]});
      d.message += cyc[k];
      d.message += k % 2 == 0 ? " -F- " : " -W- ";
    }
    d.message += cyc.front();
    out.push_back(std::move(d));
  }
  if (found.limit_hit)
    out.push_back({rule::kResourceLimit, {}, "cycle search exceeded " + std::to_string(step_cap) + " steps"});
  sort_diagnostics(out);
  return out;
}

}  // namespace idg
