#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace idg::oracle {

namespace {

bool connected(const AdjacencyMatrix& g, const std::vector<std::size_t>& vs, bool complement,
               std::vector<std::vector<std::size_t>>& parts) {
  std::vector<int> comp(vs.size(), -1);
  int n = 0;
  for (std::size_t a = 0; a < vs.size(); ++a) {
    if (comp[a] >= 0) continue;
    std::vector<std::size_t> stack{a};
    comp[a] = n;
    while (!stack.empty()) {
      const auto x = stack.back();
      stack.pop_back();
      for (std::size_t y = 0; y < vs.size(); ++y)
        if (comp[y] < 0 && x != y && g(vs[x], vs[y]) != complement) {
          comp[y] = n;
          stack.push_back(y);
        }
    }
    ++n;
  }
  parts.assign(n, {});
  for (std::size_t a = 0; a < vs.size(); ++a) parts[comp[a]].push_back(vs[a]);
  return n == 1;
}

bool cograph_on(const AdjacencyMatrix& g, const std::vector<std::size_t>& vs) {
  if (vs.size() <= 1) return true;
  std::vector<std::vector<std::size_t>> parts;
  if (connected(g, vs, false, parts) && connected(g, vs, true, parts)) return false;
  for (const auto& p : parts)
    if (!cograph_on(g, p)) return false;
  return true;
}

struct Flat {
  std::vector<Id> verts;
  std::map<Id, std::string> color;
  std::map<std::string, std::set<std::vector<Id>>> tuples;
};

Flat flatten(const TermGraph& t, const Correspondence* c) {
  Flat f;
  auto vert = [&](const Id& id, std::string color) {
    if (c)
      if (auto it = c->find(id); it != c->end()) color += "=" + it->second;
    f.verts.push_back(id);
    f.color[id] = color;
  };
  for (const auto& b : t.boxes) vert(b, "B");
  for (const auto& n : t.nodes) vert(n, "N");
  for (const auto& d : t.lets) vert(d, "D");
  for (const auto& [p, s] : t.ports) vert(p, "P" + to_string(s));
  for (const auto& i : t.internal.interfaces) vert(i, "I");
  for (const auto& [x, s] : t.internal.fields)
    vert(x, "F" + to_string(s) + (s.is_ctor() ? "" : ":" + t.internal.label_of(x)));

  auto rel = [&](const std::string& name, const Relation& r, bool symmetric = false) {
    for (const auto& [a, b] : r) {
      f.tuples[name].insert({a, b});
      if (symmetric) f.tuples[name].insert({b, a});
    }
  };
  rel("R_R", t.residence);
  rel("R_A", t.attachment);
  rel("R_WR", t.res_wiring);
  rel("R_WC", t.ctor_wiring);
  rel("R_CA", t.ctor_arg);
  rel("R_CU", t.ctor_usage);
  rel("R_DI", t.let_iface);
  rel("T.R_R", t.internal.residence);
  rel("T.R_I", t.internal.ctor_iface);
  rel("T.R_C", t.internal.connectivity, true);
  for (const auto& [d, frag] : t.let_corr)
    for (const auto& [k, v] : frag) f.tuples["R_DC"].insert({d, k, v});
  return f;
}

std::optional<std::map<Id, Id>> search(const Flat& a, const Flat& b) {
  if (a.verts.size() != b.verts.size()) return std::nullopt;
  std::map<std::string, int> count;
  for (const auto& [_, col] : a.color) ++count[col];
  for (const auto& [_, col] : b.color) --count[col];
  for (const auto& [_, n] : count)
    if (n != 0) return std::nullopt;
  for (const auto& [name, ts] : b.tuples) {
    auto it = a.tuples.find(name);
    if (it == a.tuples.end() || it->second.size() != ts.size()) return std::nullopt;
  }
  for (const auto& [name, ts] : a.tuples)
    if (!b.tuples.count(name)) return std::nullopt;

  const std::vector<Id>& order = b.verts;
  std::map<Id, std::size_t> pos;
  for (std::size_t k = 0; k < order.size(); ++k) pos[order[k]] = k;
  // tuples of b, filed under the position that completes them
  std::vector<std::vector<std::pair<std::string, std::vector<Id>>>> due(order.size() + 1);
  for (const auto& [name, ts] : b.tuples)
    for (const auto& tup : ts) {
      std::size_t last = 0;
      bool any = false;
      for (const auto& x : tup)
        if (auto it = pos.find(x); it != pos.end()) {
          last = std::max(last, it->second);
          any = true;
        }
      due[any ? last : order.size()].push_back({name, tup});
    }
  // tuples made only of constants must be present verbatim
  for (const auto& [name, tup] : due[order.size()])
    if (!a.tuples.at(name).count(tup)) return std::nullopt;

  std::map<Id, Id> h;
  std::set<Id> used;
  auto image = [&](const Id& x) {
    auto it = h.find(x);
    return it == h.end() ? x : it->second;
  };
  std::function<bool(std::size_t)> go = [&](std::size_t k) -> bool {
    if (k == order.size()) return true;
    const Id& x = order[k];
    for (const auto& y : a.verts) {
      if (used.count(y) || a.color.at(y) != b.color.at(x)) continue;
      h[x] = y;
      used.insert(y);
      bool ok = true;
      for (const auto& [name, tup] : due[k]) {
        std::vector<Id> m;
        for (const auto& z : tup) m.push_back(image(z));
        if (!a.tuples.at(name).count(m)) {
          ok = false;
          break;
        }
      }
      if (ok && go(k + 1)) return true;
      used.erase(y);
      h.erase(x);
    }
    return false;
  };
  if (!go(0)) return std::nullopt;
  return h;
}

}  // namespace

bool is_cograph(const AdjacencyMatrix& g) {
  std::vector<std::size_t> all(g.size());
  for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
  return cograph_on(g, all);
}

std::optional<std::map<Id, Id>> t_equal(const TermGraph& t1, const Correspondence& c1, const TermGraph& t2,
                                        const Correspondence& c2) {
  return search(flatten(t1, &c1), flatten(t2, &c2));
}

std::optional<std::map<Id, Id>> bare_equal(const TermGraph& t1, const TermGraph& t2) {
  return search(flatten(t1, nullptr), flatten(t2, nullptr));
}

std::optional<std::vector<std::vector<Id>>> chordless_cycles(const FWGraph& g, std::size_t cap) {
  auto has = [](const Relation& r, const Id& a, const Id& b) {
    return r.count(a < b ? std::pair{a, b} : std::pair{b, a}) > 0;
  };
  std::set<std::vector<Id>> cycles;
  std::size_t steps = 0;
  std::vector<Id> path;
  std::set<Id> on;

  auto canonical = [&](std::vector<Id> cyc) {
    const auto m = std::min_element(cyc.begin(), cyc.end()) - cyc.begin();
    std::rotate(cyc.begin(), cyc.begin() + m, cyc.end());
    // in this direction edge 0 is F iff m was even
    if (m % 2 == 1) std::reverse(cyc.begin() + 1, cyc.end());
    return cyc;
  };

  std::function<bool()> extend = [&]() -> bool {
    if (++steps > cap) return false;
    const bool via_f = path.size() % 2 == 1;
    for (const auto& v : g.ports) {
      if (on.count(v) || !has(via_f ? g.f : g.w, path.back(), v)) continue;
      path.push_back(v);
      on.insert(v);
      if (via_f && has(g.w, v, path.front())) cycles.insert(canonical(path));
      if (!extend()) return false;
      on.erase(v);
      path.pop_back();
    }
    return true;
  };
  for (const auto& s : g.ports) {
    path = {s};
    on = {s};
    if (!extend()) return std::nullopt;
  }

  std::vector<std::vector<Id>> out;
  for (const auto& cyc : cycles) {
    const std::size_t n = cyc.size();
    bool chord = false;
    for (std::size_t i = 0; i < n && !chord; ++i)
      for (std::size_t j = i + 2; j < n && !chord; ++j)
        if (!(i == 0 && j == n - 1) && has(g.f, cyc[i], cyc[j])) chord = true;
    if (!chord) out.push_back(cyc);
  }
  return out;
}

}  // namespace idg::oracle
