#include "idg/equality.hpp"

#include "idg/iso.hpp"

namespace idg {
namespace {

enum Label {
  kResidence,
  kAttachment,
  kResWire,
  kCtorWire,
  kCtorArg,
  kCtorUsage,
  kLetIface,
  kLetTarget,
  kLetKey,
  kTypeResidence,
  kTypeCtorIface,
  kTypeConnect,
};

struct Encoded {
  ColoredGraph g;
  std::vector<Id> ids;
  std::map<Id, int> index;

  int add(const Id& id, std::string colour) {
    const int v = g.add_vertex(std::move(colour));
    ids.push_back(id);
    index.emplace(id, v);
    return v;
  }
  void edges(const Relation& r, int label) {
    for (const auto& [x, y] : r) g.add_edge(label, index.at(x), index.at(y));
  }
};

void encode_type(Encoded& e, const TypeGraph& g) {
  for (const auto& i : g.interfaces) e.add(i, "I");
  for (const auto& [f, s] : g.fields) e.add(f, "F" + to_string(s) + (s.is_ctor() ? "" : ":" + g.label_of(f)));
  e.edges(g.residence, kTypeResidence);
  e.edges(g.ctor_iface, kTypeCtorIface);
  for (const auto& [x, y] : g.connectivity) {
    e.g.add_edge(kTypeConnect, e.index.at(x), e.index.at(y));
    e.g.add_edge(kTypeConnect, e.index.at(y), e.index.at(x));
  }
}

Encoded encode(const TermGraph& t, const Correspondence* c) {
  Encoded e;
  auto pinned = [&](const Id& x) -> std::string {
    if (!c) return "";
    auto it = c->find(x);
    return it == c->end() ? "" : "=" + it->second;
  };
  for (const auto& b : t.boxes) e.add(b, "B" + pinned(b));
  for (const auto& n : t.nodes) e.add(n, "N" + pinned(n));
  for (const auto& d : t.lets) e.add(d, "D");
  for (const auto& [p, s] : t.ports) e.add(p, "P" + to_string(s) + pinned(p));
  encode_type(e, t.internal);
  e.edges(t.residence, kResidence);
  e.edges(t.attachment, kAttachment);
  e.edges(t.res_wiring, kResWire);
  e.edges(t.ctor_wiring, kCtorWire);
  e.edges(t.ctor_arg, kCtorArg);
  e.edges(t.ctor_usage, kCtorUsage);
  e.edges(t.let_iface, kLetIface);
  for (const auto& [d, frag] : t.let_corr)
    for (const auto& [k, v] : frag) {
      e.g.add_edge(kLetKey, e.index.at(d), e.index.at(k));
      e.g.add_edge(kLetTarget, e.index.at(k), e.index.at(v));
    }
  return e;
}

std::optional<Relabeling> witness(const Encoded& a, const Encoded& b) {
  auto m = find_isomorphism(a.g, b.g);
  if (!m) return std::nullopt;
  Relabeling h;
  for (std::size_t v = 0; v < a.ids.size(); ++v) h.ids.emplace(b.ids[(*m)[v]], a.ids[v]);
  return h;
}

Relation rename(const std::map<Id, Id>& h, const Relation& r) {
  auto at = [&](const Id& x) {
    auto it = h.find(x);
    return it == h.end() ? x : it->second;
  };
  Relation out;
  for (const auto& [x, y] : r) out.emplace(at(x), at(y));
  return out;
}

Id rename(const std::map<Id, Id>& h, const Id& x) {
  auto it = h.find(x);
  return it == h.end() ? x : it->second;
}

}  // namespace

TypeGraph relabel(const std::map<Id, Id>& h, const TypeGraph& g) {
  TypeGraph out;
  for (const auto& i : g.interfaces) out.interfaces.insert(rename(h, i));
  for (const auto& [f, s] : g.fields) out.fields[rename(h, f)] = s;
  for (const auto& [f, l] : g.labels) out.labels[rename(h, f)] = l;
  out.residence = rename(h, g.residence);
  out.ctor_iface = rename(h, g.ctor_iface);
  for (const auto& [x, y] : g.connectivity) out.connect(rename(h, x), rename(h, y));
  return out;
}

TermGraph relabel(const Relabeling& h, const TermGraph& t) {
  TermGraph out;
  for (const auto& x : t.boxes) out.boxes.insert(rename(h.ids, x));
  for (const auto& x : t.nodes) out.nodes.insert(rename(h.ids, x));
  for (const auto& x : t.lets) out.lets.insert(rename(h.ids, x));
  for (const auto& [p, s] : t.ports) out.ports[rename(h.ids, p)] = s;
  out.internal = relabel(h.ids, t.internal);
  out.residence = rename(h.ids, t.residence);
  out.attachment = rename(h.ids, t.attachment);
  out.res_wiring = rename(h.ids, t.res_wiring);
  out.ctor_wiring = rename(h.ids, t.ctor_wiring);
  out.ctor_arg = rename(h.ids, t.ctor_arg);
  out.ctor_usage = rename(h.ids, t.ctor_usage);
  out.let_iface = rename(h.ids, t.let_iface);
  for (const auto& [d, frag] : t.let_corr) {
    auto& f = out.let_corr[rename(h.ids, d)];
    for (const auto& [k, v] : frag) f[rename(h.ids, k)] = rename(h.ids, v);
  }
  return out;
}

Correspondence relabel(const Relabeling& h, const Correspondence& c) {
  Correspondence out;
  for (const auto& [k, v] : c) out[rename(h.ids, k)] = v;
  return out;
}

std::optional<Relabeling> t_equal(const TermGraph& t1, const Correspondence& c1, const TermGraph& t2,
                                  const Correspondence& c2) {
  auto h = witness(encode(t1, &c1), encode(t2, &c2));
  if (!h || relabel(*h, t2) != t1 || relabel(*h, c2) != c1) return std::nullopt;
  return h;
}

std::optional<Relabeling> bare_equal(const TermGraph& t1, const TermGraph& t2) {
  auto h = witness(encode(t1, nullptr), encode(t2, nullptr));
  if (!h || relabel(*h, t2) != t1) return std::nullopt;
  return h;
}

std::optional<std::map<Id, Id>> type_isomorphism(const TypeGraph& a, const TypeGraph& b) {
  Encoded ea, eb;
  encode_type(ea, a);
  encode_type(eb, b);
  auto h = witness(ea, eb);
  if (!h || relabel(h->ids, b) != a) return std::nullopt;
  return h->ids;
}

}  // namespace idg
