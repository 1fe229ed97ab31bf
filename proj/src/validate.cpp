#include "idg/validate.hpp"

#include <algorithm>
#include <set>

#include "idg/cograph.hpp"

namespace idg {
namespace {

ComponentId cid(Namespace ns, const Id& id) { return {ns, id}; }

class Collector {
 public:
  void add(const char* rule, std::vector<ComponentId> comps, std::string msg = {}) {
    diags_.push_back({rule, std::move(comps), std::move(msg)});
  }
  Diagnostics take() {
    sort_diagnostics(diags_);
    return std::move(diags_);
  }

 private:
  Diagnostics diags_;
};

std::map<Id, std::vector<Id>> group_first(const Relation& rel) {
  std::map<Id, std::vector<Id>> out;
  for (const auto& [a, b] : rel) out[a].push_back(b);
  return out;
}

std::map<Id, std::vector<Id>> group_second(const Relation& rel) {
  std::map<Id, std::vector<Id>> out;
  for (const auto& [a, b] : rel) out[b].push_back(a);
  return out;
}

// Reports each cycle in a parent map once, naming its members.
void report_cycles(const std::map<Id, Id>& parent, Namespace ns, const char* rule, Collector& out) {
  std::set<Id> done;
  for (const auto& [start, _] : parent) {
    if (done.count(start)) continue;
    std::vector<Id> path;
    std::set<Id> on_path;
    Id cur = start;
    while (true) {
      if (done.count(cur)) break;
      if (on_path.count(cur)) {
        std::vector<ComponentId> cyc;
        auto it = std::find(path.begin(), path.end(), cur);
        for (; it != path.end(); ++it) cyc.push_back(cid(ns, *it));
        std::sort(cyc.begin(), cyc.end());
        out.add(rule, cyc, "residence cycle");
        break;
      }
      path.push_back(cur);
      on_path.insert(cur);
      auto p = parent.find(cur);
      if (p == parent.end()) break;
      cur = p->second;
    }
    done.insert(path.begin(), path.end());
  }
}

void check_type(const TypeGraph& g, Collector& out) {
  auto ns_of = [&](const Id& id) -> std::optional<Namespace> {
    if (g.interfaces.count(id)) return Namespace::interface;
    if (g.fields.count(id)) return Namespace::field;
    return std::nullopt;
  };

  for (const auto& i : g.interfaces)
    if (g.fields.count(i)) out.add(rule::kDuplicateId, {cid(Namespace::interface, i), cid(Namespace::field, i)});

  // Residence.
  std::map<Id, Id> iface_parent;
  std::map<Id, Id> field_owner;
  for (const auto& [child, parent] : g.residence) {
    auto cns = ns_of(child);
    if (!cns || !g.interfaces.count(parent)) {
      out.add(rule::kResidenceDangling, {cid(cns.value_or(Namespace::field), child), cid(Namespace::interface, parent)});
      continue;
    }
    auto& slot = *cns == Namespace::interface ? iface_parent : field_owner;
    if (!slot.emplace(child, parent).second) out.add(rule::kResidenceMultiple, {cid(*cns, child)});
  }
  for (const auto& [f, _] : g.fields)
    if (!field_owner.count(f)) out.add(rule::kResidenceMissing, {cid(Namespace::field, f)});
  report_cycles(iface_parent, Namespace::interface, rule::kResidenceCycle, out);

  // R_I: constructor fields <-> interfaces residing directly in the field's interface.
  std::map<Id, int> field_images;
  std::map<Id, int> iface_preimages;
  for (const auto& [f, i] : g.ctor_iface) {
    auto fit = g.fields.find(f);
    if (fit == g.fields.end() || !g.interfaces.count(i)) {
      out.add(rule::kCtorIfaceDangling, {cid(Namespace::field, f), cid(Namespace::interface, i)});
      continue;
    }
    if (!fit->second.is_ctor()) out.add(rule::kCtorIfaceNotConstructor, {cid(Namespace::field, f)});
    auto owner = field_owner.find(f);
    auto ip = iface_parent.find(i);
    if (owner == field_owner.end() || ip == iface_parent.end() || ip->second != owner->second)
      out.add(rule::kCtorIfaceLevel, {cid(Namespace::field, f), cid(Namespace::interface, i)});
    ++field_images[f];
    ++iface_preimages[i];
  }
  for (const auto& [f, s] : g.fields)
    if (s.is_ctor() && field_images[f] != 1)
      out.add(rule::kCtorIfaceNotBijective, {cid(Namespace::field, f)}, "constructor field needs exactly one interface");
  for (const auto& i : g.interfaces) {
    const int pre = iface_preimages[i];
    if (pre > 1 || (pre == 0 && iface_parent.count(i)))
      out.add(rule::kCtorIfaceNotBijective, {cid(Namespace::interface, i)}, "nested interface needs exactly one constructor field");
  }

  // R_C.
  std::map<Id, std::vector<std::pair<Id, Id>>> per_iface;
  for (const auto& [a, b] : g.connectivity) {
    if (!g.fields.count(a) || !g.fields.count(b)) {
      out.add(rule::kConnectivityDangling, {cid(Namespace::field, a), cid(Namespace::field, b)});
      continue;
    }
    if (a == b) {
      out.add(rule::kConnectivityReflexive, {cid(Namespace::field, a)});
      continue;
    }
    auto oa = field_owner.find(a);
    auto ob = field_owner.find(b);
    if (oa == field_owner.end() || ob == field_owner.end() || oa->second != ob->second) {
      out.add(rule::kConnectivityCrossInterface, {cid(Namespace::field, a), cid(Namespace::field, b)});
      continue;
    }
    per_iface[oa->second].emplace_back(a, b);
  }
  for (const auto& i : g.interfaces) {
    std::vector<Id> fs;
    for (const auto& [f, o] : field_owner)
      if (o == i) fs.push_back(f);
    if (fs.size() < 4) continue;
    AdjacencyMatrix m(fs.size());
    auto index = [&](const Id& f) { return static_cast<std::size_t>(std::lower_bound(fs.begin(), fs.end(), f) - fs.begin()); };
    for (const auto& [a, b] : per_iface[i]) m.set(index(a), index(b));
    if (auto p4 = find_induced_p4(m)) {
      std::vector<ComponentId> comps{cid(Namespace::interface, i)};
      std::string path;
      for (auto v : *p4) {
        comps.push_back(cid(Namespace::field, fs[v]));
        path += (path.empty() ? "" : "-") + fs[v];
      }
      out.add(rule::kConnectivityNotCograph, comps, "induced path " + path);
    }
  }

  for (const auto& [f, _] : g.labels) {
    auto it = g.fields.find(f);
    if (it == g.fields.end() || it->second.is_ctor()) out.add(rule::kLabelInvalid, {cid(Namespace::field, f)});
  }
}

struct TermIndex {
  std::map<Id, Id> box_of;      // residence of every non-box component
  std::map<Id, Id> box_parent;  // box residence
  std::map<Id, Id> owner;       // attachment
};

std::optional<Id> box_containing(const TermIndex& ix, const Id& c) {
  auto it = ix.box_of.find(c);
  if (it == ix.box_of.end()) return std::nullopt;
  return it->second;
}

bool within(const TermIndex& ix, Id inner, const Id& outer) {
  for (int guard = 0; guard < 100000; ++guard) {
    if (inner == outer) return true;
    auto it = ix.box_parent.find(inner);
    if (it == ix.box_parent.end()) return false;
    inner = it->second;
  }
  return false;
}

void check_term(const TermGraph& t, Collector& out) {
  auto ns = [&](const Id& id) { return t.namespace_of(id); };

  {
    std::map<Id, std::vector<Namespace>> seen;
    for (const auto& b : t.boxes) seen[b].push_back(Namespace::box);
    for (const auto& n : t.nodes) seen[n].push_back(Namespace::node);
    for (const auto& [p, _] : t.ports) seen[p].push_back(Namespace::port);
    for (const auto& d : t.lets) seen[d].push_back(Namespace::letbinding);
    for (const auto& i : t.internal.interfaces) seen[i].push_back(Namespace::interface);
    for (const auto& [f, _] : t.internal.fields) seen[f].push_back(Namespace::field);
    for (const auto& [id, spaces] : seen)
      if (spaces.size() > 1) {
        std::vector<ComponentId> comps;
        for (auto s : spaces) comps.push_back(cid(s, id));
        out.add(rule::kDuplicateId, comps);
      }
  }

  TermIndex ix;
  for (const auto& [child, parent] : t.residence) {
    auto cns = ns(child);
    const bool child_ok = cns && (*cns == Namespace::box || *cns == Namespace::node || *cns == Namespace::port ||
                                  *cns == Namespace::letbinding);
    if (!child_ok || !t.boxes.count(parent)) {
      out.add(rule::kResidenceDangling, {cid(cns.value_or(Namespace::node), child), cid(Namespace::box, parent)});
      continue;
    }
    auto& slot = *cns == Namespace::box ? ix.box_parent : ix.box_of;
    if (!slot.emplace(child, parent).second) out.add(rule::kResidenceMultiple, {cid(*cns, child)});
  }
  for (const auto& n : t.nodes)
    if (!ix.box_of.count(n)) out.add(rule::kResidenceMissing, {cid(Namespace::node, n)});
  for (const auto& [p, _] : t.ports)
    if (!ix.box_of.count(p)) out.add(rule::kResidenceMissing, {cid(Namespace::port, p)});
  for (const auto& d : t.lets)
    if (!ix.box_of.count(d)) out.add(rule::kResidenceMissing, {cid(Namespace::letbinding, d)});
  report_cycles(ix.box_parent, Namespace::box, rule::kResidenceCycle, out);

  // Attachment.
  for (const auto& [p, o] : t.attachment) {
    auto ons = ns(o);
    const bool owner_ok = ons && (*ons == Namespace::box || *ons == Namespace::node || *ons == Namespace::letbinding);
    if (!t.ports.count(p) || !owner_ok) {
      out.add(rule::kAttachmentDangling, {cid(Namespace::port, p), cid(ons.value_or(Namespace::node), o)});
      continue;
    }
    if (!ix.owner.emplace(p, o).second) {
      out.add(rule::kAttachmentMultiple, {cid(Namespace::port, p)});
      continue;
    }
    auto home = box_containing(ix, p);
    auto expected = *ons == Namespace::box ? std::optional<Id>(o) : box_containing(ix, o);
    if (!home || !expected || *home != *expected)
      out.add(rule::kAttachmentScope, {cid(Namespace::port, p), cid(*ons, o)}, "port must reside in the box of its owner");
  }
  for (const auto& [p, _] : t.ports)
    if (!ix.owner.count(p)) out.add(rule::kAttachmentMissing, {cid(Namespace::port, p)});

  auto sort_of = [&](const Id& p) -> std::optional<Sort> {
    auto it = t.ports.find(p);
    if (it == t.ports.end()) return std::nullopt;
    return it->second;
  };
  auto same_box = [&](const Id& a, const Id& b) {
    auto ba = box_containing(ix, a);
    auto bb = box_containing(ix, b);
    return ba && bb && *ba == *bb;
  };

  // Resource wiring.
  std::map<Id, int> wr_uses;
  for (const auto& [a, b] : t.res_wiring) {
    auto sa = sort_of(a);
    auto sb = sort_of(b);
    if (!sa || !sb) {
      out.add(rule::kResourceWiringDangling, {cid(Namespace::port, a), cid(Namespace::port, b)});
      continue;
    }
    if (*sa != kResProvided || *sb != kResReceived)
      out.add(rule::kResourceWiringKind, {cid(Namespace::port, a), cid(Namespace::port, b)});
    if (!same_box(a, b)) out.add(rule::kResourceWiringBox, {cid(Namespace::port, a), cid(Namespace::port, b)});
    ++wr_uses[a];
    ++wr_uses[b];
  }
  for (const auto& [p, s] : t.ports)
    if (!s.is_ctor() && wr_uses[p] != 1)
      out.add(rule::kResourceWiringNotBijective, {cid(Namespace::port, p)},
              "resource port wired " + std::to_string(wr_uses[p]) + " times");

  // Constructor wiring.
  for (const auto& [a, b] : t.ctor_wiring) {
    auto sa = sort_of(a);
    auto sb = sort_of(b);
    if (!sa || !sb) {
      out.add(rule::kCtorWiringDangling, {cid(Namespace::port, a), cid(Namespace::port, b)});
      continue;
    }
    if (*sa != kCtorProvided || *sb != kCtorReceived)
      out.add(rule::kCtorWiringKind, {cid(Namespace::port, a), cid(Namespace::port, b)});
    if (!same_box(a, b)) out.add(rule::kCtorWiringBox, {cid(Namespace::port, a), cid(Namespace::port, b)});
  }

  // Constructor arguments.
  std::map<Id, int> ca_port_uses;
  std::map<Id, int> ca_box_uses;
  std::map<Id, Id> arg_port_of_box;
  for (const auto& [b, p] : t.ctor_arg) {
    auto sp = sort_of(p);
    if (!t.boxes.count(b) || !sp) {
      out.add(rule::kCtorArgDangling, {cid(Namespace::box, b), cid(Namespace::port, p)});
      continue;
    }
    if (*sp != kCtorReceived) out.add(rule::kCtorArgKind, {cid(Namespace::box, b), cid(Namespace::port, p)});
    auto bp = ix.box_parent.find(b);
    auto pb = box_containing(ix, p);
    if (bp == ix.box_parent.end() || !pb || bp->second != *pb)
      out.add(rule::kCtorArgBox, {cid(Namespace::box, b), cid(Namespace::port, p)}, "argument box must reside in the port's box");
    ++ca_port_uses[p];
    ++ca_box_uses[b];
    arg_port_of_box[b] = p;
  }
  for (const auto& [p, s] : t.ports)
    if (s == kCtorReceived && ca_port_uses[p] != 1)
      out.add(rule::kCtorArgNotBijective, {cid(Namespace::port, p)}, "constructor receiver needs exactly one argument box");
  for (const auto& b : t.boxes) {
    const int uses = ca_box_uses[b];
    if (uses > 1 || (uses == 0 && ix.box_parent.count(b)))
      out.add(rule::kCtorArgNotBijective, {cid(Namespace::box, b)}, "nested box needs exactly one constructor receiver");
  }

  // Constructor usage and wire-safety.
  std::map<Id, int> cu_uses;
  for (const auto& [n, c] : t.ctor_usage) {
    auto sc = sort_of(c);
    if (!t.nodes.count(n) || !sc) {
      out.add(rule::kCtorUsageDangling, {cid(Namespace::node, n), cid(Namespace::port, c)});
      continue;
    }
    ++cu_uses[n];
    if (*sc != kCtorProvided) {
      out.add(rule::kCtorUsageKind, {cid(Namespace::node, n), cid(Namespace::port, c)});
      continue;
    }
    auto bn = box_containing(ix, n);
    auto bc = box_containing(ix, c);
    if (!bn || !bc || !within(ix, *bn, *bc)) {
      out.add(rule::kCtorUsageScope, {cid(Namespace::node, n), cid(Namespace::port, c)});
      continue;
    }
    if (*bn == *bc) continue;
    Id inner = *bn;
    while (ix.box_parent.at(inner) != *bc) inner = ix.box_parent.at(inner);
    auto licence = arg_port_of_box.find(inner);
    if (licence == arg_port_of_box.end() || !t.ctor_wiring.count({c, licence->second}))
      out.add(rule::kNotWireSafe, {cid(Namespace::node, n), cid(Namespace::port, c)},
              "usage crosses into box " + inner + " without constructor wiring");
  }
  for (const auto& n : t.nodes) {
    if (cu_uses[n] == 0) out.add(rule::kCtorUsageMissing, {cid(Namespace::node, n)});
    if (cu_uses[n] > 1) out.add(rule::kCtorUsageMultiple, {cid(Namespace::node, n)});
  }

  // Let-bindings.
  auto attached = group_second(t.attachment);
  for (const auto& d : t.lets) {
    int recv = 0, prov = 0, other = 0;
    for (const auto& p : attached[d]) {
      auto s = sort_of(p);
      if (s == kCtorReceived) ++recv;
      else if (s == kCtorProvided) ++prov;
      else ++other;
    }
    if (recv != 1 || prov != 1 || other != 0)
      out.add(rule::kLetPorts, {cid(Namespace::letbinding, d)}, "needs exactly one constructor receiver and one provider");
  }

  // R_DI and the internal type forest.
  check_type(t.internal, out);
  auto di_by_let = group_first(t.let_iface);
  auto di_by_iface = group_second(t.let_iface);
  for (const auto& [d, i] : t.let_iface) {
    if (!t.lets.count(d) || !t.internal.interfaces.count(i)) {
      out.add(rule::kLetIfaceDangling, {cid(Namespace::letbinding, d), cid(Namespace::interface, i)});
      continue;
    }
    if (parent_of(t.internal.residence, i)) out.add(rule::kLetIfaceNotRoot, {cid(Namespace::interface, i)});
  }
  for (const auto& d : t.lets)
    if (di_by_let[d].size() != 1) out.add(rule::kLetIfaceNotBijective, {cid(Namespace::letbinding, d)});
  for (const auto& [i, ds] : di_by_iface)
    if (ds.size() > 1) out.add(rule::kLetIfaceNotBijective, {cid(Namespace::interface, i)});
  for (const auto& i : root_interfaces(t.internal))
    if (!di_by_iface.count(i)) out.add(rule::kInternalRootUnbound, {cid(Namespace::interface, i)});

  for (const auto& [d, frag] : t.let_corr) {
    if (!t.lets.count(d)) {
      out.add(rule::kLetCorrDangling, {cid(Namespace::letbinding, d)}, "fragment for unknown let-binding");
      continue;
    }
    for (const auto& [k, v] : frag) {
      auto kns = ns(k);
      const bool key_ok = kns && (*kns == Namespace::box || *kns == Namespace::node || *kns == Namespace::port);
      const bool val_ok = t.internal.interfaces.count(v) || t.internal.fields.count(v);
      if (!key_ok || !val_ok)
        out.add(rule::kLetCorrDangling, {cid(kns.value_or(Namespace::node), k), cid(Namespace::letbinding, d)},
                "maps to " + v);
    }
  }
}

}  // namespace

Diagnostics validate_type_fragment(const TypeGraph& g) {
  Collector out;
  check_type(g, out);
  return out.take();
}

Diagnostics validate_term_fragment(const TermGraph& t) {
  Collector out;
  check_term(t, out);
  return out.take();
}

bool is_type(const TypeGraph& g) {
  if (!validate_type_fragment(g).empty()) throw UsageError("is_type: type fragment does not validate");
  return root_interfaces(g).size() == 1;
}

bool is_term(const TermGraph& t) {
  if (!validate_term_fragment(t).empty()) throw UsageError("is_term: term fragment does not validate");
  return root_boxes(t).size() == 1;
}

std::vector<Id> DescentForest::chain(const Id& c) const {
  std::vector<Id> out{c};
  for (auto it = parent.find(c); it != parent.end(); it = parent.find(it->second)) {
    out.push_back(it->second);
    if (out.size() > parent.size() + 1) break;
  }
  return out;
}

DescentForest descent_forest(const TermGraph& t) {
  DescentForest f;
  for (const auto& [p, o] : t.attachment) f.parent.emplace(p, o);
  for (const auto& [b, p] : t.ctor_arg) f.parent.emplace(b, p);
  for (const auto& [n, p] : t.ctor_usage) f.parent.emplace(n, p);
  auto consider = [&](const Id& c) {
    if (!f.parent.count(c)) f.roots.push_back(c);
  };
  for (const auto& b : t.boxes) consider(b);
  for (const auto& n : t.nodes) consider(n);
  for (const auto& [p, _] : t.ports) consider(p);
  for (const auto& d : t.lets) consider(d);
  std::sort(f.roots.begin(), f.roots.end());
  return f;
}

int residence_depth(const TermGraph& t, const Id& c) {
  Id cur = c;
  if (!t.boxes.count(cur)) {
    auto p = parent_of(t.residence, cur);
    if (!p) return 0;
    cur = *p;
  }
  int depth = 0;
  while (auto p = parent_of(t.residence, cur)) {
    cur = *p;
    if (++depth > static_cast<int>(t.boxes.size())) break;
  }
  return depth;
}

bool box_within(const TermGraph& t, const Id& inner, const Id& outer) {
  Id cur = inner;
  for (std::size_t guard = 0; guard <= t.boxes.size(); ++guard) {
    if (cur == outer) return true;
    auto p = parent_of(t.residence, cur);
    if (!p) return false;
    cur = *p;
  }
  return false;
}

}  // namespace idg
