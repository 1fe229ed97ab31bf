#include "idg/correspondence.hpp"

#include <map>
#include <set>

namespace idg {
namespace {

ComponentId cid(Namespace ns, const Id& id) { return {ns, id}; }

void add(Diagnostics& out, const char* rule, std::vector<ComponentId> comps, std::string msg = {}) {
  out.push_back({rule, std::move(comps), std::move(msg)});
}

bool in_subtree(const TypeGraph& g, Id c, const Id& root) {
  for (std::size_t guard = 0; guard <= g.interfaces.size() + 1; ++guard) {
    if (c == root) return true;
    auto p = parent_of(g.residence, c);
    if (!p) return false;
    c = *p;
  }
  return false;
}

void check_fragment(const Correspondence& c, const TermGraph& t, const TypeGraph& type, Diagnostics& out) {
  for (const auto& [k, v] : c) {
    auto ns = t.namespace_of(k);
    bool ok = false;
    if (ns == Namespace::box || ns == Namespace::node) ok = type.interfaces.count(v) > 0;
    else if (ns == Namespace::port) ok = type.fields.count(v) > 0;
    if (!ok) {
      add(out, rule::kCorrDangling, {cid(ns.value_or(Namespace::node), k)}, "maps to " + v);
      continue;
    }

    if (ns == Namespace::port) {
      const Sort ps = t.ports.at(k);
      const Sort fs = type.fields.at(v);
      if (ps.kind != fs.kind) add(out, rule::kCorrKind, {cid(Namespace::port, k), cid(Namespace::field, v)});
      auto owner = parent_of(t.attachment, k);
      if (owner && t.lets.count(*owner)) {
        add(out, rule::kCorrLetPort, {cid(Namespace::port, k)}, "ports attached to let-bindings have no field");
      } else if (owner) {
        const bool on_box = t.boxes.count(*owner) > 0;
        const Polarity want = on_box ? flip(fs.polarity) : fs.polarity;
        if (ps.polarity != want) add(out, rule::kCorrPolarity, {cid(Namespace::port, k), cid(Namespace::field, v)});
      }
      if (ps.is_ctor() && fs.is_ctor()) {
        auto iface = image_of(type.ctor_iface, v);
        if (!iface) continue;
        auto expect = [&](Namespace dep_ns, const Id& dep) {
          auto it = c.find(dep);
          if (it == c.end() || it->second != *iface)
            add(out, rule::kCorrCtorInterface, {cid(dep_ns, dep), cid(Namespace::port, k)},
                "must correspond to " + *iface);
        };
        for (const auto& [b, p] : t.ctor_arg)
          if (p == k) expect(Namespace::box, b);
        for (const auto& [n, p] : t.ctor_usage)
          if (p == k) expect(Namespace::node, n);
      }
      continue;
    }

    // Box or node: its ports biject onto the fields of the interface.
    const auto fields = fields_of(type, v);
    const auto ports = ports_of(t, k);
    std::set<Id> hit;
    bool bad = false;
    for (const auto& p : ports) {
      auto it = c.find(p);
      if (it == c.end() || !type.fields.count(it->second)) {
        bad = true;
        continue;
      }
      if (parent_of(type.residence, it->second) != v || !hit.insert(it->second).second) bad = true;
    }
    if (bad || hit.size() != fields.size())
      add(out, rule::kCorrBijection, {cid(*ns, k), cid(Namespace::interface, v)},
          "ports attached to " + k + " must biject onto fields of " + v);
  }
}

}  // namespace

Diagnostics check_correspondence(const Correspondence& c, const TermGraph& t, const TypeGraph& type) {
  Diagnostics out;
  check_fragment(c, t, type, out);
  sort_diagnostics(out);
  return out;
}

Diagnostics check_let_correspondences(const TermGraph& t) {
  Diagnostics out;
  std::map<Id, Id> owner_fragment;
  static const Correspondence kEmpty;
  for (const auto& d : t.lets) {
    auto it = t.let_corr.find(d);
    const Correspondence& frag = it == t.let_corr.end() ? kEmpty : it->second;
    auto iface = image_of(t.let_iface, d);
    if (!iface) continue;

    std::optional<Id> recv, prov;
    for (const auto& p : ports_of(t, d)) {
      if (t.ports.at(p) == kCtorReceived) recv = p;
      if (t.ports.at(p) == kCtorProvided) prov = p;
    }
    if (recv)
      for (const auto& [b, p] : t.ctor_arg)
        if (p == *recv) {
          auto f = frag.find(b);
          if (f == frag.end() || f->second != *iface)
            add(out, rule::kLetBodyUncovered, {cid(Namespace::letbinding, d), cid(Namespace::box, b)});
        }
    if (prov)
      for (const auto& [n, p] : t.ctor_usage)
        if (p == *prov) {
          auto f = frag.find(n);
          if (f == frag.end() || f->second != *iface)
            add(out, rule::kLetOccurrenceUncovered, {cid(Namespace::letbinding, d), cid(Namespace::node, n)});
        }

    check_fragment(frag, t, t.internal, out);
    for (const auto& [k, v] : frag) {
      if ((t.internal.interfaces.count(v) || t.internal.fields.count(v)) && !in_subtree(t.internal, v, *iface)) {
        Id home = t.internal.interfaces.count(v) ? v : parent_of(t.internal.residence, v).value_or(v);
        if (!in_subtree(t.internal, home, *iface))
          add(out, rule::kCorrDangling, {cid(t.namespace_of(k).value_or(Namespace::node), k)},
              "target " + v + " outside the type of " + d);
      }
      auto [pos, fresh] = owner_fragment.emplace(k, d);
      if (!fresh)
        add(out, rule::kLetFragmentOverlap, {cid(t.namespace_of(k).value_or(Namespace::node), k)},
            "covered by " + pos->second + " and " + d);
    }
  }
  sort_diagnostics(out);
  return out;
}

Diagnostics check_external(const Correspondence& c, const TermGraph& t, const TypeGraph& type) {
  Diagnostics out;
  const auto boxes = root_boxes(t);
  const auto ifaces = root_interfaces(type);
  if (boxes.size() == 1 && ifaces.size() == 1) {
    auto it = c.find(boxes.front());
    if (it == c.end() || it->second != ifaces.front())
      add(out, rule::kExternalRoot, {cid(Namespace::box, boxes.front()), cid(Namespace::interface, ifaces.front())});
  } else {
    add(out, rule::kExternalRoot, {}, "term and type need single roots");
  }
  for (const auto& [d, frag] : t.let_corr)
    for (const auto& [k, _] : frag)
      if (c.count(k))
        add(out, rule::kOverlapsRdc, {cid(t.namespace_of(k).value_or(Namespace::node), k)}, "also in fragment of " + d);
  sort_diagnostics(out);
  return out;
}

Diagnostics check_total_coverage(const Correspondence& c, const TermGraph& t, const TypeGraph* type) {
  Diagnostics out;
  std::map<Id, int> count;
  for (const auto& [k, _] : c) ++count[k];
  for (const auto& [_, frag] : t.let_corr)
    for (const auto& [k, __] : frag) ++count[k];

  auto once = [&](Namespace ns, const Id& id, const char* missing) {
    const int n = count[id];
    if (n == 0) add(out, missing, {cid(ns, id)});
    if (n > 1) add(out, rule::kMultiplyCovered, {cid(ns, id)}, std::to_string(n) + " times");
  };
  for (const auto& b : t.boxes) once(Namespace::box, b, rule::kBoxUncovered);
  for (const auto& n : t.nodes) once(Namespace::node, n, rule::kNodeUncovered);
  for (const auto& [p, _] : t.ports) {
    auto owner = parent_of(t.attachment, p);
    if (owner && t.lets.count(*owner)) {
      if (count[p] != 0) add(out, rule::kLetPortCovered, {cid(Namespace::port, p)});
    } else {
      once(Namespace::port, p, rule::kPortUncovered);
    }
  }

  if (type) {
    auto label = [&](const Id& p) -> std::optional<std::string> {
      auto tg = lookup(c, t, p);
      if (!tg) return std::nullopt;
      const TypeGraph& g = tg->internal ? t.internal : *type;
      if (!g.fields.count(tg->id)) return std::nullopt;
      return g.label_of(tg->id);
    };
    for (const auto& [a, b] : t.res_wiring) {
      auto la = label(a);
      auto lb = label(b);
      if (la && lb && *la != *lb)
        add(out, rule::kWireLabelMismatch, {cid(Namespace::port, a), cid(Namespace::port, b)}, *la + " vs " + *lb);
    }
  }
  sort_diagnostics(out);
  return out;
}

std::optional<Target> lookup(const Correspondence& c, const TermGraph& t, const Id& component) {
  if (auto it = c.find(component); it != c.end()) return Target{it->second, false, std::nullopt};
  for (const auto& [d, frag] : t.let_corr)
    if (auto it = frag.find(component); it != frag.end()) return Target{it->second, true, d};
  return std::nullopt;
}

}  // namespace idg
