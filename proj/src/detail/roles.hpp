#pragma once

#include <map>

#include "idg/encodings.hpp"
#include "idg/equality.hpp"

namespace idg::detail {

// What each term component of a let-free bundle corresponds to, in the ids
// of `canonical`.
struct Roles {
  std::map<Id, Id> of;

  const Id& at(const Id& x) const {
    auto it = of.find(x);
    if (it == of.end()) throw DecodeError("component has no correspondence", x);
    return it->second;
  }
  // Port of `owner` playing `field`.
  Id port(const TermGraph& t, const Id& owner, const Id& field) const {
    for (const auto& p : ports_of(t, owner))
      if (at(p) == field) return p;
    throw DecodeError("missing " + field + " port", owner);
  }
};

inline Roles roles(const Bundle& b, const TypeGraph& canonical) {
  if (!b.term.lets.empty()) throw DecodeError("term still has let-bindings", *b.term.lets.begin());
  std::map<Id, Id> h;
  if (b.type != canonical) {
    auto m = type_isomorphism(canonical, b.type);
    if (!m) throw DecodeError("type does not match");
    h = *m;
  }
  Roles r;
  for (const auto& [k, v] : b.external) {
    auto it = h.find(v);
    r.of[k] = it == h.end() ? v : it->second;
  }
  return r;
}

// The single port wired to `p` by a resource wire.
inline Id wired_to(const TermGraph& t, const Id& p) {
  std::optional<Id> out;
  for (const auto& [a, b] : t.res_wiring) {
    if (a == p || b == p) {
      if (out) throw DecodeError("port wired twice", p);
      out = a == p ? b : a;
    }
  }
  if (!out) throw DecodeError("port not wired", p);
  return *out;
}

}  // namespace idg::detail
