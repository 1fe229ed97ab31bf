#include "idg/builder.hpp"

namespace idg {

TermBuilder& TermBuilder::external() {
  internal_ = false;
  return *this;
}

TermBuilder& TermBuilder::fragment(const Id& let) {
  internal_ = true;
  let_ = let;
  return *this;
}

void TermBuilder::ports(const Id& owner, bool on_box, const PortList& list) {
  for (const auto& [p, f] : list) {
    Sort s = target().fields.at(f);
    if (on_box) s.polarity = flip(s.polarity);
    b_.term.add_port(p, s, owner);
    corr()[p] = f;
  }
}

TermBuilder& TermBuilder::box(const Id& id, const std::optional<Id>& parent, const Id& iface, const PortList& list) {
  b_.term.add_box(id, parent);
  corr()[id] = iface;
  ports(id, true, list);
  return *this;
}

TermBuilder& TermBuilder::node(const Id& id, const Id& box, const Id& iface, const PortList& list) {
  b_.term.add_node(id, box);
  corr()[id] = iface;
  ports(id, false, list);
  return *this;
}

TermBuilder& TermBuilder::let(const Id& id, const Id& box, const Id& iface, const Id& body_port, const Id& use_port) {
  b_.term.add_let(id, box);
  b_.term.add_port(body_port, kCtorReceived, id);
  b_.term.add_port(use_port, kCtorProvided, id);
  b_.term.let_iface.emplace(id, iface);
  b_.term.let_corr[id];
  return *this;
}

TermBuilder& TermBuilder::arg(const Id& box, const Id& port) {
  b_.term.ctor_arg.emplace(box, port);
  return *this;
}

TermBuilder& TermBuilder::uses(const Id& node, const Id& port) {
  b_.term.ctor_usage.emplace(node, port);
  return *this;
}

TermBuilder& TermBuilder::wire(const Id& provider, const Id& receiver) {
  b_.term.wire(provider, receiver);
  return *this;
}

}  // namespace idg
