#include "idg/graph.hpp"

#include <algorithm>

namespace idg {

const char* to_string(Namespace ns) {
  switch (ns) {
    case Namespace::interface: return "interface";
    case Namespace::field: return "field";
    case Namespace::box: return "box";
    case Namespace::node: return "node";
    case Namespace::port: return "port";
    case Namespace::letbinding: return "letbinding";
  }
  return "?";
}

std::string to_string(Sort s) {
  std::string out = s.is_ctor() ? "C" : "R";
  out += s.is_provider() ? "+" : "-";
  return out;
}

std::optional<Sort> parse_sort(const std::string& text) {
  if (text.size() != 2) return std::nullopt;
  Sort s;
  if (text[0] == 'C') s.kind = Kind::constructor;
  else if (text[0] == 'R') s.kind = Kind::resource;
  else return std::nullopt;
  if (text[1] == '+') s.polarity = Polarity::provided;
  else if (text[1] == '-') s.polarity = Polarity::received;
  else return std::nullopt;
  return s;
}

void TypeGraph::add_interface(const Id& id, const std::optional<Id>& parent) {
  interfaces.insert(id);
  if (parent) residence.emplace(id, *parent);
}

void TypeGraph::add_field(const Id& id, Sort sort, const Id& owner) {
  fields[id] = sort;
  residence.emplace(id, owner);
}

void TypeGraph::connect(const Id& a, const Id& b) {
  connectivity.insert(a < b ? std::pair{a, b} : std::pair{b, a});
}

bool TypeGraph::connected(const Id& a, const Id& b) const {
  return connectivity.count(a < b ? std::pair{a, b} : std::pair{b, a}) > 0;
}

std::string TypeGraph::label_of(const Id& field) const {
  auto it = labels.find(field);
  return it == labels.end() ? kDefaultPrimitive : it->second;
}

void TermGraph::add_box(const Id& id, const std::optional<Id>& parent) {
  boxes.insert(id);
  if (parent) residence.emplace(id, *parent);
}

void TermGraph::add_node(const Id& id, const Id& box) {
  nodes.insert(id);
  residence.emplace(id, box);
}

void TermGraph::add_port(const Id& id, Sort sort, const Id& owner) {
  ports[id] = sort;
  attachment.emplace(id, owner);
  // Ports attached to a box reside in it; all others reside with their owner.
  Id home = owner;
  if (!boxes.count(owner)) {
    if (auto p = parent_of(residence, owner)) home = *p;
  }
  residence.emplace(id, home);
}

void TermGraph::add_let(const Id& id, const Id& box) {
  lets.insert(id);
  residence.emplace(id, box);
}

void TermGraph::wire(const Id& provider, const Id& receiver) {
  auto it = ports.find(provider);
  if (it != ports.end() && it->second.is_ctor()) ctor_wiring.emplace(provider, receiver);
  else res_wiring.emplace(provider, receiver);
}

bool TermGraph::contains(const Id& id) const { return namespace_of(id).has_value(); }

std::optional<Namespace> TermGraph::namespace_of(const Id& id) const {
  if (boxes.count(id)) return Namespace::box;
  if (nodes.count(id)) return Namespace::node;
  if (ports.count(id)) return Namespace::port;
  if (lets.count(id)) return Namespace::letbinding;
  if (internal.interfaces.count(id)) return Namespace::interface;
  if (internal.fields.count(id)) return Namespace::field;
  return std::nullopt;
}

std::optional<Id> parent_of(const Relation& rel, const Id& child) {
  auto it = rel.lower_bound({child, Id{}});
  if (it != rel.end() && it->first == child) return it->second;
  return std::nullopt;
}

std::vector<Id> children_of(const Relation& rel, const Id& parent) {
  std::vector<Id> out;
  for (const auto& [c, p] : rel)
    if (p == parent) out.push_back(c);
  return out;
}

std::optional<Id> image_of(const Relation& rel, const Id& key) { return parent_of(rel, key); }

std::optional<Id> preimage_of(const Relation& rel, const Id& value) {
  for (const auto& [a, b] : rel)
    if (b == value) return a;
  return std::nullopt;
}

std::vector<Id> preimages_of(const Relation& rel, const Id& value) { return children_of(rel, value); }

std::vector<Id> fields_of(const TypeGraph& g, const Id& iface) {
  std::vector<Id> out;
  for (const auto& [c, p] : g.residence)
    if (p == iface && g.fields.count(c)) out.push_back(c);
  return out;
}

std::vector<Id> root_interfaces(const TypeGraph& g) {
  std::vector<Id> out;
  for (const auto& i : g.interfaces)
    if (!parent_of(g.residence, i)) out.push_back(i);
  return out;
}

std::vector<Id> root_boxes(const TermGraph& t) {
  std::vector<Id> out;
  for (const auto& b : t.boxes)
    if (!parent_of(t.residence, b)) out.push_back(b);
  return out;
}

std::vector<Id> ports_of(const TermGraph& t, const Id& owner) {
  std::vector<Id> out;
  for (const auto& [p, o] : t.attachment)
    if (o == owner) out.push_back(p);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace idg
