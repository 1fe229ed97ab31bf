#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace idg {

/// Opaque component token. Unique within one graph across every namespace.
using Id = std::string;

/// Raw edge set. Relations are stored as explicit pairs so that arity
/// violations in candidate data stay representable for the validators.
using Relation = std::set<std::pair<Id, Id>>;

enum class Namespace { interface, field, box, node, port, letbinding };
enum class Kind { constructor, resource };
enum class Polarity { provided, received };

const char* to_string(Namespace ns);

/// A namespaced component reference, used in diagnostics and relabelings.
struct ComponentId {
  Namespace ns;
  Id token;

  auto operator<=>(const ComponentId&) const = default;
};

inline Polarity flip(Polarity p) {
  return p == Polarity::provided ? Polarity::received : Polarity::provided;
}

/// Kind and polarity of a port or field, written "C+", "C-", "R+", "R-".
struct Sort {
  Kind kind = Kind::resource;
  Polarity polarity = Polarity::provided;

  auto operator<=>(const Sort&) const = default;
  bool is_ctor() const { return kind == Kind::constructor; }
  bool is_provider() const { return polarity == Polarity::provided; }
};

std::string to_string(Sort s);
std::optional<Sort> parse_sort(const std::string& text);

inline constexpr Sort kCtorProvided{Kind::constructor, Polarity::provided};
inline constexpr Sort kCtorReceived{Kind::constructor, Polarity::received};
inline constexpr Sort kResProvided{Kind::resource, Polarity::provided};
inline constexpr Sort kResReceived{Kind::resource, Polarity::received};

/// Primitive attached to resource fields when none is given.
inline const std::string kDefaultPrimitive = "X";

/// Type-fragment graph: interfaces, fields, residence, R_I and R_C.
struct TypeGraph {
  std::set<Id> interfaces;
  std::map<Id, Sort> fields;
  /// Primitive label per resource field; absent means kDefaultPrimitive.
  std::map<Id, std::string> labels;
  /// (child, parent) where child is an interface or a field.
  Relation residence;
  /// R_I: (constructor field, interface).
  Relation ctor_iface;
  /// R_C, stored with first < second.
  Relation connectivity;

  bool operator==(const TypeGraph&) const = default;

  void add_interface(const Id& id, const std::optional<Id>& parent = std::nullopt);
  void add_field(const Id& id, Sort sort, const Id& owner);
  void connect(const Id& a, const Id& b);
  bool connected(const Id& a, const Id& b) const;
  std::string label_of(const Id& field) const;
};

/// Partial mapping from term components (box, node, port) to type
/// components (interface, field).
using Correspondence = std::map<Id, Id>;

/// Term-fragment graph with its internal type-fragment graph.
struct TermGraph {
  std::set<Id> boxes;
  std::set<Id> nodes;
  std::set<Id> lets;
  std::map<Id, Sort> ports;
  TypeGraph internal;

  /// R_R: (child, box) for boxes, nodes, ports and let-bindings.
  Relation residence;
  /// R_A: (port, node | letbinding | box).
  Relation attachment;
  /// R_WR: (resource provider, resource receiver).
  Relation res_wiring;
  /// R_WC: (constructor provider, constructor receiver).
  Relation ctor_wiring;
  /// R_CA: (box, constructor receiver port).
  Relation ctor_arg;
  /// R_CU: (node, constructor provider port).
  Relation ctor_usage;
  /// R_DI: (let-binding, root interface of internal).
  Relation let_iface;
  /// R_DC: one correspondence fragment per let-binding.
  std::map<Id, Correspondence> let_corr;

  bool operator==(const TermGraph&) const = default;

  void add_box(const Id& id, const std::optional<Id>& parent = std::nullopt);
  void add_node(const Id& id, const Id& box);
  void add_port(const Id& id, Sort sort, const Id& owner);
  void add_let(const Id& id, const Id& box);
  void wire(const Id& provider, const Id& receiver);

  bool contains(const Id& id) const;
  std::optional<Namespace> namespace_of(const Id& id) const;
};

/// The unit of checking: an external type, a term and an external
/// correspondence between them.
struct Bundle {
  TypeGraph type;
  TermGraph term;
  Correspondence external;

  bool operator==(const Bundle&) const = default;
};

// Lookups over the raw relations. These take the first match and are only
// meaningful on validated graphs.

std::optional<Id> parent_of(const Relation& rel, const Id& child);
std::vector<Id> children_of(const Relation& rel, const Id& parent);
std::optional<Id> image_of(const Relation& rel, const Id& key);
std::optional<Id> preimage_of(const Relation& rel, const Id& value);
std::vector<Id> preimages_of(const Relation& rel, const Id& value);

/// Fields residing directly in an interface, sorted.
std::vector<Id> fields_of(const TypeGraph& g, const Id& iface);
/// Interfaces without a parent.
std::vector<Id> root_interfaces(const TypeGraph& g);
/// Boxes without a parent.
std::vector<Id> root_boxes(const TermGraph& t);
/// Ports attached to a node, box or let-binding, sorted.
std::vector<Id> ports_of(const TermGraph& t, const Id& owner);

class UsageError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace idg
