#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "idg/graph.hpp"

namespace idg {

/// Builds a term together with its correspondence. Port sorts are derived
/// from the fields they map to: same polarity on nodes, flipped on boxes.
class TermBuilder {
 public:
  using PortList = std::vector<std::pair<Id, Id>>;  // (port, field)

  explicit TermBuilder(Bundle& b) : b_(b) {}

  /// Subsequent components map into the external correspondence.
  TermBuilder& external();
  /// Subsequent components map into the R_DC fragment of `let`.
  TermBuilder& fragment(const Id& let);

  TermBuilder& box(const Id& id, const std::optional<Id>& parent, const Id& iface, const PortList& ports = {});
  TermBuilder& node(const Id& id, const Id& box, const Id& iface, const PortList& ports = {});
  /// Let-binding with its receiver (body) and provider (occurrence) ports.
  TermBuilder& let(const Id& id, const Id& box, const Id& iface, const Id& body_port, const Id& use_port);
  TermBuilder& arg(const Id& box, const Id& port);
  TermBuilder& uses(const Id& node, const Id& port);
  TermBuilder& wire(const Id& provider, const Id& receiver);

 private:
  const TypeGraph& target() const { return internal_ ? b_.term.internal : b_.type; }
  Correspondence& corr() { return internal_ ? b_.term.let_corr[let_] : b_.external; }
  void ports(const Id& owner, bool on_box, const PortList& ports);

  Bundle& b_;
  bool internal_ = false;
  Id let_;
};

}  // namespace idg
