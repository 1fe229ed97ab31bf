#pragma once

#include <optional>

#include "idg/diagnostic.hpp"
#include "idg/graph.hpp"

namespace idg {

/// Targets exist and match kind and polarity, boxes and nodes map to
/// interfaces consistently with their constructor ports, and no component
/// is mapped twice; checked for every pair of `c` against `type`.
Diagnostics check_correspondence(const Correspondence& c, const TermGraph& t, const TypeGraph& type);

/// Each R_DC fragment is a correspondence (against the internal types) that
/// maps the let-binding's body box and occurrence nodes to its interface;
/// fragments cover disjoint term components.
Diagnostics check_let_correspondences(const TermGraph& t);

/// `c` maps the root box to the root interface and shares no term component
/// with R_DC.
Diagnostics check_external(const Correspondence& c, const TermGraph& t, const TypeGraph& type);

/// Every box and node occurs exactly once in C ∪ R_DC; every port exactly
/// once unless attached to a let-binding (then never). When `type` is given,
/// the two ends of every resource wire must correspond to fields with the
/// same primitive label.
Diagnostics check_total_coverage(const Correspondence& c, const TermGraph& t, const TypeGraph* type = nullptr);

/// Where a term component is mapped: its target and whether the target
/// lives in the internal types (R_DC) or in the external type (C).
struct Target {
  Id id;
  bool internal = false;
  std::optional<Id> let;  // owning let-binding for R_DC entries
};

/// Looks up a component in C ∪ R_DC.
std::optional<Target> lookup(const Correspondence& c, const TermGraph& t, const Id& component);

}  // namespace idg
