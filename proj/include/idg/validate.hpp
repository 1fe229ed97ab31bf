#pragma once

#include <map>
#include <vector>

#include "idg/diagnostic.hpp"
#include "idg/graph.hpp"

namespace idg {

/// Checks every type-fragment condition, including the per-interface cograph
/// check. Empty result iff the fragment is well-shaped.
Diagnostics validate_type_fragment(const TypeGraph& g);

/// Checks every term-fragment condition (arities, scoping, wire-safety) and
/// the internal type-fragment graph. R_DC fragments are only checked for
/// dangling references here; their content is checked by the correspondence
/// module.
Diagnostics validate_term_fragment(const TermGraph& t);

/// True iff the residence forest has exactly one root. Throws UsageError on
/// input that does not validate.
bool is_type(const TypeGraph& g);
bool is_term(const TermGraph& t);

/// Child -> parent edges of the descent relation (attachment, constructor
/// argument, constructor usage) plus the descent roots.
struct DescentForest {
  std::map<Id, Id> parent;
  std::vector<Id> roots;

  /// Ancestors from the component itself (inclusive) up to its root.
  std::vector<Id> chain(const Id& c) const;
};

DescentForest descent_forest(const TermGraph& t);

/// Box depth in the residence forest (root box = 0). Nodes, ports and
/// let-bindings report the depth of the box they reside in.
int residence_depth(const TermGraph& t, const Id& c);

/// True iff box `inner` is `outer` or lies below it.
bool box_within(const TermGraph& t, const Id& inner, const Id& outer);

}  // namespace idg
