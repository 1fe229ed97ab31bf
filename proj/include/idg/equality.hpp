#pragma once

#include <map>
#include <optional>

#include "idg/graph.hpp"

namespace idg {

/// Renaming of the components of one term onto another: term components
/// and internal-type components. Namespaces are preserved by construction.
struct Relabeling {
  std::map<Id, Id> ids;
};

TermGraph relabel(const Relabeling& h, const TermGraph& t);
/// Renames keys only; targets in the external type stay fixed.
Correspondence relabel(const Relabeling& h, const Correspondence& c);

/// A relabeling h with (t1, c1) == (h(t2), h(c2)), or nothing. The external
/// type is held fixed, so c1 and c2 must agree on targets.
std::optional<Relabeling> t_equal(const TermGraph& t1, const Correspondence& c1, const TermGraph& t2,
                                  const Correspondence& c2);

/// As t_equal but ignoring the external correspondences.
std::optional<Relabeling> bare_equal(const TermGraph& t1, const TermGraph& t2);

/// Renaming h of b's components with h(b) == a, or nothing.
std::optional<std::map<Id, Id>> type_isomorphism(const TypeGraph& a, const TypeGraph& b);

TypeGraph relabel(const std::map<Id, Id>& h, const TypeGraph& g);

}  // namespace idg
