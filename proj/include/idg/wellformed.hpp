#pragma once

#include <cstddef>
#include <vector>

#include "idg/diagnostic.hpp"
#include "idg/graph.hpp"

namespace idg {

/// Ports with the two symmetric edge sets used by the well-formedness
/// check. Both relations are stored with first < second.
struct FWGraph {
  std::vector<Id> ports;  // sorted
  Relation f;
  Relation w;
};

/// Builds F from connectivity and descent, W from both wiring relations.
/// Throws UsageError when a port needed for F has no corresponding field.
FWGraph build_fw(const TypeGraph& type, const TermGraph& t, const Correspondence& c);

inline constexpr std::size_t kDefaultCycleSteps = 1'000'000;

struct CycleSearch {
  /// Each cycle starts at its smallest port and leaves it along an F edge.
  std::vector<std::vector<Id>> cycles;  // sorted
  bool limit_hit = false;
};

/// All alternating F/W cycles without an F chord. The step cap applies per
/// start vertex, so the outcome does not depend on thread count.
CycleSearch find_chordless_cycles(const FWGraph& g, std::size_t step_cap = kDefaultCycleSteps);
CycleSearch find_chordless_cycles_serial(const FWGraph& g, std::size_t step_cap = kDefaultCycleSteps);

/// One "ill-formed-cycle" diagnostic per chordless alternating cycle, plus
/// "resource-limit" if the search was cut short.
Diagnostics check_well_formed(const TypeGraph& type, const TermGraph& t, const Correspondence& c,
                              std::size_t step_cap = kDefaultCycleSteps);

}  // namespace idg
