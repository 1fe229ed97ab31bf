#pragma once

#include <map>
#include <optional>
#include <vector>

#include "idg/cograph.hpp"
#include "idg/graph.hpp"
#include "idg/wellformed.hpp"

namespace idg::oracle {

/// Cograph test by recursive decomposition: a graph on two or more
/// vertices is a cograph iff it or its complement is disconnected and every
/// part is a cograph.
bool is_cograph(const AdjacencyMatrix& g);

/// Backtracking over every namespace-preserving bijection from t2's
/// components onto t1's, checking relations as they become fully assigned.
/// Returns the t2 -> t1 renaming.
std::optional<std::map<Id, Id>> t_equal(const TermGraph& t1, const Correspondence& c1, const TermGraph& t2,
                                        const Correspondence& c2);
std::optional<std::map<Id, Id>> bare_equal(const TermGraph& t1, const TermGraph& t2);

/// Every simple alternating cycle, rotated to start at its smallest port
/// and leave it along F, keeping those with no F pair between
/// non-consecutive ports. Nothing when `cap` DFS steps are exceeded.
std::optional<std::vector<std::vector<Id>>> chordless_cycles(const FWGraph& g, std::size_t cap = 20'000'000);

}  // namespace idg::oracle
